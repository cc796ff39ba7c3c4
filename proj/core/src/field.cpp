#include "qcs/field.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>

#include "qcs/error.hpp"

namespace qcs {

Field Field::make(long d) {
    if (d >= 0) throw ValidationError("field: d must be negative, got " + std::to_string(d));
    if (!is_squarefree(d)) throw ValidationError("field: d must be squarefree, got " + std::to_string(d));
    const bool half = ((d % 4) + 4) % 4 == 1;
    return Field(d, half);
}

std::complex<double> Field::omega() const {
    const double s = std::sqrt(static_cast<double>(-d_));
    return half_ ? std::complex<double>(0.5, s / 2) : std::complex<double>(0.0, s);
}

bool Field::is_ufd() const noexcept {
    static constexpr std::array<long, 9> kClassNumberOne{-1, -2, -3, -7, -11, -19, -43, -67, -163};
    return std::find(kClassNumberOne.begin(), kClassNumberOne.end(), d_) != kClassNumberOne.end();
}

void require_same_field(const QuadInt& a, const QuadInt& b) {
    if (!(a.field() == b.field()))
        throw ValidationError("operands belong to different fields (d=" + std::to_string(a.field().d()) +
                              " vs d=" + std::to_string(b.field().d()) + ")");
}

QuadInt& QuadInt::operator+=(const QuadInt& o) {
    require_same_field(*this, o);
    x_ += o.x_;
    y_ += o.y_;
    return *this;
}

QuadInt& QuadInt::operator-=(const QuadInt& o) {
    require_same_field(*this, o);
    x_ -= o.x_;
    y_ -= o.y_;
    return *this;
}

QuadInt& QuadInt::operator*=(const QuadInt& o) {
    require_same_field(*this, o);
    // w^2 = trace*w - norm
    const Integer yy = y_ * o.y_;
    Integer nx = x_ * o.x_ - field_.omega_norm() * yy;
    Integer ny = x_ * o.y_ + y_ * o.x_ + field_.omega_trace() * yy;
    x_ = std::move(nx);
    y_ = std::move(ny);
    return *this;
}

QuadInt& QuadInt::operator*=(const Integer& k) {
    x_ *= k;
    y_ *= k;
    return *this;
}

QuadInt arith(const QuadInt& a, const QuadInt& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
    }
    throw ValidationError("arith: unknown operation");
}

QuadInt conj(const QuadInt& z) {
    // conj(w) = trace - w
    return QuadInt(z.field(), z.x() + z.field().omega_trace() * z.y(), -z.y());
}

Integer norm(const QuadInt& z) {
    const Field& f = z.field();
    return z.x() * z.x() + f.omega_trace() * z.x() * z.y() + f.omega_norm() * z.y() * z.y();
}

Integer trace(const QuadInt& z) { return 2 * z.x() + z.field().omega_trace() * z.y(); }

QuadInt pow(const QuadInt& z, unsigned long exp) {
    QuadInt result(z.field(), 1, 0);
    QuadInt base = z;
    while (exp) {
        if (exp & 1) result *= base;
        exp >>= 1;
        if (exp) base *= base;
    }
    return result;
}

std::optional<QuadInt> exact_div(const QuadInt& a, const Integer& k) {
    if (k == 0) throw ValidationError("exact_div: division by zero");
    if (!mpz_divisible_p(a.x().get_mpz_t(), k.get_mpz_t()) || !mpz_divisible_p(a.y().get_mpz_t(), k.get_mpz_t()))
        return std::nullopt;
    Integer x, y;
    mpz_divexact(x.get_mpz_t(), a.x().get_mpz_t(), k.get_mpz_t());
    mpz_divexact(y.get_mpz_t(), a.y().get_mpz_t(), k.get_mpz_t());
    return QuadInt(a.field(), std::move(x), std::move(y));
}

std::optional<QuadInt> exact_div(const QuadInt& a, const QuadInt& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw ValidationError("exact_div: division by zero");
    return exact_div(a * conj(b), norm(b));
}

Integer content(const QuadInt& z) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), z.x().get_mpz_t(), z.y().get_mpz_t());
    return g;
}

std::complex<double> embed(const QuadInt& z) {
    return z.x().get_d() + z.y().get_d() * z.field().omega();
}

std::string to_string(const QuadInt& z) {
    if (z.y() == 0) return z.x().get_str();
    std::string ypart;
    if (z.y() == 1) ypart = "w";
    else if (z.y() == -1) ypart = "-w";
    else ypart = z.y().get_str() + "*w";
    if (z.x() == 0) return ypart;
    if (z.y() > 0) return z.x().get_str() + "+" + ypart;
    return z.x().get_str() + ypart;
}

namespace {

// Grammar: [sign] term { sign term }, term := INT | INT*w | INT w | w
class ElementParser {
public:
    ElementParser(std::string_view text, const Field& field) : text_(text), field_(field) {}

    QuadInt parse() {
        skip_space();
        if (pos_ == text_.size()) fail("empty element");
        Integer x = 0, y = 0;
        bool first = true;
        while (true) {
            skip_space();
            if (pos_ == text_.size()) break;
            int sign = 1;
            if (text_[pos_] == '+' || text_[pos_] == '-') {
                sign = text_[pos_] == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            parse_term(sign, x, y);
        }
        return QuadInt(field_, x, y);
    }

private:
    void parse_term(int sign, Integer& x, Integer& y) {
        const std::size_t start = pos_;
        Integer coeff = 1;
        bool have_number = false;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            coeff = Integer(std::string(text_.substr(start, pos_ - start)));
            have_number = true;
            skip_space();
        }
        bool have_w = false;
        if (pos_ < text_.size() && text_[pos_] == '*') {
            if (!have_number) fail("'*' without coefficient");
            ++pos_;
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] != 'w') fail("expected 'w' after '*'");
        }
        if (pos_ < text_.size() && text_[pos_] == 'w') {
            ++pos_;
            have_w = true;
        }
        if (!have_number && !have_w) fail("expected integer or 'w'");
        (have_w ? y : x) += sign * coeff;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const {
        std::string token = pos_ < text_.size() ? std::string(1, text_[pos_]) : std::string("<end>");
        throw ParseError("cannot parse element '" + std::string(text_) + "': " + why + " at offset " +
                             std::to_string(pos_) + " (token '" + token + "')",
                         token);
    }

    std::string_view text_;
    const Field& field_;
    std::size_t pos_ = 0;
};

}  // namespace

QuadInt parse_element(std::string_view text, const Field& field) { return ElementParser(text, field).parse(); }

FieldElement::FieldElement(QuadInt num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw ValidationError("field element: zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    Integer g;
    const Integer c = content(num_);
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
        num_ = *exact_div(num_, g);
        den_ /= g;
    }
}

FieldElement FieldElement::ratio(const QuadInt& v, const QuadInt& u) {
    require_same_field(v, u);
    if (u.is_zero()) throw ValidationError("field element: zero denominator");
    return FieldElement(v * conj(u), norm(u));
}

Rational FieldElement::abs_sq() const {
    Rational r(norm(num_), den_ * den_);
    r.canonicalize();
    return r;
}

std::complex<double> FieldElement::embed() const { return qcs::embed(num_) / den_.get_d(); }

namespace {

std::string_view strip_parens(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
    return s;
}

}  // namespace

FieldElement parse_field_element(std::string_view text, const Field& field) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return FieldElement(parse_element(strip_parens(text), field));
    QuadInt v = parse_element(strip_parens(text.substr(0, slash)), field);
    QuadInt u = parse_element(strip_parens(text.substr(slash + 1)), field);
    if (u.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'", "0");
    return FieldElement::ratio(v, u);
}

std::string to_string(const FieldElement& z) {
    if (z.den() == 1) return to_string(z.num());
    const std::string n = to_string(z.num());
    const bool compound = z.num().x() != 0 && z.num().y() != 0;
    return (compound ? "(" + n + ")" : n) + "/" + z.den().get_str();
}

}  // namespace qcs
