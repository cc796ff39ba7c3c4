#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "qcs/integer.hpp"

namespace qcs {

/// An imaginary quadratic field Q(sqrt d) together with its integral basis
/// {1, w}. For d = 1 (mod 4) the basis element is w = (1 + sqrt d)/2 and the
/// discriminant is d; otherwise w = sqrt d and the discriminant is 4d.
class Field {
public:
    /// Throws ValidationError unless d < 0 is squarefree.
    static Field make(long d);
    /// Q(i); also the field of default-constructed elements.
    static Field gaussian() noexcept { return Field(-1, false); }

    long d() const noexcept { return d_; }
    bool half_basis() const noexcept { return half_; }
    long disc() const noexcept { return half_ ? d_ : 4 * d_; }

    // Minimal polynomial of w is X^2 - trace*X + norm.
    long omega_trace() const noexcept { return half_ ? 1 : 0; }
    long omega_norm() const noexcept { return half_ ? (1 - d_) / 4 : -d_; }

    std::complex<double> omega() const;

    /// True for the nine d with class number one.
    bool is_ufd() const noexcept;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(long d, bool half) : d_(d), half_(half) {}
    long d_ = -1;
    bool half_ = false;
};

/// An element x + y*w of the ring of integers of a Field.
class QuadInt {
public:
    /// Zero of Z[i].
    QuadInt() : field_(Field::gaussian()) {}
    QuadInt(const Field& field, Integer x = 0, Integer y = 0)
        : field_(field), x_(std::move(x)), y_(std::move(y)) {}

    const Field& field() const noexcept { return field_; }
    const Integer& x() const noexcept { return x_; }
    const Integer& y() const noexcept { return y_; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }

    QuadInt operator-() const { return QuadInt(field_, -x_, -y_); }
    QuadInt& operator+=(const QuadInt& o);
    QuadInt& operator-=(const QuadInt& o);
    QuadInt& operator*=(const QuadInt& o);
    QuadInt& operator*=(const Integer& k);

    friend QuadInt operator+(QuadInt a, const QuadInt& b) { return a += b; }
    friend QuadInt operator-(QuadInt a, const QuadInt& b) { return a -= b; }
    friend QuadInt operator*(QuadInt a, const QuadInt& b) { return a *= b; }
    friend QuadInt operator*(QuadInt a, const Integer& k) { return a *= k; }
    friend QuadInt operator*(const Integer& k, QuadInt a) { return a *= k; }

    friend bool operator==(const QuadInt& a, const QuadInt& b) {
        return a.field_ == b.field_ && a.x_ == b.x_ && a.y_ == b.y_;
    }

private:
    Field field_;
    Integer x_, y_;
};

enum class ArithOp { add, sub, mul };
QuadInt arith(const QuadInt& a, const QuadInt& b, ArithOp op);

QuadInt conj(const QuadInt& z);
Integer norm(const QuadInt& z);
Integer trace(const QuadInt& z);
QuadInt pow(const QuadInt& z, unsigned long exp);

/// q with a = b*q, or nullopt when b does not divide a. Throws on b = 0.
std::optional<QuadInt> exact_div(const QuadInt& a, const QuadInt& b);

/// Divides both coordinates by the rational integer k; nullopt if inexact.
std::optional<QuadInt> exact_div(const QuadInt& a, const Integer& k);

/// gcd of the two coordinates (the largest rational integer dividing z).
Integer content(const QuadInt& z);

std::complex<double> embed(const QuadInt& z);

/// Canonical text: "x", "y*w" or "x+y*w"/"x-y*w".
std::string to_string(const QuadInt& z);

/// Parses `x`, `x+y*w`, `x-y*w`, `w`, `-3*w+1`, ... (spaces allowed).
QuadInt parse_element(std::string_view text, const Field& field);

void require_same_field(const QuadInt& a, const QuadInt& b);

struct QuadIntHash {
    std::size_t operator()(const QuadInt& z) const noexcept {
        return hash_value(z.x()) * 31 + hash_value(z.y());
    }
};

/// An element of K written as numerator / denominator with a positive
/// rational-integer denominator and no common rational factor.
class FieldElement {
public:
    explicit FieldElement(QuadInt num) : num_(std::move(num)), den_(1) {}
    FieldElement(QuadInt num, Integer den);

    /// v / u for an arbitrary nonzero u in O_K (denominator rationalised).
    static FieldElement ratio(const QuadInt& v, const QuadInt& u);

    const QuadInt& num() const noexcept { return num_; }
    const Integer& den() const noexcept { return den_; }
    const Field& field() const noexcept { return num_.field(); }

    bool is_integral() const { return den_ == 1; }
    Rational abs_sq() const;
    std::complex<double> embed() const;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

private:
    QuadInt num_;
    Integer den_;
};

/// "v" or "v/u" with v, u element syntax.
FieldElement parse_field_element(std::string_view text, const Field& field);
std::string to_string(const FieldElement& z);

}  // namespace qcs
