#include "qcs/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "qcs/error.hpp"

namespace qcs {

Ideal Ideal::from_lattice(const Field& field, std::span<const QuadInt> vectors) {
    // Triangular basis {(a, 0), (bx, c)} maintained by unimodular updates.
    Integer a = 0, bx = 0, c = 0;
    for (const QuadInt& v : vectors) {
        if (!(v.field() == field)) throw ValidationError("ideal: generators from different fields");
        if (v.y() == 0) {
            mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), v.x().get_mpz_t());
            continue;
        }
        if (c == 0) {
            bx = v.y() < 0 ? Integer(-v.x()) : v.x();
            c = abs(v.y());
            continue;
        }
        const ExtendedGcd eg = extended_gcd(c, v.y());
        const Integer yg = v.y() / eg.g;
        const Integer cg = c / eg.g;
        const Integer eliminated = yg * bx - cg * v.x();
        mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), eliminated.get_mpz_t());
        bx = eg.s * bx + eg.t * v.x();
        c = eg.g;
    }
    if (a == 0 || c == 0) throw ValidationError("ideal: generators do not span a full-rank lattice");
    Integer b = mod_floor(bx, a);
    if (!mpz_divisible_p(a.get_mpz_t(), c.get_mpz_t()) || !mpz_divisible_p(b.get_mpz_t(), c.get_mpz_t()))
        throw std::logic_error("ideal: lattice is not an O_K-ideal");
    return Ideal(field, std::move(a), std::move(b), std::move(c));
}

Ideal Ideal::from_generators(std::span<const QuadInt> gens) {
    if (gens.empty()) throw ValidationError("ideal: no generators");
    const Field& field = gens.front().field();
    const QuadInt omega(field, 0, 1);
    std::vector<QuadInt> vectors;
    vectors.reserve(2 * gens.size());
    bool any_nonzero = false;
    for (const QuadInt& g : gens) {
        require_same_field(g, gens.front());
        if (g.is_zero()) continue;
        any_nonzero = true;
        vectors.push_back(g);
        vectors.push_back(g * omega);
    }
    if (!any_nonzero) throw ValidationError("ideal: all generators are zero");
    return from_lattice(field, vectors);
}

Ideal Ideal::from_generators(std::initializer_list<QuadInt> gens) {
    return from_generators(std::span<const QuadInt>(gens.begin(), gens.size()));
}

Ideal Ideal::unit(const Field& field) { return Ideal(field, 1, 0, 1); }

Ideal Ideal::from_hnf(const Field& field, Integer a, Integer b, Integer c) {
    if (a <= 0 || c <= 0 || b < 0 || b >= a)
        throw ValidationError("ideal: HNF requires a > 0, c > 0, 0 <= b < a");
    const QuadInt g1(field, a, 0), g2(field, b, c);
    Ideal out = from_generators({g1, g2});
    if (out.a_ != a || out.b_ != b || out.c_ != c)
        throw ValidationError("ideal: [" + a.get_str() + "," + b.get_str() + "," + c.get_str() +
                              "] is not the HNF of an ideal");
    return out;
}

bool Ideal::contains(const QuadInt& z) const {
    if (!(z.field() == field_)) throw ValidationError("ideal: element from a different field");
    if (!mpz_divisible_p(z.y().get_mpz_t(), c_.get_mpz_t())) return false;
    const Integer t = z.y() / c_;
    const Integer rest = z.x() - t * b_;
    return mpz_divisible_p(rest.get_mpz_t(), a_.get_mpz_t()) != 0;
}

QuadInt Ideal::reduce(const QuadInt& z) const {
    if (!(z.field() == field_)) throw ValidationError("ideal: element from a different field");
    const Integer t = floor_div(z.y(), c_);
    const Integer y = z.y() - t * c_;
    const Integer x = mod_floor(z.x() - t * b_, a_);
    return QuadInt(field_, x, y);
}

std::vector<QuadInt> Ideal::basis() const { return {QuadInt(field_, a_, 0), QuadInt(field_, b_, c_)}; }

Ideal Ideal::operator*(const Ideal& o) const {
    if (!(field_ == o.field_)) throw ValidationError("ideal: product of ideals from different fields");
    const auto lhs = basis();
    const auto rhs = o.basis();
    const std::vector<QuadInt> products{lhs[0] * rhs[0], lhs[0] * rhs[1], lhs[1] * rhs[0], lhs[1] * rhs[1]};
    return from_lattice(field_, products);
}

Ideal Ideal::operator+(const Ideal& o) const {
    if (!(field_ == o.field_)) throw ValidationError("ideal: sum of ideals from different fields");
    auto vectors = basis();
    for (auto& v : o.basis()) vectors.push_back(v);
    return from_lattice(field_, vectors);
}

Ideal Ideal::pow(unsigned k) const {
    Ideal result = unit(field_);
    Ideal base = *this;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

Ideal Ideal::conjugate() const {
    const std::vector<QuadInt> v{qcs::conj(QuadInt(field_, a_, 0)), qcs::conj(QuadInt(field_, b_, c_))};
    return from_lattice(field_, v);
}

bool Ideal::divides(const Ideal& other) const {
    for (const auto& v : other.basis())
        if (!contains(v)) return false;
    return true;
}

std::strong_ordering operator<=>(const Ideal& l, const Ideal& r) {
    if (auto c = l.field_.d() <=> r.field_.d(); c != 0) return c;
    if (int c = cmp(l.a_, r.a_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (int c = cmp(l.b_, r.b_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (int c = cmp(l.c_, r.c_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Ideal ideal_from_generators(std::span<const QuadInt> gens) { return Ideal::from_generators(gens); }
Ideal ideal_mul(const Ideal& i, const Ideal& j) { return i * j; }
QuadInt reduce_mod(const QuadInt& z, const Ideal& i) { return i.reduce(z); }

std::string to_string(const Ideal& i) {
    return "[" + i.a().get_str() + "," + i.b().get_str() + "," + i.c().get_str() + "]";
}

std::strong_ordering operator<=>(const PrimeIdeal& l, const PrimeIdeal& r) {
    if (int c = cmp(l.p, r.p); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return l.hnf <=> r.hnf;
}

std::string to_string(SplitKind k) {
    switch (k) {
        case SplitKind::ramified: return "ramified";
        case SplitKind::split: return "split";
        case SplitKind::inert: return "inert";
    }
    return "?";
}

namespace {

// Roots in [0, p) of X^2 - t X + n, the minimal polynomial of w.
std::vector<Integer> omega_roots_mod(const Field& field, const Integer& p) {
    const Integer t = field.omega_trace();
    const Integer n = field.omega_norm();
    std::vector<Integer> roots;
    if (p == 2) {
        for (int r = 0; r < 2; ++r)
            if (mod_floor(Integer(r * r) - t * r + n, p) == 0) roots.emplace_back(r);
        return roots;
    }
    const Integer inv2 = (p + 1) / 2;
    for (const Integer& s : sqrt_mod_prime(t * t - 4 * n, p)) roots.push_back(mod_floor((t + s) * inv2, p));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

PrimeIdeal linear_prime(const Field& field, const Integer& p, const Integer& r, int e) {
    const QuadInt gp(field, p, 0), gr(field, -r, 1);
    return PrimeIdeal{Ideal::from_generators({gp, gr}), p, e, 1};
}

}  // namespace

PrimeSplitting factor_rational_prime(const Field& field, const Integer& p) {
    if (!is_prime(p)) throw ValidationError("factor_rational_prime: " + p.get_str() + " is not prime");
    const Integer disc = field.disc();
    const int kron = mpz_kronecker(disc.get_mpz_t(), p.get_mpz_t());

    PrimeSplitting out{SplitKind::inert, p, {}, omega_roots_mod(field, p)};
    switch (out.roots.size()) {
        case 0:
            out.kind = SplitKind::inert;
            out.primes.push_back(PrimeIdeal{Ideal::principal(QuadInt(field, p, 0)), p, 1, 2});
            break;
        case 1:
            out.kind = SplitKind::ramified;
            out.primes.push_back(linear_prime(field, p, out.roots[0], 2));
            break;
        default:
            out.kind = SplitKind::split;
            for (const Integer& r : out.roots) out.primes.push_back(linear_prime(field, p, r, 1));
            std::sort(out.primes.begin(), out.primes.end());
            break;
    }
    const int expected = out.kind == SplitKind::ramified ? 0 : out.kind == SplitKind::split ? 1 : -1;
    if (kron != expected) throw std::logic_error("factor_rational_prime: Kronecker symbol disagrees with root count");
    return out;
}

PrimeIdeal prime_above(const Field& field, const Integer& p, const Integer& r) {
    const PrimeSplitting s = factor_rational_prime(field, p);
    if (s.kind == SplitKind::inert) return s.primes.front();
    const Integer rr = mod_floor(r, p);
    if (std::find(s.roots.begin(), s.roots.end(), rr) == s.roots.end())
        throw ValidationError("prime_above: " + r.get_str() + " is not a root of the minimal polynomial of w mod " +
                              p.get_str());
    return linear_prime(field, p, rr, s.kind == SplitKind::ramified ? 2 : 1);
}

Ideal ElementFactorization::product() const {
    Ideal out = Ideal::unit(element.field());
    for (const auto& f : factors) out = out * f.prime.hnf.pow(f.exponent);
    return out;
}

ElementFactorization factor_element(const QuadInt& alpha) {
    const Integer n = norm(alpha);
    if (n == 0) throw ValidationError("factor_element: zero has no factorization");
    if (n == 1) throw ValidationError("factor_element: " + to_string(alpha) + " is a unit");
    ElementFactorization out{alpha, {}};
    for (const auto& [p, k] : factor_integer(n)) {
        for (const PrimeIdeal& prime : factor_rational_prime(alpha.field(), p).primes) {
            const unsigned b = valuation(alpha, prime);
            if (b > 0) out.factors.push_back(IdealFactor{prime, b});
        }
    }
    if (!(out.product() == Ideal::principal(alpha)))
        throw std::logic_error("factor_element: reconstruction failed for " + to_string(alpha));
    return out;
}

PrimePowers::PrimePowers(PrimeIdeal prime) : prime_(std::move(prime)) {
    powers_.push_back(Ideal::unit(prime_.hnf.field()));
}

Ideal PrimePowers::power(unsigned k) const {
    std::lock_guard lock(mutex_);
    while (powers_.size() <= k) powers_.push_back(powers_.back() * prime_.hnf);
    return powers_[k];
}

unsigned valuation(const QuadInt& z, const PrimePowers& powers) {
    if (z.is_zero()) throw ValidationError("valuation: zero has infinite valuation");
    const Integer nz = norm(z);
    unsigned k = 0;
    while (true) {
        const Ideal next = powers.power(k + 1);
        if (next.norm() > nz || !next.contains(z)) return k;
        ++k;
    }
}

unsigned valuation(const QuadInt& z, const PrimeIdeal& prime) {
    PrimePowers powers(prime);
    return valuation(z, powers);
}

bool are_coprime(const QuadInt& alpha, const QuadInt& beta) {
    require_same_field(alpha, beta);
    if (alpha.is_zero() || beta.is_zero()) throw ValidationError("are_coprime: zero argument");
    return Ideal::from_generators({alpha, beta}).is_unit();
}

Ideal ideal_product(std::span<const PrimeIdeal> primes, std::span<const unsigned> exponents) {
    if (primes.size() != exponents.size()) throw ValidationError("ideal_product: size mismatch");
    if (primes.empty()) throw ValidationError("ideal_product: no primes");
    Ideal out = Ideal::unit(primes.front().hnf.field());
    for (std::size_t j = 0; j < primes.size(); ++j) out = out * primes[j].hnf.pow(exponents[j]);
    return out;
}

}  // namespace qcs
