#include "qcs/exact.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qcs/error.hpp"

namespace qcs {

int sign_sqrt_form(const Integer& a, const Integer& b, const Integer& n) {
    if (n < 0) throw ValidationError("sign_sqrt_form: negative radicand");
    const int sa = sgn(a);
    const int sb = n == 0 ? 0 : sgn(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with b^2 n.
    const int c = cmp(a * a, b * b * n);
    if (c == 0) return 0;
    return c > 0 ? sa : sb;
}

double log_of(const Rational& r);

namespace {

double log_int(const Integer& z) {
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::numbers::ln2;
}

double log_scaled(const ScaledRational& s) { return qcs::log_of(s.value) + s.log2_shift.get_d() * std::numbers::ln2; }

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Sign of s^q - base^p.
int cmp_power(const ScaledRational& s, unsigned long q, const Integer& base, const Integer& p) {
    const Rational shift = s.log2_shift * q;
    if (shift.get_den() != 1) throw std::logic_error("cmp_power: exponent does not clear the shift");
    const long e2 = shift.get_num().get_si();
    Integer lhs = pow(Integer(s.value.get_num()), q);
    Integer rhs = pow(Integer(s.value.get_den()), q);
    if (e2 > 0) lhs <<= static_cast<mp_bitcnt_t>(e2);
    else if (e2 < 0) rhs <<= static_cast<mp_bitcnt_t>(-e2);
    if (p > 0) rhs *= pow(base, p.get_ui());
    else if (p < 0) lhs *= pow(base, Integer(-p).get_ui());
    return cmp(lhs, rhs);
}

constexpr unsigned long kMaxExponent = 1UL << 18;

}  // namespace

double log_of(const Rational& r) {
    if (r <= 0) throw ValidationError("log_of: non-positive argument");
    return log_int(Integer(r.get_num())) - log_int(Integer(r.get_den()));
}

std::optional<bool> log_ratio_greater(const ScaledRational& x, const Integer& k, const ScaledRational& y,
                                      const Integer& n) {
    if (x.value <= 0 || y.value <= 0) throw ValidationError("log_ratio_greater: non-positive argument");
    if (k < 2 || n < 2) throw ValidationError("log_ratio_greater: bases must be >= 2");
    const double l1 = log_scaled(x) / log_int(k);
    const double l2 = log_scaled(y) / log_int(n);
    const double gap = std::abs(l1 - l2);
    if (!(gap > 1e-12 * (1.0 + std::abs(l1) + std::abs(l2)))) return std::nullopt;

    const Integer step = lcm(Integer(x.log2_shift.get_den()), Integer(y.log2_shift.get_den()));
    if (step > kMaxExponent) return std::nullopt;
    unsigned long q = step.get_ui();
    while (static_cast<double>(q) * gap < 4.0 && q <= kMaxExponent / 2) q *= 2;

    const bool greater = l1 > l2;
    for (int attempt = 0; attempt < 4 && q <= kMaxExponent; ++attempt, q *= 2) {
        Integer p;
        mpz_set_d(p.get_mpz_t(), std::round(static_cast<double>(q) * (l1 + l2) / 2));
        // greater: x^q > k^p and y^q < n^p, i.e. log_k x > p/q > log_n y.
        const int cx = cmp_power(x, q, k, p);
        const int cy = cmp_power(y, q, n, p);
        if (greater && cx > 0 && cy < 0) return true;
        if (!greater && cx < 0 && cy > 0) return false;
    }
    return std::nullopt;
}

}  // namespace qcs
