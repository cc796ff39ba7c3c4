#include "qcs/integer.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcs {

Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer floor_div(const Integer& a, const Integer& m) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return q;
}

Integer ceil_div(const Integer& a, const Integer& m) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return q;
}

Integer pow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational pow(const Rational& base, long exp) {
    unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    Rational r(pow(Integer(base.get_num()), e), pow(Integer(base.get_den()), e));
    if (exp < 0) {
        if (r == 0) throw std::domain_error("pow: zero to a negative power");
        r = 1 / r;
    }
    r.canonicalize();
    return r;
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
    ExtendedGcd out;
    mpz_gcdext(out.g.get_mpz_t(), out.s.get_mpz_t(), out.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n < Integer(1) << 40) {
        if (n < 4) return true;
        if (n % 2 == 0) return false;
        for (Integer f = 3; f * f <= n; f += 2)
            if (n % f == 0) return false;
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

bool is_squarefree(long n) {
    if (n == 0) return false;
    unsigned long long m = n < 0 ? 0ULL - static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
    for (unsigned long long f = 2; f * f <= m; ++f) {
        if (m % f == 0) {
            m /= f;
            if (m % f == 0) return false;
        }
    }
    return true;
}

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n) {
    if (n < 1) throw std::domain_error("factor_integer: n must be positive");
    std::vector<std::pair<Integer, unsigned>> out;
    Integer m = n;
    auto strip = [&](const Integer& f) {
        unsigned k = 0;
        while (mpz_divisible_p(m.get_mpz_t(), f.get_mpz_t())) {
            m /= f;
            ++k;
        }
        if (k) out.emplace_back(f, k);
    };
    strip(2);
    for (Integer f = 3; f * f <= m; f += 2) strip(f);
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
    std::vector<Integer> out;
    for (auto& [p, k] : factor_integer(n)) out.push_back(p);
    return out;
}

std::vector<Integer> sqrt_mod_prime(const Integer& a_in, const Integer& p) {
    Integer a = mod_floor(a_in, p);
    if (a == 0) return {Integer(0)};
    if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return {};

    // p - 1 = q * 2^s with q odd
    Integer q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    Integer z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;

    auto powm = [&](const Integer& b, const Integer& e) {
        Integer r;
        mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    };
    Integer c = powm(z, q);
    Integer x = powm(a, (q + 1) / 2);
    Integer t = powm(a, q);
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        Integer t2 = t;
        while (t2 != 1) {
            t2 = t2 * t2 % p;
            ++i;
        }
        Integer b = c;
        for (unsigned long j = 0; j + 1 < m - i; ++j) b = b * b % p;
        x = x * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    Integer other = p - x;
    std::vector<Integer> roots{x, other};
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::size_t hash_value(const Integer& z) noexcept {
    const mpz_srcptr raw = z.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(raw->_mp_size) * 0x9e3779b97f4a7c15ULL;
    const std::size_t limbs = mpz_size(raw);
    for (std::size_t i = 0; i < limbs; ++i) {
        h ^= static_cast<std::size_t>(mpz_getlimbn(raw, i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace qcs
