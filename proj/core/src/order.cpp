#include "qcs/order.hpp"

#include <map>

#include "qcs/error.hpp"

namespace qcs {

QuadInt pow_mod(const QuadInt& z, const Integer& exp, const Ideal& ideal) {
    if (exp < 0) throw ValidationError("pow_mod: negative exponent");
    QuadInt result = ideal.reduce(QuadInt(z.field(), 1, 0));
    QuadInt base = ideal.reduce(z);
    const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = ideal.reduce(result * result);
        if (mpz_tstbit(exp.get_mpz_t(), i)) result = ideal.reduce(result * base);
    }
    return result;
}

bool is_unit_mod(const QuadInt& beta, const Ideal& ideal) {
    if (ideal.is_unit()) return true;
    if (beta.is_zero()) return false;
    return (Ideal::principal(beta) + ideal).is_unit();
}

Integer ord_mod(const QuadInt& beta, const Ideal& ideal) {
    if (!is_unit_mod(beta, ideal))
        throw ValidationError("ord_mod: " + to_string(beta) + " is not a unit mod " + to_string(ideal));
    const QuadInt one = ideal.reduce(QuadInt(beta.field(), 1, 0));
    const QuadInt step = ideal.reduce(beta);
    QuadInt cur = step;
    Integer n = 1;
    while (!(cur == one)) {
        cur = ideal.reduce(cur * step);
        ++n;
    }
    return n;
}

Stabilization stabilization(const QuadInt& beta, const PrimeIdeal& prime) {
    if (prime.hnf.contains(beta))
        throw ValidationError("stabilization: " + to_string(beta) + " lies in the prime " + to_string(prime.hnf));
    if (norm(beta) <= 1)
        throw ValidationError("stabilization: |beta| must exceed 1 (" + to_string(beta) + " is a root of unity)");

    PrimePowers powers(prime);
    const unsigned first = static_cast<unsigned>(prime.e) + 1;
    Stabilization out{prime, beta, first, ord_mod(beta, powers.power(first))};
    // beta^m - 1 != 0, so this terminates.
    while (pow_mod(beta, out.m, powers.power(out.n0 + 1)) == powers.power(out.n0 + 1).reduce(QuadInt(beta.field(), 1, 0)))
        ++out.n0;
    return out;
}

PrimePowerOrder ord_prime_power(const Stabilization& stab, unsigned n) {
    if (n == 0) throw ValidationError("ord_prime_power: n must be positive");
    PrimePowerOrder out{Integer(0), stab.n0, stab.m, false};
    if (n <= stab.n0) {
        out.order = ord_mod(stab.beta, stab.prime.hnf.pow(n));
    } else {
        const unsigned e = static_cast<unsigned>(stab.prime.e);
        const unsigned lift = (n - stab.n0 + e - 1) / e;
        out.order = stab.m * pow(stab.prime.p, lift);
        out.used_closed_form = true;
    }
    return out;
}

PrimePowerOrder ord_prime_power(const QuadInt& beta, const PrimeIdeal& prime, unsigned n) {
    return ord_prime_power(stabilization(beta, prime), n);
}

LowerBoundSpec c2_constant(const QuadInt& beta, std::span<const PrimeIdeal> primes) {
    if (primes.empty()) throw ValidationError("c2_constant: empty prime list");
    LowerBoundSpec out{beta, {primes.begin(), primes.end()}, {}, {}, Rational(1)};
    Integer denom = 1;
    for (std::size_t j = 0; j < primes.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i)
            if (primes[i] == primes[j]) throw ValidationError("c2_constant: primes must be distinct");
        out.stabilizations.push_back(stabilization(beta, primes[j]));
        out.m.push_back(out.stabilizations.back().n0);
        denom *= pow(primes[j].p, out.m.back());
    }
    out.c2 = Rational(1, denom);
    out.c2.canonicalize();
    return out;
}

Integer rational_denominator_bound(std::span<const PrimeIdeal> primes, std::span<const unsigned> tuple) {
    if (primes.size() != tuple.size()) throw ValidationError("tuple length does not match the prime list");
    std::map<Integer, unsigned> exponent;
    for (std::size_t j = 0; j < primes.size(); ++j) {
        const unsigned e = static_cast<unsigned>(primes[j].e);
        const unsigned c = (tuple[j] + e - 1) / e;
        auto& slot = exponent[primes[j].p];
        slot = std::max(slot, c);
    }
    Integer out = 1;
    for (const auto& [p, k] : exponent) out *= pow(p, k);
    return out;
}

Rational order_lower_bound(const LowerBoundSpec& spec, std::span<const unsigned> tuple) {
    bool any = false;
    for (unsigned n : tuple) any = any || n > 0;
    if (!any) throw ValidationError("order_lower_bound: tuple must not be all zero");
    Rational out = spec.c2 * Rational(rational_denominator_bound(spec.primes, tuple));
    out.canonicalize();
    return out;
}

}  // namespace qcs
