#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace qcs {

using Integer = mpz_class;
using Rational = mpq_class;

// Floor-style modulus: result in [0, |m|).
Integer mod_floor(const Integer& a, const Integer& m);
Integer floor_div(const Integer& a, const Integer& m);
Integer ceil_div(const Integer& a, const Integer& m);
Integer pow(const Integer& base, unsigned long exp);
Rational pow(const Rational& base, long exp);

// g = gcd(a, b) = s*a + t*b.
struct ExtendedGcd {
    Integer g, s, t;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

bool is_prime(const Integer& n);
bool is_squarefree(long n);

// Trial division; ascending primes with multiplicity. Requires n >= 1.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

// Distinct primes dividing n, ascending.
std::vector<Integer> prime_divisors(const Integer& n);

// Square roots of a modulo an odd prime p (Tonelli-Shanks); empty if a is a
// non-residue. Roots are returned in [0, p) ascending.
std::vector<Integer> sqrt_mod_prime(const Integer& a, const Integer& p);

std::size_t hash_value(const Integer& z) noexcept;

}  // namespace qcs
