#pragma once

#include <span>
#include <vector>

#include "qcs/ideal.hpp"

namespace qcs {

/// z^exp reduced modulo I.
QuadInt pow_mod(const QuadInt& z, const Integer& exp, const Ideal& ideal);

/// True iff beta is invertible in O_K / I.
bool is_unit_mod(const QuadInt& beta, const Ideal& ideal);

/// Multiplicative order of beta modulo I by sequential powering. Throws
/// ValidationError when beta is not a unit mod I.
Integer ord_mod(const QuadInt& beta, const Ideal& ideal);

/// m = ord of beta mod P^(e+1) and n0 = v_P(beta^m - 1). From n0 on the order
/// modulo P^(n0+n) is m * p^ceil(n/e).
struct Stabilization {
    PrimeIdeal prime;
    QuadInt beta;
    unsigned n0 = 0;
    Integer m;
};

Stabilization stabilization(const QuadInt& beta, const PrimeIdeal& prime);

struct PrimePowerOrder {
    Integer order;
    unsigned n0 = 0;
    Integer m;
    bool used_closed_form = false;
};

PrimePowerOrder ord_prime_power(const QuadInt& beta, const PrimeIdeal& prime, unsigned n);
PrimePowerOrder ord_prime_power(const Stabilization& stab, unsigned n);

/// c2 = 1 / prod p_j^{m_j} with m_j taken as the stabilization exponent n0_j.
struct LowerBoundSpec {
    QuadInt beta;
    std::vector<PrimeIdeal> primes;
    std::vector<Stabilization> stabilizations;
    std::vector<unsigned> m;
    Rational c2;
};

LowerBoundSpec c2_constant(const QuadInt& beta, std::span<const PrimeIdeal> primes);

/// c2 * prod_p p^{max ceil(n_j/e_j) over primes above p}.
Rational order_lower_bound(const LowerBoundSpec& spec, std::span<const unsigned> tuple);

/// prod_p p^{max_{j above p} ceil(n_j / e_j)}.
Integer rational_denominator_bound(std::span<const PrimeIdeal> primes, std::span<const unsigned> tuple);

}  // namespace qcs
