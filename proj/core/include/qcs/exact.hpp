#pragma once

#include <optional>

#include "qcs/integer.hpp"

namespace qcs {

/// Sign (-1, 0, +1) of a + b*sqrt(n) for n >= 0, decided without rounding.
int sign_sqrt_form(const Integer& a, const Integer& b, const Integer& n);

/// value * 2^log2_shift with value > 0.
struct ScaledRational {
    Rational value;
    Rational log2_shift = 0;
};

double log_of(const Rational& r);

/// Decides log_k(x) > log_n(y) for integers k, n >= 2 exactly, by exhibiting a
/// rational p/q strictly between the two logarithms and checking
/// x^q vs k^p and y^q vs n^p in integer arithmetic. Returns nullopt when the
/// two sides are too close to separate within the exponent budget.
std::optional<bool> log_ratio_greater(const ScaledRational& x, const Integer& k, const ScaledRational& y,
                                      const Integer& n);

}  // namespace qcs
