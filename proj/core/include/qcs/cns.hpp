#pragma once

#include <cstddef>
#include <vector>

#include "qcs/field.hpp"

namespace qcs {

/// Base theta = -n + i over Z[i] with digits {0, ..., n^2}.
struct CnsBasis {
    unsigned long n = 1;
    QuadInt theta;
    unsigned long digit_count = 2;

    static CnsBasis make(const Field& field, unsigned long n);
};

/// Digits of gamma, least significant first; empty for gamma = 0.
std::vector<unsigned long> cns_expand(const QuadInt& gamma, const CnsBasis& basis);

/// Horner evaluation; rejects digits above n^2.
QuadInt cns_evaluate(const std::vector<unsigned long>& digits, const CnsBasis& basis);

/// All sum_{k=-l}^{l} xi_k theta^k with xi_k in {0..n^2}, deduplicated, as
/// numerators over theta^l (value = numerator / theta^l), sorted by
/// coordinates. Throws CapExceeded above `cap` digit words.
std::vector<QuadInt> dyadic_alpha_description(const CnsBasis& basis, unsigned l, std::size_t cap = 1u << 22);

}  // namespace qcs
