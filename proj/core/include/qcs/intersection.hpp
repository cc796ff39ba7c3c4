#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcs/fractal.hpp"
#include "qcs/ideal.hpp"
#include "qcs/membership.hpp"
#include "qcs/order.hpp"

namespace qcs {

enum class ApplicableCase { none, case_i, case_ii };
std::string to_string(ApplicableCase c);

/// Hypotheses of the finiteness theorem, evaluated exactly.
///  case_i:  alpha, beta coprime and sigma < 1.
///  case_ii: additionally O_K a UFD and alpha coprime to conj(alpha); sigma < 2.
/// When both hold, case_ii is preferred.
struct PreconditionReport {
    bool alpha_beta_coprime = false;
    bool field_is_ufd = false;
    bool alpha_conj_coprime = false;
    bool case_ii_eligible = false;
    bool case_i_applicable = false;
    bool case_ii_applicable = false;
    ElementFactorization alpha_factorization;
    long double sigma = 0;
    ApplicableCase applicable_case = ApplicableCase::none;
};

PreconditionReport preconditions(const QuadInt& alpha, const IfsSpec& spec);

/// n_j = max(0, -v_Pj(z)) over the primes of alpha.
struct MinimalTuple {
    std::vector<unsigned> exponents;
    unsigned sum() const;
    friend bool operator==(const MinimalTuple&, const MinimalTuple&) = default;
};

/// Throws ValidationError when z is not in D_alpha.
MinimalTuple minimal_tuple(const FieldElement& z, const ElementFactorization& alpha_factorization);

/// Smallest n0 such that every tuple with n_1 + ... + n_l >= n0 is ruled out
/// by the exact contradiction c2 * P > c1 * |u|^sigma, together with the
/// data that produced it.
struct Certificate {
    ApplicableCase used_case = ApplicableCase::none;
    unsigned n0 = 0;
    unsigned ell = 0;
    /// Any point whose tuple sums below n0 has alpha^level * z integral.
    unsigned level = 0;
    CoveringConstants covering;
    LowerBoundSpec lower;
    long double c1_over_c2 = 0;
};

std::optional<Certificate> certified_bound(const PreconditionReport& report, const IfsSpec& spec,
                                           const CoveringConstants& covering, const LowerBoundSpec& lower);
std::optional<Certificate> certified_bound(const PreconditionReport& report, const IfsSpec& spec);

/// P = prod_p p^{max ceil(n_j/e_j)} (the rational denominator) and the
/// squared denominator size |u|^2 used by the period bound for this case.
struct TupleDenominator {
    Integer p_product;
    Integer u_norm;
};
TupleDenominator tuple_denominator(const Certificate& cert, std::span<const unsigned> tuple);

/// Exact decision of c2 * P > #A * (9 R_c^2 |u|^2)^(sigma/2) for one tuple;
/// nullopt if the sides are too close to separate.
std::optional<bool> bound_chain_holds(const Certificate& cert, const IfsSpec& spec, std::span<const unsigned> tuple);

struct IntersectionPoint {
    FieldElement value;
    /// value * alpha^den_pow, an element of O_K; den_pow is minimal.
    QuadInt numerator;
    unsigned den_pow = 0;
    MinimalTuple tuple;
    Coding coding;
};

inline constexpr std::size_t kDefaultLatticeCap = 100'000'000;

/// Approximate number of lattice points scanned at a level.
double level_lattice_size(unsigned level, const QuadInt& alpha, const IfsSpec& spec);

/// All z in alpha^-N O_K that lie in S, each with minimal tuple and a
/// verified coding, sorted by (|z|^2, Re z, Im z). Throws CapExceeded when
/// the disk holds more than `cap` lattice points.
std::vector<IntersectionPoint> enumerate_level(unsigned level, const QuadInt& alpha, const IfsSpec& spec,
                                               std::size_t cap = kDefaultLatticeCap);
std::vector<IntersectionPoint> enumerate_level(unsigned level, const QuadInt& alpha, const IfsSpec& spec,
                                               const ElementFactorization& alpha_factorization,
                                               std::size_t cap = kDefaultLatticeCap);

enum class EnumerationMode { certified, bounded };

struct IntersectionReport {
    PreconditionReport preconditions;
    std::optional<Certificate> certificate;
    std::vector<IntersectionPoint> points;
    unsigned level = 0;
    /// Every point of the intersection is listed.
    bool exhausted = false;
    /// Certified mode could not scan the certified level within the cap.
    bool fell_back = false;
};

/// certified: requires an applicable case; scans the certified level, or
/// falls back to level min(n_max, certified level) when it exceeds the cap.
/// bounded: scans level n_max.
IntersectionReport full_intersection(const QuadInt& alpha, const IfsSpec& spec, EnumerationMode mode, unsigned n_max,
                                     std::size_t cap = kDefaultLatticeCap);

}  // namespace qcs
