#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "qcs/field.hpp"

namespace qcs {

/// The pair (beta, A) defining the attractor of z -> (z + a)/beta, a in A,
/// i.e. the set of digit series sum a_k beta^-k.
class IfsSpec {
public:
    /// Requires norm(beta) >= 2, at least two digits, digits pairwise distinct.
    static IfsSpec make(QuadInt beta, std::vector<QuadInt> digits);

    const Field& field() const noexcept { return beta_.field(); }
    const QuadInt& beta() const noexcept { return beta_; }
    const std::vector<QuadInt>& digits() const noexcept { return digits_; }
    std::size_t digit_count() const noexcept { return digits_.size(); }
    const Integer& beta_norm() const noexcept { return beta_norm_; }
    const Integer& max_digit_norm() const noexcept { return max_digit_norm_; }

    /// similarity dimension < 1, < 2, == 2, decided in integers.
    bool sigma_below_one() const { return Integer(digit_count() * digit_count()) < beta_norm_; }
    bool sigma_below_two() const { return Integer(digit_count()) < beta_norm_; }

private:
    IfsSpec(QuadInt beta, std::vector<QuadInt> digits);
    QuadInt beta_;
    std::vector<QuadInt> digits_;
    Integer beta_norm_;
    Integer max_digit_norm_;
};

IfsSpec ifs_new(QuadInt beta, std::vector<QuadInt> digits);

/// R'^2 >= (max|a| / (|beta| - 1))^2: the smallest value k/q with q <= 64
/// that dominates R^2 (decided exactly). Every point of the attractor lies in
/// the closed disk of radius R'.
Rational bounding_radius_sq(const IfsSpec& spec);

/// log #A / log |beta|.
long double similarity_dimension(const IfsSpec& spec);

/// Explicit covering data. N_delta(S) <= (#A)^k(delta), and at
/// delta = 1/(3|u|) this count is at most c1 |u|^sigma with
/// c1 = (3 |beta| R_c)^sigma = #A (3 R_c)^sigma, R_c^2 = max(R'^2, 1/9).
struct CoveringConstants {
    Rational radius_sq;
    Rational cert_radius_sq;
    long double sigma = 0;
    long double c1 = 0;

    /// c1 * u_norm^(sigma/2).
    long double c1_closed_form(long double u_norm) const;
};

CoveringConstants covering_constants(const IfsSpec& spec);

/// Smallest k >= 0 with norm(beta)^k * delta^2 >= R'^2.
unsigned long covering_depth(const IfsSpec& spec, const Rational& delta_sq);

/// (#A)^k(delta): number of balls of radius delta that cover S.
Integer covering_bound_sq(const IfsSpec& spec, const Rational& delta_sq);
Integer covering_bound(const IfsSpec& spec, const Rational& delta);

/// Bound on the number of distinct orbit states of a point v/u of S with
/// norm(u) = u_norm: the covering count at delta = 1/(3 sqrt(u_norm)).
Integer period_bound(const IfsSpec& spec, const Integer& u_norm);

/// All (#A)^depth partial sums sum_{j<=depth} a_j beta^-j, in lexicographic
/// digit-word order. Throws CapExceeded above `cap` points.
std::vector<std::complex<double>> sample_points(const IfsSpec& spec, unsigned depth,
                                                std::size_t cap = std::size_t{1} << 24);

struct BoxDimEstimate {
    double slope = 0;
    std::vector<std::pair<unsigned, std::size_t>> counts;  // (depth, occupied cells)
};

/// Least-squares slope of log N vs -log(cell size) where depth k uses grid
/// cells of side |beta|^-k. Diagnostic only.
BoxDimEstimate box_dim_estimate(const IfsSpec& spec, std::span<const unsigned> depths);

}  // namespace qcs
