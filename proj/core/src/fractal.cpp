#include "qcs/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qcs/error.hpp"
#include "qcs/exact.hpp"

namespace qcs {

IfsSpec::IfsSpec(QuadInt beta, std::vector<QuadInt> digits)
    : beta_(std::move(beta)), digits_(std::move(digits)), beta_norm_(norm(beta_)), max_digit_norm_(0) {
    for (const auto& a : digits_) max_digit_norm_ = std::max(max_digit_norm_, norm(a));
}

IfsSpec IfsSpec::make(QuadInt beta, std::vector<QuadInt> digits) {
    if (norm(beta) < 2) throw ValidationError("ifs: |beta| must exceed 1 (norm(beta) = " + norm(beta).get_str() + ")");
    if (digits.size() < 2) throw ValidationError("ifs: at least two digits are required");
    for (std::size_t i = 0; i < digits.size(); ++i) {
        require_same_field(beta, digits[i]);
        for (std::size_t j = 0; j < i; ++j)
            if (digits[i] == digits[j]) throw ValidationError("ifs: duplicate digit " + to_string(digits[i]));
    }
    return IfsSpec(std::move(beta), std::move(digits));
}

IfsSpec ifs_new(QuadInt beta, std::vector<QuadInt> digits) { return IfsSpec::make(std::move(beta), std::move(digits)); }

Rational bounding_radius_sq(const IfsSpec& spec) {
    const Integer& n = spec.beta_norm();
    const Integer& m = spec.max_digit_norm();
    // k/q >= m / (sqrt n - 1)^2  <=>  (k(n+1) - q m) - 2k sqrt(n) >= 0
    auto dominates = [&](const Integer& k, long q) { return sign_sqrt_form(k * (n + 1) - q * m, -2 * k, n) >= 0; };

    const long double root = std::sqrt(static_cast<long double>(n.get_d()));
    const long double approx = static_cast<long double>(m.get_d()) / ((root - 1) * (root - 1));
    Rational best;
    bool have = false;
    for (long q = 1; q <= 64; ++q) {
        Integer k;
        mpz_set_d(k.get_mpz_t(), static_cast<double>(std::ceil(approx * q)));
        while (k > 0 && dominates(k - 1, q)) --k;
        while (!dominates(k, q)) ++k;
        Rational cand(k, q);
        cand.canonicalize();
        if (!have || cand < best) {
            best = cand;
            have = true;
        }
    }
    return best;
}

long double similarity_dimension(const IfsSpec& spec) {
    return 2.0L * std::log(static_cast<long double>(spec.digit_count())) /
           std::log(static_cast<long double>(spec.beta_norm().get_d()));
}

long double CoveringConstants::c1_closed_form(long double u_norm) const {
    return c1 * std::pow(u_norm, sigma / 2);
}

CoveringConstants covering_constants(const IfsSpec& spec) {
    CoveringConstants out;
    out.radius_sq = bounding_radius_sq(spec);
    out.cert_radius_sq = std::max(out.radius_sq, Rational(1, 9));
    out.sigma = similarity_dimension(spec);
    const long double r = std::sqrt(static_cast<long double>(out.cert_radius_sq.get_d()));
    out.c1 = static_cast<long double>(spec.digit_count()) * std::pow(3 * r, out.sigma);
    return out;
}

unsigned long covering_depth(const IfsSpec& spec, const Rational& delta_sq) {
    if (delta_sq <= 0) throw ValidationError("covering: delta must be positive");
    const Rational r2 = bounding_radius_sq(spec);
    unsigned long k = 0;
    Rational lhs = delta_sq;
    while (lhs < r2) {
        lhs *= spec.beta_norm();
        ++k;
    }
    return k;
}

Integer covering_bound_sq(const IfsSpec& spec, const Rational& delta_sq) {
    return pow(Integer(spec.digit_count()), covering_depth(spec, delta_sq));
}

Integer covering_bound(const IfsSpec& spec, const Rational& delta) {
    if (delta <= 0) throw ValidationError("covering: delta must be positive");
    return covering_bound_sq(spec, delta * delta);
}

Integer period_bound(const IfsSpec& spec, const Integer& u_norm) {
    if (u_norm < 1) throw ValidationError("period_bound: norm(u) must be >= 1");
    Rational delta_sq(1, 9 * u_norm);
    delta_sq.canonicalize();
    return covering_bound_sq(spec, delta_sq);
}

std::vector<std::complex<double>> sample_points(const IfsSpec& spec, unsigned depth, std::size_t cap) {
    if (depth < 1) throw ValidationError("sample_points: depth must be >= 1");
    const long double total = std::pow(static_cast<long double>(spec.digit_count()), depth);
    if (total > static_cast<long double>(cap))
        throw CapExceeded("sample_points: " + std::to_string(static_cast<double>(total)) + " points exceed cap " +
                              std::to_string(cap),
                          static_cast<double>(total));
    const std::complex<double> beta = embed(spec.beta());
    std::vector<std::complex<double>> digits;
    for (const auto& a : spec.digits()) digits.push_back(embed(a));

    std::vector<std::complex<double>> level{0.0};
    for (unsigned k = 0; k < depth; ++k) {
        std::vector<std::complex<double>> next;
        next.reserve(level.size() * digits.size());
        for (const auto& a : digits)
            for (const auto& p : level) next.push_back((a + p) / beta);
        level = std::move(next);
    }
    return level;
}

BoxDimEstimate box_dim_estimate(const IfsSpec& spec, std::span<const unsigned> depths) {
    if (depths.size() < 2) throw ValidationError("box_dim_estimate: need at least two depths");
    for (std::size_t i = 1; i < depths.size(); ++i)
        if (depths[i] <= depths[i - 1]) throw ValidationError("box_dim_estimate: depths must be ascending");

    const double log_beta = 0.5 * std::log(spec.beta_norm().get_d());
    BoxDimEstimate out;
    std::vector<double> xs, ys;
    for (unsigned k : depths) {
        const auto pts = sample_points(spec, k);
        const double side = std::exp(-log_beta * k);
        std::set<std::pair<long long, long long>> cells;
        for (const auto& z : pts)
            cells.emplace(static_cast<long long>(std::floor(z.real() / side)),
                          static_cast<long long>(std::floor(z.imag() / side)));
        out.counts.emplace_back(k, cells.size());
        xs.push_back(log_beta * k);
        ys.push_back(std::log(static_cast<double>(cells.size())));
    }
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    out.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return out;
}

}  // namespace qcs
