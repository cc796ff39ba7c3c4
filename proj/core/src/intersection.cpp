#include "qcs/intersection.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "level_lattice.hpp"
#include "qcs/error.hpp"
#include "qcs/exact.hpp"

namespace qcs {

std::string to_string(ApplicableCase c) {
    switch (c) {
        case ApplicableCase::case_i: return "case_i";
        case ApplicableCase::case_ii: return "case_ii";
        default: return "none";
    }
}

PreconditionReport preconditions(const QuadInt& alpha, const IfsSpec& spec) {
    require_same_field(alpha, spec.beta());
    if (norm(alpha) <= 1) throw ValidationError("preconditions: |alpha| must exceed 1");
    PreconditionReport r;
    r.alpha_beta_coprime = are_coprime(alpha, spec.beta());
    r.field_is_ufd = spec.field().is_ufd();
    r.alpha_conj_coprime = are_coprime(alpha, conj(alpha));
    r.case_ii_eligible = r.field_is_ufd && r.alpha_conj_coprime;
    r.alpha_factorization = factor_element(alpha);
    r.sigma = similarity_dimension(spec);
    r.case_i_applicable = r.alpha_beta_coprime && spec.sigma_below_one();
    r.case_ii_applicable = r.alpha_beta_coprime && r.case_ii_eligible && spec.sigma_below_two();
    r.applicable_case = r.case_ii_applicable  ? ApplicableCase::case_ii
                        : r.case_i_applicable ? ApplicableCase::case_i
                                              : ApplicableCase::none;
    return r;
}

unsigned MinimalTuple::sum() const {
    unsigned s = 0;
    for (unsigned e : exponents) s += e;
    return s;
}

MinimalTuple minimal_tuple(const FieldElement& z, const ElementFactorization& fact) {
    MinimalTuple t;
    t.exponents.assign(fact.factors.size(), 0);
    if (z.num().is_zero()) return t;
    const QuadInt den(z.field(), z.den(), 0);
    unsigned level = 0;
    for (std::size_t j = 0; j < fact.factors.size(); ++j) {
        const auto& f = fact.factors[j];
        const long v = static_cast<long>(valuation(z.num(), f.prime)) - static_cast<long>(valuation(den, f.prime));
        t.exponents[j] = v < 0 ? static_cast<unsigned>(-v) : 0;
        level = std::max(level, (t.exponents[j] + f.exponent - 1) / f.exponent);
    }
    // Every denominator prime must be a prime of alpha.
    if (!exact_div(z.num() * pow(fact.element, level), z.den()))
        throw ValidationError("minimal_tuple: " + to_string(z) + " is not in D_alpha");
    return t;
}

namespace {

// Exact decision of c2 P > #A (9 R_c^2 |u|^2)^(sigma/2) where P and |u|^2
// may be powers of 2 with rational exponent (the tuple-free lower bounds).
std::optional<bool> chain(const Certificate& cert, const IfsSpec& spec, const Rational& p_val, const Rational& p_shift,
                          const Rational& u_val, const Rational& u_shift) {
    const Integer count(spec.digit_count());
    ScaledRational x{cert.lower.c2 * p_val / count, p_shift};
    ScaledRational y{9 * cert.covering.cert_radius_sq * u_val, u_shift};
    return log_ratio_greater(x, count, y, spec.beta_norm());
}

// With P >= 2^(n0/(2l)) (case i, |u| = P) or P >= 2^n0 (case ii, |u|^2 = P),
// and the chain increasing in P, one check covers every tuple of sum >= n0.
std::optional<bool> certifies(const Certificate& cert, const IfsSpec& spec, unsigned n0) {
    if (cert.used_case == ApplicableCase::case_i) {
        const Rational t(n0, 2 * cert.ell);
        return chain(cert, spec, 1, t, 1, 2 * t);
    }
    return chain(cert, spec, 1, n0, 1, n0);
}

}  // namespace

std::optional<Certificate> certified_bound(const PreconditionReport& report, const IfsSpec& spec,
                                           const CoveringConstants& covering, const LowerBoundSpec& lower) {
    Certificate cert;
    cert.used_case = report.applicable_case;
    if (cert.used_case == ApplicableCase::none) return std::nullopt;
    if (cert.used_case == ApplicableCase::case_i && !spec.sigma_below_one()) return std::nullopt;
    if (cert.used_case == ApplicableCase::case_ii && !spec.sigma_below_two()) return std::nullopt;
    if (lower.primes.empty()) return std::nullopt;
    cert.covering = covering;
    cert.lower = lower;
    cert.ell = static_cast<unsigned>(lower.primes.size());
    cert.c1_over_c2 = covering.c1 / static_cast<long double>(lower.c2.get_d());

    // Floating estimate of the root of the (linear in n0) log gap, then exact adjustment.
    const long double ln2 = std::log(2.0L);
    const long double lnA = std::log(static_cast<long double>(spec.digit_count()));
    const long double lnB = std::log(static_cast<long double>(spec.beta_norm().get_d()));
    const long double base = (std::log(static_cast<long double>(lower.c2.get_d())) - lnA) / lnA -
                             std::log(9.0L * static_cast<long double>(covering.cert_radius_sq.get_d())) / lnB;
    const long double slope = cert.used_case == ApplicableCase::case_i
                                  ? ln2 / (2 * cert.ell) * (1 / lnA - 2 / lnB)
                                  : ln2 * (1 / lnA - 1 / lnB);
    if (!(slope > 0)) return std::nullopt;
    constexpr unsigned kMaxN0 = 1u << 22;
    const long double root = -base / slope;
    unsigned n = root <= 1 ? 1u : static_cast<unsigned>(std::min<long double>(std::ceil(root), kMaxN0));

    auto ok = [&](unsigned k) { return certifies(cert, spec, k).value_or(false); };
    while (n < kMaxN0 && !ok(n)) ++n;
    if (!ok(n)) return std::nullopt;
    while (n > 1 && ok(n - 1)) --n;
    cert.n0 = n;

    unsigned b_min = ~0u;
    for (const auto& f : report.alpha_factorization.factors) b_min = std::min(b_min, f.exponent);
    cert.level = (cert.n0 - 1 + b_min - 1) / b_min;
    return cert;
}

std::optional<Certificate> certified_bound(const PreconditionReport& report, const IfsSpec& spec) {
    if (report.applicable_case == ApplicableCase::none) return std::nullopt;
    std::vector<PrimeIdeal> primes;
    for (const auto& f : report.alpha_factorization.factors) primes.push_back(f.prime);
    return certified_bound(report, spec, covering_constants(spec), c2_constant(spec.beta(), primes));
}

TupleDenominator tuple_denominator(const Certificate& cert, std::span<const unsigned> tuple) {
    TupleDenominator out;
    out.p_product = rational_denominator_bound(cert.lower.primes, tuple);
    out.u_norm = cert.used_case == ApplicableCase::case_ii ? out.p_product : Integer(out.p_product * out.p_product);
    return out;
}

std::optional<bool> bound_chain_holds(const Certificate& cert, const IfsSpec& spec, std::span<const unsigned> tuple) {
    if (tuple.size() != cert.lower.primes.size()) throw ValidationError("bound chain: tuple length mismatch");
    const TupleDenominator td = tuple_denominator(cert, tuple);
    return chain(cert, spec, Rational(td.p_product), 0, Rational(td.u_norm), 0);
}

double level_lattice_size(unsigned level, const QuadInt& alpha, const IfsSpec& spec) {
    return detail::LevelLattice::estimate(spec.field(), pow(norm(alpha), level), bounding_radius_sq(spec));
}

std::vector<IntersectionPoint> enumerate_level(unsigned level, const QuadInt& alpha, const IfsSpec& spec,
                                               std::size_t cap) {
    return enumerate_level(level, alpha, spec, factor_element(alpha), cap);
}

std::vector<IntersectionPoint> enumerate_level(unsigned level, const QuadInt& alpha, const IfsSpec& spec,
                                               const ElementFactorization& fact, std::size_t cap) {
    require_same_field(alpha, spec.beta());
    if (norm(alpha) <= 1) throw ValidationError("enumerate_level: |alpha| must exceed 1");
    const double approx = level_lattice_size(level, alpha, spec);
    if (approx > static_cast<double>(cap) * 1.05 + 64)
        throw CapExceeded("level " + std::to_string(level) + ": about " + std::to_string(approx) +
                              " lattice points exceed cap " + std::to_string(cap),
                          approx);

    const QuadInt scale = pow(alpha, level);
    detail::LevelLattice lattice(spec, scale, bounding_radius_sq(spec), cap);
    lattice.solve();

    std::vector<IntersectionPoint> out;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        if (!lattice.live(i)) continue;
        IntersectionPoint pt{FieldElement(QuadInt(spec.field(), 0, 0)), lattice.to_quadint(lattice.coords_of(i)),
                             level, {}, lattice.coding_from(i)};
        pt.value = FieldElement::ratio(pt.numerator, scale);
        while (pt.den_pow > 0) {
            auto q = exact_div(pt.numerator, alpha);
            if (!q) break;
            pt.numerator = std::move(*q);
            --pt.den_pow;
        }
        pt.tuple = minimal_tuple(pt.value, fact);
        if (!verify_coding(pt.coding, pt.value, spec))
            throw std::logic_error("enumerate_level: coding does not evaluate to " + to_string(pt.value));
        out.push_back(std::move(pt));
    }

    // Re z = (x + t y / 2) / den; Im z has the sign and order of y / den.
    const Integer t = spec.field().omega_trace();
    auto key = [&](const IntersectionPoint& p) {
        const Rational re = (Rational(2 * p.value.num().x() + t * p.value.num().y()) / (2 * p.value.den()));
        const Rational im = Rational(p.value.num().y()) / p.value.den();
        return std::tuple{p.value.abs_sq(), re, im};
    };
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    return out;
}

IntersectionReport full_intersection(const QuadInt& alpha, const IfsSpec& spec, EnumerationMode mode, unsigned n_max,
                                     std::size_t cap) {
    IntersectionReport r;
    r.preconditions = preconditions(alpha, spec);
    if (r.preconditions.applicable_case != ApplicableCase::none)
        r.certificate = certified_bound(r.preconditions, spec);

    if (mode == EnumerationMode::certified) {
        if (!r.certificate)
            throw ValidationError("certified mode: no case of the finiteness theorem applies; use bounded mode");
        r.level = r.certificate->level;
        if (level_lattice_size(r.level, alpha, spec) <= static_cast<double>(cap)) {
            try {
                r.points = enumerate_level(r.level, alpha, spec, r.preconditions.alpha_factorization, cap);
                r.exhausted = true;
                return r;
            } catch (const CapExceeded&) {
            }
        }
        r.fell_back = true;
        r.level = std::min(n_max, r.certificate->level);
    } else {
        r.level = n_max;
        r.exhausted = r.certificate && n_max >= r.certificate->level;
    }
    r.points = enumerate_level(r.level, alpha, spec, r.preconditions.alpha_factorization, cap);
    return r;
}

}  // namespace qcs
