// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "qcs/cns.hpp"
#include "qcs/intersection.hpp"

using namespace qcs;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void run(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs > limit_s) {
        out.ok = false;
        out.detail += " (over the " + std::to_string(static_cast<int>(limit_s)) + " s budget)";
    }
    if (!out.ok) ++failures;
    std::printf("%s criterion %d: %s [%.2f s] %s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
                out.detail.c_str());
    std::fflush(stdout);
}

IfsSpec spec_of(const Field& f, const std::string& beta, const std::vector<std::string>& digits) {
    std::vector<QuadInt> a;
    for (const auto& t : digits) a.push_back(parse_element(t, f));
    return IfsSpec::make(parse_element(beta, f), a);
}

std::set<std::string> value_set(const std::vector<IntersectionPoint>& pts) {
    std::set<std::string> out;
    for (const auto& p : pts) out.insert(to_string(p.value));
    return out;
}

// Exact equality of the found values against the expected list.
Outcome compare_values(const std::vector<IntersectionPoint>& pts, const std::vector<std::string>& expected,
                       const Field& f) {
    std::set<std::string> want;
    for (const auto& t : expected) want.insert(to_string(parse_field_element(t, f)));
    const std::set<std::string> got = value_set(pts);
    if (got.size() != pts.size()) return {false, "duplicate values reported"};
    if (got != want) {
        std::string d = "got {";
        for (const auto& s : got) d += s + " ";
        return {false, d + "}"};
    }
    return {true, std::to_string(got.size()) + " values, exact match"};
}

std::mt19937_64 rng(7);
long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

const std::vector<std::string> kWall2{"0", "1/4", "3/4", "1"};
const std::vector<std::string> kWall10{"0",     "1",     "1/10",  "3/10",  "7/10",  "9/10",  "1/4",   "3/4",
                                       "1/40", "3/40", "9/40", "13/40", "27/40", "31/40", "37/40", "39/40"};

}  // namespace

int main() {
    const Field g = Field::make(-1);
    const IfsSpec cantor = spec_of(g, "3", {"0", "2"});
    std::vector<IntersectionPoint> wall_points;

    run(1, "Wall set for alpha=2, bounded N_max=4", 5, [&] {
        const auto r = full_intersection(QuadInt(g, 2), cantor, EnumerationMode::bounded, 4);
        wall_points.insert(wall_points.end(), r.points.begin(), r.points.end());
        return compare_values(r.points, kWall2, g);
    });

    run(2, "Wall set for alpha=10, bounded N_max=3", 60, [&] {
        const auto r = full_intersection(QuadInt(g, 10), cantor, EnumerationMode::bounded, 3);
        wall_points.insert(wall_points.end(), r.points.begin(), r.points.end());
        return compare_values(r.points, kWall10, g);
    });

    run(3, "stabilization law: closed form equals brute-force order", 60, [&] {
        constexpr long kBruteLimit = 2'000'000;
        int cases = 0, brute_checks = 0, witness_checks = 0;
        for (long d : {-1, -2, -3, -7}) {
            const Field f = Field::make(d);
            for (const char* bt : {"3", "5", "1+w", "2+w"}) {
                const QuadInt beta = parse_element(bt, f);
                if (norm(beta) <= 1) continue;
                for (long p = 2; p <= 30; ++p) {
                    if (!is_prime(p)) continue;
                    for (const auto& P : factor_rational_prime(f, p).primes) {
                        if (P.hnf.contains(beta)) continue;
                        const Stabilization st = stabilization(beta, P);
                        PrimePowers powers(P);
                        const unsigned top = st.n0 + 3 * static_cast<unsigned>(P.e);
                        for (unsigned n = 1; n <= top; ++n) {
                            const Ideal In = powers.power(n);
                            const Integer closed = ord_prime_power(st, n).order;
                            const QuadInt one = In.reduce(QuadInt(f, 1, 0));
                            if (In.norm() <= kBruteLimit) {
                                const Integer brute = ord_mod(beta, In);
                                if (brute != closed)
                                    return Outcome{false, "d=" + std::to_string(d) + " beta=" + bt + " P=" +
                                                              to_string(P.hnf) + " n=" + std::to_string(n) + ": " +
                                                              closed.get_str() + " vs " + brute.get_str()};
                                ++brute_checks;
                            } else {
                                // Exact order witness: beta^N = 1 and beta^(N/q) != 1 for each prime q | N.
                                bool ok = pow_mod(beta, closed, In) == one;
                                for (const auto& q : prime_divisors(closed)) ok = ok && pow_mod(beta, closed / q, In) != one;
                                if (!ok)
                                    return Outcome{false, "witness failed d=" + std::to_string(d) + " beta=" + bt +
                                                              " P=" + to_string(P.hnf) + " n=" + std::to_string(n)};
                                ++witness_checks;
                            }
                        }
                        ++cases;
                    }
                }
            }
        }
        const std::string detail = std::to_string(cases) + " (d, beta, P) cases, " + std::to_string(brute_checks) +
                                   " brute-force and " + std::to_string(witness_checks) + " order-witness comparisons";
        return Outcome{cases >= 40, detail};
    });

    run(4, "factorization reconstruction, 200 random elements", 60, [&] {
        const std::vector<long> ds{-1, -2, -3, -5, -7};
        for (int i = 0; i < 200; ++i) {
            const Field f = Field::make(ds[static_cast<std::size_t>(i) % ds.size()]);
            QuadInt a(f, 0, 0);
            do {
                a = QuadInt(f, uniform(-1000, 1000), uniform(-600, 600));
            } while (norm(a) <= 1 || norm(a) > 1'000'000);
            const auto fact = factor_element(a);
            Integer n = 1;
            for (const auto& fc : fact.factors) n *= pow(fc.prime.hnf.norm(), fc.exponent);
            if (fact.product() != Ideal::principal(a) || n != norm(a))
                return Outcome{false, "mismatch for " + to_string(a) + " over d=" + std::to_string(f.d())};
        }
        return Outcome{true, "HNF products and norms agree"};
    });

    run(5, "period and separation bounds for Wall points", 60, [&] {
        if (wall_points.size() != kWall2.size() + kWall10.size()) return Outcome{false, "criteria 1-2 points missing"};
        std::size_t pairs = 0;
        for (const auto& p : wall_points) {
            const Integer& u = p.value.den();
            const StateGraph graph = build_state_graph(p.value.num(), u, cantor);
            const Integer bound = period_bound(cantor, u * u);
            if (Integer(p.coding.period.size()) > bound)
                return Outcome{false, "period exceeds bound at " + to_string(p.value)};
            if (Integer(graph.live_count()) > bound)
                return Outcome{false, "live states exceed bound at " + to_string(p.value)};
            for (std::size_t a = 0; a < graph.nodes.size(); ++a)
                for (std::size_t b = a + 1; b < graph.nodes.size(); ++b, ++pairs)
                    if (norm(graph.nodes[a] - graph.nodes[b]) < 1)
                        return Outcome{false, "separation fails at " + to_string(p.value)};
        }
        return Outcome{true, std::to_string(wall_points.size()) + " points, " + std::to_string(pairs) + " node pairs"};
    });

    run(6, "certificate for case (ii) example and bounded(3) enumeration", 600, [&] {
        const IfsSpec spec = spec_of(g, "-2+w", {"0", "1", "2", "3"});
        const QuadInt alpha = parse_element("-4+w", g);
        const PreconditionReport pre = preconditions(alpha, spec);
        Integer gcd;
        mpz_gcd(gcd.get_mpz_t(), norm(alpha).get_mpz_t(), spec.beta_norm().get_mpz_t());
        if (pre.applicable_case != ApplicableCase::case_ii || !pre.alpha_beta_coprime || gcd != 1 ||
            !pre.field_is_ufd || !pre.alpha_conj_coprime)
            return Outcome{false, "preconditions do not report case_ii"};
        const auto cert = certified_bound(pre, spec);
        if (!cert) return Outcome{false, "no certificate"};
        int chains = 0;
        for (unsigned extra = 0; extra < 8; ++extra) {
            const std::vector<unsigned> tuple(cert->ell, 0);
            std::vector<unsigned> t = tuple;
            t[extra % t.size()] = cert->n0 + extra;
            if (bound_chain_holds(*cert, spec, t) != std::optional(true))
                return Outcome{false, "bound chain not certified at sum " + std::to_string(cert->n0 + extra)};
            ++chains;
        }
        const auto r = full_intersection(alpha, spec, EnumerationMode::bounded, 3);
        std::vector<PrimeIdeal> primes;
        for (const auto& f : pre.alpha_factorization.factors) primes.push_back(f.prime);
        for (const auto& p : r.points) {
            if (!verify_coding(p.coding, p.value, spec)) return Outcome{false, "coding fails at " + to_string(p.value)};
            const QuadInt bm1 = pow(spec.beta(), p.coding.period.size()) - QuadInt(g, 1, 0);
            if (!ideal_product(primes, p.tuple.exponents).contains(bm1))
                return Outcome{false, "beta^m - 1 outside the tuple ideal at " + to_string(p.value)};
        }
        return Outcome{true, "n0=" + std::to_string(cert->n0) + ", c2=" + cert->lower.c2.get_str() + ", " +
                                 std::to_string(chains) + " exact chains, " + std::to_string(r.points.size()) +
                                 " points at level 3 re-verified"};
    });

    run(7, "membership oracle equivalence, 500 queries", 120, [&] {
        const Field e3 = Field::make(-3);
        const std::vector<IfsSpec> specs{cantor, spec_of(g, "-2+w", {"0", "1", "2", "3"}), spec_of(e3, "1+w", {"0", "1"})};
        int members = 0;
        for (int i = 0; i < 500; ++i) {
            const IfsSpec& spec = specs[static_cast<std::size_t>(i) % specs.size()];
            const Rational r2 = bounding_radius_sq(spec);
            const Integer u = uniform(1, 64);
            const long reach = static_cast<long>(std::ceil(std::sqrt(r2.get_d()) * u.get_d()));
            const QuadInt v(spec.field(), uniform(-reach, reach), uniform(-reach, reach));
            const StateGraph graph = build_state_graph(v, u, spec);
            const bool member = graph.root && graph.live[*graph.root];
            members += member;

            // Exhaustive search for a digit path of length #nodes + 1 inside the disk.
            auto inside = [&](const QuadInt& w) { return norm(w) * r2.get_den() <= r2.get_num() * u * u; };
            std::unordered_set<QuadInt, QuadIntHash> layer;
            if (inside(v)) layer.insert(v);
            for (std::size_t k = 0; k <= graph.nodes.size() && !layer.empty(); ++k) {
                std::unordered_set<QuadInt, QuadIntHash> next;
                for (const auto& w : layer)
                    for (const auto& a : spec.digits()) {
                        QuadInt s = spec.beta() * w - a * u;
                        if (inside(s)) next.insert(std::move(s));
                    }
                layer = std::move(next);
            }
            if (member != !layer.empty()) return Outcome{false, "disagreement at " + to_string(v) + "/" + u.get_str()};
            const StateGraph wide = build_state_graph(v, u, spec, 4 * r2);
            if (member != (wide.root && wide.live[*wide.root]))
                return Outcome{false, "doubling R' changed the answer at " + to_string(v) + "/" + u.get_str()};
        }
        return Outcome{true, std::to_string(members) + " members among 500 queries"};
    });

    run(8, "CNS round trip and injectivity on |a|,|b| <= 20", 10, [&] {
        for (unsigned long n = 1; n <= 3; ++n) {
            const CnsBasis basis = CnsBasis::make(g, n);
            std::map<std::vector<unsigned long>, std::string> seen;
            for (long a = -20; a <= 20; ++a)
                for (long b = -20; b <= 20; ++b) {
                    const QuadInt gamma(g, a, b);
                    const auto digits = cns_expand(gamma, basis);
                    if (cns_evaluate(digits, basis) != gamma) return Outcome{false, "round trip fails at " + to_string(gamma)};
                    if (!seen.emplace(digits, to_string(gamma)).second)
                        return Outcome{false, "collision at " + to_string(gamma)};
                }
        }
        const auto five = cns_expand(QuadInt(g, 5, 0), CnsBasis::make(g, 2));
        if (five != std::vector<unsigned long>{0, 1, 3, 1}) return Outcome{false, "5 does not expand to [0,1,3,1]"};
        return Outcome{true, "3 x 1681 elements, 5 -> [0,1,3,1]"};
    });

    run(9, "dimension diagnostics for the middle-third Cantor set", 30, [&] {
        const long double sigma = similarity_dimension(cantor);
        const long double expect = std::log(2.0L) / std::log(3.0L);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.10Lf", sigma);
        if (std::string(buf) != "0.6309297536" || std::fabs(sigma - expect) > 1e-15L)
            return Outcome{false, std::string("sigma = ") + buf};
        const std::vector<unsigned> depths{4, 6, 8, 10, 12};
        const BoxDimEstimate est = box_dim_estimate(cantor, depths);
        const bool close = std::fabs(est.slope - static_cast<double>(sigma)) < 0.05;
        std::snprintf(buf, sizeof buf, "%.6f", est.slope);
        return Outcome{close, std::string("sigma = 0.6309297536, box estimate ") + buf};
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
