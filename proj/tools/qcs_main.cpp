#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qcs/cns.hpp"
#include "qcs/error.hpp"
#include "qcs/intersection.hpp"

using json = nlohmann::json;
using namespace qcs;

namespace {

std::string str(const Integer& z) { return z.get_str(); }
std::string str(const Rational& q) { return q.get_str(); }
std::string str(long double v, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Lf", digits, v);
    return buf;
}
std::string str(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
template <class T>
    requires std::is_integral_v<T>
std::string str(T v) {
    return std::to_string(v);
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

struct SpecArgs {
    long d = -1;
    std::string beta, digits;
};

void add_field(CLI::App* sub, long& d) { sub->add_option("-d,--field", d, "Squarefree d < 0 of Q(sqrt d)")->required(); }

void add_spec(CLI::App* sub, SpecArgs& a) {
    add_field(sub, a.d);
    sub->add_option("--beta", a.beta, "Base beta")->required();
    sub->add_option("--digits", a.digits, "Comma-separated digit set")->required();
}

IfsSpec make_spec(const SpecArgs& a) {
    const Field f = Field::make(a.d);
    std::vector<QuadInt> digits;
    for (const auto& t : split_list(a.digits)) digits.push_back(parse_element(t, f));
    return IfsSpec::make(parse_element(a.beta, f), std::move(digits));
}

json record(const std::string& command) { return json{{"schema", 1}, {"command", command}}; }

json ideal_json(const Ideal& i) { return json{{"a", str(i.a())}, {"b", str(i.b())}, {"c", str(i.c())}}; }

json prime_json(const PrimeIdeal& p) {
    return json{{"hnf", ideal_json(p.hnf)}, {"p", str(p.p)}, {"e", str(p.e)}, {"f", str(p.f)}};
}

json factorization_json(const ElementFactorization& fact) {
    json factors = json::array();
    for (const auto& f : fact.factors) {
        json j = prime_json(f.prime);
        j["exponent"] = str(f.exponent);
        factors.push_back(j);
    }
    return json{{"element", to_string(fact.element)}, {"norm", str(norm(fact.element))}, {"factors", factors}};
}

json digits_json(const std::vector<std::size_t>& word, const IfsSpec& spec) {
    json out = json::array();
    for (std::size_t d : word) out.push_back(to_string(spec.digits()[d]));
    return out;
}

json tuple_json(const std::vector<unsigned>& t) {
    json out = json::array();
    for (unsigned e : t) out.push_back(str(e));
    return out;
}

json preconditions_json(const PreconditionReport& r) {
    return json{{"alpha_beta_coprime", r.alpha_beta_coprime},
                {"field_is_ufd", r.field_is_ufd},
                {"alpha_conj_coprime", r.alpha_conj_coprime},
                {"case_ii_eligible", r.case_ii_eligible},
                {"case_i_applicable", r.case_i_applicable},
                {"case_ii_applicable", r.case_ii_applicable},
                {"applicable_case", to_string(r.applicable_case)},
                {"alpha_factorization", factorization_json(r.alpha_factorization)},
                {"sigma", str(r.sigma)}};
}

json covering_json(const CoveringConstants& c) {
    return json{{"radius_sq", str(c.radius_sq)},
                {"cert_radius_sq", str(c.cert_radius_sq)},
                {"sigma", str(c.sigma)},
                {"c1", str(c.c1)}};
}

json certificate_json(const Certificate& cert, const IfsSpec& spec) {
    json stabs = json::array();
    for (const auto& s : cert.lower.stabilizations)
        stabs.push_back(json{{"prime", prime_json(s.prime)}, {"n0", str(s.n0)}, {"m", str(s.m)}});
    json j{{"case", to_string(cert.used_case)},
           {"n0", str(cert.n0)},
           {"ell", str(cert.ell)},
           {"level", str(cert.level)},
           {"c1_params", covering_json(cert.covering)},
           {"c2", str(cert.lower.c2)},
           {"c1_over_c2", str(cert.c1_over_c2, 6)},
           {"stabilizations", stabs}};
    // Exact chain at the tuple (n0, 0, ..., 0).
    auto probe = [&](unsigned total) -> json {
        std::vector<unsigned> t(cert.ell, 0);
        t[0] = total;
        const auto r = bound_chain_holds(cert, spec, t);
        return r ? json(*r) : json(nullptr);
    };
    j["chain_at_n0_first_prime"] = probe(cert.n0);
    return j;
}

int fail(const std::string& kind, const std::string& message, int code, const std::string& token = {}) {
    json j = record("error");
    j["error"] = json{{"kind", kind}, {"message", message}};
    if (!token.empty()) j["error"]["token"] = token;
    std::cout << j.dump(2) << "\n";
    std::cerr << "qcs: " << message << "\n";
    return code;
}

// key = value lines become "--key value" arguments unless already given.
std::vector<std::string> merge_config(std::vector<std::string> args) {
    std::string path;
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (path.empty()) return rest;
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read config file " + path, path);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        if (trim(line).empty()) continue;
        if (eq == std::string::npos) throw ParseError("config line without '=': " + trim(line), trim(line));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string flag = key.size() == 1 ? "-" + key : "--" + key;
        bool present = false;
        for (const auto& a : rest) present = present || a == flag || a.rfind(flag + "=", 0) == 0;
        if (!present) {
            rest.push_back(flag);
            rest.push_back(value);
        }
    }
    return rest;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic in imaginary quadratic fields and rational points of self-similar sets"};
    app.name("qcs");
    app.require_subcommand(1);

    // factor
    long factor_d = -1;
    std::string factor_elem;
    auto* factor = app.add_subcommand("factor", "Prime ideal factorization of an element");
    add_field(factor, factor_d);
    factor->add_option("element", factor_elem)->required();

    // order
    long order_d = -1;
    std::string order_beta, order_root;
    long order_p = 0;
    unsigned order_n = 1;
    bool order_check = false;
    auto* order = app.add_subcommand("order", "Multiplicative order of beta modulo a prime ideal power");
    add_field(order, order_d);
    order->add_option("--beta", order_beta, "Base beta")->required();
    order->add_option("--p", order_p, "Rational prime below the prime ideal")->required();
    order->add_option("--root", order_root, "Root r selecting the prime (p, w - r); default: smallest");
    order->add_option("--n", order_n, "Exponent of the prime power")->check(CLI::PositiveNumber);
    order->add_flag("--check", order_check, "Also compute the order by sequential powering");

    // member
    SpecArgs member_spec;
    std::string member_point;
    auto* member = app.add_subcommand("member", "Exact membership test for a point of K");
    add_spec(member, member_spec);
    member->add_option("--point", member_point, "v or v/u")->required();

    // intersect
    SpecArgs inter_spec;
    std::string inter_alpha, inter_mode = "bounded";
    unsigned inter_nmax = 3;
    std::size_t inter_cap = kDefaultLatticeCap;
    auto* intersect = app.add_subcommand("intersect", "Enumerate D_alpha intersected with S");
    add_spec(intersect, inter_spec);
    intersect->add_option("--alpha", inter_alpha, "Denominator generator alpha")->required();
    intersect->add_option("--mode", inter_mode, "certified or bounded")->capture_default_str()->check(CLI::IsMember({"certified", "bounded"}));
    intersect->add_option("--nmax", inter_nmax, "Level for bounded mode and fallback")->capture_default_str();
    intersect->add_option("--cap", inter_cap, "Maximum lattice points scanned")->capture_default_str();

    // bound
    SpecArgs bound_spec;
    std::string bound_alpha;
    auto* bound = app.add_subcommand("bound", "Certified finiteness bound n0 and its trace");
    add_spec(bound, bound_spec);
    bound->add_option("--alpha", bound_alpha, "Denominator generator alpha")->required();

    // dim
    SpecArgs dim_spec;
    std::string dim_depths = "4,6,8,10";
    auto* dim = app.add_subcommand("dim", "Similarity dimension, covering constants, box-count estimate");
    add_spec(dim, dim_spec);
    dim->add_option("--depths", dim_depths, "Comma-separated box-count depths");

    // render
    SpecArgs render_spec;
    unsigned render_depth = 8;
    std::string render_csv, render_svg;
    auto* render = app.add_subcommand("render", "Sample the attractor to CSV and optional SVG");
    add_spec(render, render_spec);
    render->add_option("--depth", render_depth, "Word length of sampled points");
    render->add_option("--csv", render_csv, "Output CSV path")->required();
    render->add_option("--svg", render_svg, "Optional SVG path");

    // cns
    unsigned long cns_n = 2;
    std::string cns_expand_arg, cns_evaluate_arg;
    unsigned cns_ell = 0;
    bool cns_dyadic = false;
    auto* cns = app.add_subcommand("cns", "Canonical number system with base -n + i");
    cns->add_option("--n", cns_n, "Base parameter n > 0")->check(CLI::PositiveNumber);
    auto* opt_expand = cns->add_option("--expand", cns_expand_arg, "Gaussian integer to expand");
    auto* opt_eval = cns->add_option("--evaluate", cns_evaluate_arg, "Comma-separated digits, least significant first");
    auto* opt_ell = cns->add_option("--ell", cns_ell, "List the truncated description of D_alpha for alpha = -n + i");
    opt_expand->excludes(opt_eval)->excludes(opt_ell);
    opt_eval->excludes(opt_ell);

    std::vector<std::string> args;
    try {
        args = merge_config(std::vector<std::string>(argv + 1, argv + argc));
    } catch (const ParseError& e) {
        return fail("parse", e.what(), 1, e.token());
    }
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("parse", e.what(), 1);
    }

    try {
        json out;
        if (*factor) {
            const Field f = Field::make(factor_d);
            out = record("factor");
            out["factorization"] = factorization_json(factor_element(parse_element(factor_elem, f)));
        } else if (*order) {
            const Field f = Field::make(order_d);
            const QuadInt beta = parse_element(order_beta, f);
            const PrimeSplitting split = factor_rational_prime(f, Integer(order_p));
            PrimeIdeal prime = split.primes.front();
            if (!order_root.empty()) prime = prime_above(f, Integer(order_p), Integer(order_root));
            const Stabilization stab = stabilization(beta, prime);
            const PrimePowerOrder ppo = ord_prime_power(stab, order_n);
            out = record("order");
            out["splitting"] = to_string(split.kind);
            out["prime"] = prime_json(prime);
            out["beta"] = to_string(beta);
            out["n"] = str(order_n);
            out["stabilization"] = json{{"n0", str(stab.n0)}, {"m", str(stab.m)}};
            out["order"] = str(ppo.order);
            out["used_closed_form"] = ppo.used_closed_form;
            if (order_check) out["order_brute_force"] = str(ord_mod(beta, prime.hnf.pow(order_n)));
        } else if (*member) {
            const IfsSpec spec = make_spec(member_spec);
            const FieldElement z = parse_field_element(member_point, spec.field());
            const StateGraph g = build_state_graph(z.num(), z.den(), spec);
            out = record("member");
            out["point"] = to_string(z);
            const bool is_in = g.root && g.live[*g.root];
            out["member"] = is_in;
            out["states"] = str(g.nodes.size());
            out["live_states"] = str(g.live_count());
            out["bound"] = str(period_bound(spec, z.den() * z.den()));
            if (is_in) {
                const Coding c = *coding_of(g);
                out["preperiod"] = digits_json(c.preperiod, spec);
                out["period"] = digits_json(c.period, spec);
            }
        } else if (*intersect) {
            const IfsSpec spec = make_spec(inter_spec);
            const QuadInt alpha = parse_element(inter_alpha, spec.field());
            const auto mode = inter_mode == "certified" ? EnumerationMode::certified : EnumerationMode::bounded;
            const IntersectionReport r = full_intersection(alpha, spec, mode, inter_nmax, inter_cap);
            out = record("intersect");
            out["mode"] = inter_mode;
            out["preconditions"] = preconditions_json(r.preconditions);
            out["sigma"] = str(r.preconditions.sigma);
            out["c1_params"] = covering_json(covering_constants(spec));
            out["c2"] = r.certificate ? json(str(r.certificate->lower.c2)) : json(nullptr);
            out["n0"] = r.certificate ? json(str(r.certificate->n0)) : json(nullptr);
            out["level"] = str(r.level);
            out["exhausted"] = r.exhausted;
            out["fell_back"] = r.fell_back;
            json pts = json::array();
            for (const auto& p : r.points)
                pts.push_back(json{{"value", to_string(p.value)},
                                   {"num", to_string(p.numerator)},
                                   {"den_pow", str(p.den_pow)},
                                   {"tuple", tuple_json(p.tuple.exponents)},
                                   {"preperiod", digits_json(p.coding.preperiod, spec)},
                                   {"period", digits_json(p.coding.period, spec)}});
            out["points"] = pts;
        } else if (*bound) {
            const IfsSpec spec = make_spec(bound_spec);
            const QuadInt alpha = parse_element(bound_alpha, spec.field());
            const PreconditionReport pre = preconditions(alpha, spec);
            const auto cert = certified_bound(pre, spec);
            if (!cert)
                return fail("precondition", "no case of the finiteness theorem applies (case " +
                                                to_string(pre.applicable_case) + ")",
                            2);
            out = record("bound");
            out["preconditions"] = preconditions_json(pre);
            out["certificate"] = certificate_json(*cert, spec);
        } else if (*dim) {
            const IfsSpec spec = make_spec(dim_spec);
            std::vector<unsigned> depths;
            for (const auto& t : split_list(dim_depths)) {
                try {
                    depths.push_back(static_cast<unsigned>(std::stoul(t)));
                } catch (const std::exception&) {
                    throw ParseError("bad depth '" + t + "'", t);
                }
            }
            const BoxDimEstimate est = box_dim_estimate(spec, depths);
            out = record("dim");
            out["covering"] = covering_json(covering_constants(spec));
            out["similarity_dimension"] = str(similarity_dimension(spec));
            json counts = json::array();
            for (const auto& [k, n] : est.counts) counts.push_back(json{{"depth", str(k)}, {"cells", str(n)}});
            out["box_dim_estimate"] = json{{"slope", str(est.slope)}, {"counts", counts}};
        } else if (*render) {
            const IfsSpec spec = make_spec(render_spec);
            const auto points = sample_points(spec, render_depth);
            std::ofstream csv(render_csv);
            if (!csv) throw ParseError("cannot write " + render_csv, render_csv);
            csv << "re,im\n";
            for (const auto& z : points) csv << str(z.real()) << "," << str(z.imag()) << "\n";
            if (!render_svg.empty()) {
                double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
                for (const auto& z : points) {
                    lo_x = std::min(lo_x, z.real());
                    hi_x = std::max(hi_x, z.real());
                    lo_y = std::min(lo_y, z.imag());
                    hi_y = std::max(hi_y, z.imag());
                }
                const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
                const double size = 800, pad = 10, s = (size - 2 * pad) / span;
                std::ofstream svg(render_svg);
                if (!svg) throw ParseError("cannot write " + render_svg, render_svg);
                svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
                    << "\"><rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
                for (const auto& z : points)
                    svg << "<circle cx=\"" << str(pad + (z.real() - lo_x) * s) << "\" cy=\""
                        << str(size - pad - (z.imag() - lo_y) * s) << "\" r=\"1\"/>\n";
                svg << "</svg>\n";
            }
            out = record("render");
            out["points"] = str(points.size());
            out["csv"] = render_csv;
            if (!render_svg.empty()) out["svg"] = render_svg;
        } else if (*cns) {
            const Field f = Field::make(-1);
            const CnsBasis basis = CnsBasis::make(f, cns_n);
            out = record("cns");
            out["n"] = str(cns_n);
            if (*opt_expand) {
                const QuadInt g = parse_element(cns_expand_arg, f);
                json digits = json::array();
                for (auto xi : cns_expand(g, basis)) digits.push_back(str(xi));
                out["element"] = to_string(g);
                out["digits"] = digits;
            } else if (*opt_eval) {
                std::vector<unsigned long> digits;
                for (const auto& t : split_list(cns_evaluate_arg)) {
                    std::size_t used = 0;
                    unsigned long v = 0;
                    try {
                        v = std::stoul(t, &used);
                    } catch (const std::exception&) {
                        used = 0;
                    }
                    if (used == 0 || used != t.size() || t.find('-') != std::string::npos)
                        throw ParseError("bad digit '" + t + "'", t);
                    digits.push_back(v);
                }
                out["value"] = to_string(cns_evaluate(digits, basis));
            } else if (*opt_ell) {
                json pts = json::array();
                for (const auto& w : dyadic_alpha_description(basis, cns_ell))
                    pts.push_back(to_string(FieldElement::ratio(w, pow(basis.theta, cns_ell))));
                out["ell"] = str(cns_ell);
                out["count"] = str(pts.size());
                out["points"] = pts;
            } else {
                return fail("parse", "cns needs one of --expand, --evaluate, --ell", 1);
            }
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    } catch (const ParseError& e) {
        return fail("parse", e.what(), 1, e.token());
    } catch (const ValidationError& e) {
        return fail("precondition", e.what(), 2);
    } catch (const CapExceeded& e) {
        json j = record("error");
        j["error"] = json{{"kind", "cap_exceeded"}, {"message", e.what()}, {"requested", str(e.requested())}};
        std::cout << j.dump(2) << "\n";
        std::cerr << "qcs: " << e.what() << "\n";
        return 3;
    }
}
