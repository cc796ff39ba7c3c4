#include "qcs/membership.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "qcs/error.hpp"

namespace qcs {

std::size_t StateGraph::live_count() const { return static_cast<std::size_t>(std::count(live.begin(), live.end(), true)); }

namespace {

// Tarjan's algorithm (iterative). Returns for each node whether it lies on a
// cycle: a nontrivial SCC or a self-loop.
std::vector<bool> cyclic_nodes(const StateGraph& g) {
    const std::size_t n = g.nodes.size();
    constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
    std::vector<bool> on_stack(n, false), cyclic(n, false);
    std::vector<std::size_t> stack;
    std::size_t counter = 0;

    struct Frame {
        std::size_t node;
        std::size_t next_edge;
    };
    for (std::size_t start = 0; start < n; ++start) {
        if (index[start] != kUnvisited) continue;
        std::vector<Frame> call{{start, 0}};
        index[start] = low[start] = counter++;
        stack.push_back(start);
        on_stack[start] = true;
        while (!call.empty()) {
            Frame& fr = call.back();
            const auto& out = g.edges[fr.node];
            if (fr.next_edge < out.size()) {
                const std::size_t w = out[fr.next_edge++].second;
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[fr.node] = std::min(low[fr.node], index[w]);
                }
                continue;
            }
            const std::size_t v = fr.node;
            call.pop_back();
            if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[v]);
            if (low[v] != index[v]) continue;
            std::vector<std::size_t> component;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                component.push_back(w);
            } while (w != v);
            bool has_cycle = component.size() > 1;
            if (!has_cycle)
                for (const auto& [digit, succ] : g.edges[v]) has_cycle = has_cycle || succ == v;
            if (has_cycle)
                for (std::size_t c : component) cyclic[c] = true;
        }
    }
    return cyclic;
}

// Nodes from which some cyclic node is reachable.
std::vector<bool> live_nodes(const StateGraph& g) {
    const std::size_t n = g.nodes.size();
    std::vector<std::vector<std::size_t>> reverse(n);
    for (std::size_t v = 0; v < n; ++v)
        for (const auto& [digit, succ] : g.edges[v]) reverse[succ].push_back(v);
    std::vector<bool> live = cyclic_nodes(g);
    std::deque<std::size_t> queue;
    for (std::size_t v = 0; v < n; ++v)
        if (live[v]) queue.push_back(v);
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t p : reverse[v]) {
            if (!live[p]) {
                live[p] = true;
                queue.push_back(p);
            }
        }
    }
    return live;
}

}  // namespace

StateGraph build_state_graph(const QuadInt& v, const Integer& u, const IfsSpec& spec, const Rational& radius_sq) {
    if (u < 1) throw ValidationError("state graph: denominator u must be a positive integer");
    require_same_field(v, spec.beta());
    const Integer bound_num = radius_sq.get_num() * u * u;
    const Integer& bound_den = radius_sq.get_den();
    auto inside = [&](const QuadInt& w) { return norm(w) * bound_den <= bound_num; };

    StateGraph g;
    g.u = u;
    if (!inside(v)) return g;

    std::vector<QuadInt> shifts;
    for (const auto& a : spec.digits()) shifts.push_back(a * u);

    std::unordered_map<QuadInt, std::size_t, QuadIntHash> index;
    g.nodes.push_back(v);
    g.edges.emplace_back();
    index.emplace(v, 0);
    g.root = 0;
    for (std::size_t cur = 0; cur < g.nodes.size(); ++cur) {
        const QuadInt scaled = spec.beta() * g.nodes[cur];
        for (std::size_t d = 0; d < shifts.size(); ++d) {
            QuadInt next = scaled - shifts[d];
            if (!inside(next)) continue;
            auto [it, fresh] = index.emplace(next, g.nodes.size());
            if (fresh) {
                g.nodes.push_back(std::move(next));
                g.edges.emplace_back();
            }
            g.edges[cur].emplace_back(d, it->second);
        }
    }
    g.live = live_nodes(g);
    return g;
}

StateGraph build_state_graph(const QuadInt& v, const Integer& u, const IfsSpec& spec) {
    return build_state_graph(v, u, spec, bounding_radius_sq(spec));
}

bool is_member(const QuadInt& v, const Integer& u, const IfsSpec& spec) {
    const StateGraph g = build_state_graph(v, u, spec);
    return g.root && g.live[*g.root];
}

bool is_member(const FieldElement& z, const IfsSpec& spec) { return is_member(z.num(), z.den(), spec); }

std::optional<Coding> coding_of(const StateGraph& g) {
    if (!g.root || !g.live[*g.root]) return std::nullopt;
    std::vector<std::size_t> digits;
    std::unordered_map<std::size_t, std::size_t> first_visit;
    std::size_t cur = *g.root;
    while (true) {
        if (auto it = first_visit.find(cur); it != first_visit.end()) {
            Coding c;
            c.preperiod.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(it->second));
            c.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(it->second), digits.end());
            return c;
        }
        first_visit.emplace(cur, digits.size());
        bool moved = false;
        for (const auto& [digit, succ] : g.edges[cur]) {
            if (g.live[succ]) {
                digits.push_back(digit);
                cur = succ;
                moved = true;
                break;
            }
        }
        if (!moved) throw std::logic_error("coding_of: live node without live successor");
    }
}

std::optional<Coding> coding_of(const QuadInt& v, const Integer& u, const IfsSpec& spec) {
    return coding_of(build_state_graph(v, u, spec));
}

std::optional<Coding> coding_of(const FieldElement& z, const IfsSpec& spec) { return coding_of(z.num(), z.den(), spec); }

bool verify_coding(const Coding& coding, const QuadInt& v, const Integer& u, const IfsSpec& spec) {
    if (coding.period.empty()) throw ValidationError("verify_coding: empty period");
    const auto& digits = spec.digits();
    for (auto list : {&coding.preperiod, &coding.period})
        for (std::size_t d : *list)
            if (d >= digits.size()) throw ValidationError("verify_coding: digit index out of range");

    const Field& field = spec.field();
    const QuadInt one(field, 1, 0);
    // v * beta^k (beta^m - 1) == u * [ H(pre) (beta^m - 1) + H(period) ]
    // with H the Horner value sum a_j beta^(len - j).
    auto horner = [&](const std::vector<std::size_t>& word) {
        QuadInt acc(field, 0, 0);
        for (std::size_t d : word) acc = acc * spec.beta() + digits[d];
        return acc;
    };
    const QuadInt beta_m_minus_1 = pow(spec.beta(), coding.period.size()) - one;
    const QuadInt lhs = v * pow(spec.beta(), coding.preperiod.size()) * beta_m_minus_1;
    const QuadInt rhs = (horner(coding.preperiod) * beta_m_minus_1 + horner(coding.period)) * u;
    return lhs == rhs;
}

bool verify_coding(const Coding& coding, const FieldElement& z, const IfsSpec& spec) {
    return verify_coding(coding, z.num(), z.den(), spec);
}

MembershipOracle::MembershipOracle(IfsSpec spec) : spec_(std::move(spec)), radius_sq_(bounding_radius_sq(spec_)) {}

bool MembershipOracle::is_member(const QuadInt& v, const Integer& u) {
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(Key{u, v}); it != cache_.end()) return it->second;
    }
    const StateGraph g = build_state_graph(v, u, spec_, radius_sq_);
    std::lock_guard lock(mutex_);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) cache_.try_emplace(Key{u, g.nodes[i]}, g.live[i]);
    if (!g.root) cache_.try_emplace(Key{u, v}, false);
    return g.root && g.live[*g.root];
}

std::size_t MembershipOracle::cache_size() const {
    std::lock_guard lock(mutex_);
    return cache_.size();
}

}  // namespace qcs
