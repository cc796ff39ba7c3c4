#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qcs/fractal.hpp"

namespace qcs {

/// Orbit graph of xi -> beta*xi - a over the lattice (1/u) O_K, restricted to
/// the closed disk of radius R'. Node i has value nodes[i] / u.
struct StateGraph {
    Integer u;
    std::vector<QuadInt> nodes;
    /// (digit index, successor node), digits ascending.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> edges;
    std::optional<std::size_t> root;
    /// live[i]: an infinite path starts at node i (equivalently nodes[i]/u is in S).
    std::vector<bool> live;

    std::size_t live_count() const;
};

StateGraph build_state_graph(const QuadInt& v, const Integer& u, const IfsSpec& spec);
StateGraph build_state_graph(const QuadInt& v, const Integer& u, const IfsSpec& spec, const Rational& radius_sq);

bool is_member(const QuadInt& v, const Integer& u, const IfsSpec& spec);
bool is_member(const FieldElement& z, const IfsSpec& spec);

/// Eventually periodic coding; digits are indices into spec.digits().
struct Coding {
    std::vector<std::size_t> preperiod;
    std::vector<std::size_t> period;

    friend bool operator==(const Coding&, const Coding&) = default;
};

/// Walks from the root taking the lowest live digit until a state repeats.
std::optional<Coding> coding_of(const StateGraph& graph);
std::optional<Coding> coding_of(const QuadInt& v, const Integer& u, const IfsSpec& spec);
std::optional<Coding> coding_of(const FieldElement& z, const IfsSpec& spec);

/// Exact check that the coding evaluates to v/u. Throws on an empty period or
/// out-of-range digit index.
bool verify_coding(const Coding& coding, const QuadInt& v, const Integer& u, const IfsSpec& spec);
bool verify_coding(const Coding& coding, const FieldElement& z, const IfsSpec& spec);

/// Membership with a shared cache of state liveness keyed by (u, numerator).
/// Safe for concurrent queries.
class MembershipOracle {
public:
    explicit MembershipOracle(IfsSpec spec);

    const IfsSpec& spec() const noexcept { return spec_; }
    bool is_member(const QuadInt& v, const Integer& u);
    std::size_t cache_size() const;

private:
    struct Key {
        Integer u;
        QuadInt v;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept { return hash_value(k.u) ^ (QuadIntHash{}(k.v) << 1); }
    };

    IfsSpec spec_;
    Rational radius_sq_;
    mutable std::mutex mutex_;
    std::unordered_map<Key, bool, KeyHash> cache_;
};

}  // namespace qcs
