#pragma once

// Brute-force reference computations used only by tests. Everything here is
// deliberately independent of the library code paths it checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracles {

using Edge = std::pair<int, int>;
using EdgeList = std::vector<Edge>;

inline EdgeList relabel_sorted(const EdgeList& edges, const std::vector<int>& perm) {
    EdgeList out;
    out.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        int x = perm[a], y = perm[b];
        out.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Lexicographically minimal sorted edge list over all v! relabelings.
inline EdgeList canonical_edges(int v, EdgeList edges) {
    for (auto& [a, b] : edges)
        if (a > b) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
    std::vector<int> perm(v);
    std::iota(perm.begin(), perm.end(), 0);
    EdgeList best = edges;
    do {
        EdgeList candidate = relabel_sorted(edges, perm);
        if (candidate < best) best = candidate;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline std::string serialize(int v, const EdgeList& edges) {
    std::string out = "G" + std::to_string(v) + ":";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
    }
    return out;
}

inline std::string canonical_serial(int v, const EdgeList& edges) {
    return serialize(v, canonical_edges(v, edges));
}

// All vertex pairs of v vertices in lexicographic order.
inline EdgeList all_pairs(int v) {
    EdgeList pairs;
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            pairs.emplace_back(a, b);
    return pairs;
}

// Isomorphism classes with v vertices and n edges by sweeping every labeled
// n-edge graph (choice of n pairs) and deduplicating canonical forms.
inline std::set<std::string> enumerate_classes(int v, int n) {
    EdgeList pairs = all_pairs(v);
    int p = static_cast<int>(pairs.size());
    std::set<std::string> classes;
    std::vector<int> pick(n);
    std::iota(pick.begin(), pick.end(), 0);
    if (n == 0) {
        classes.insert(canonical_serial(v, {}));
        return classes;
    }
    if (n > p) return classes;
    while (true) {
        EdgeList edges;
        for (int i : pick) edges.push_back(pairs[i]);
        classes.insert(canonical_serial(v, edges));
        int i = n - 1;
        while (i >= 0 && pick[i] == p - n + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
    return classes;
}

// Count of permutations fixing the edge set.
inline std::uint64_t automorphism_count(int v, EdgeList edges) {
    for (auto& [a, b] : edges)
        if (a > b) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
    std::vector<int> perm(v);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        if (relabel_sorted(edges, perm) == edges) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// Labeled-graph orbit sizes keyed by canonical serialization: every subset of
// vertex pairs with n edges contributes one labeled graph to its class.
inline std::map<std::string, std::uint64_t> labeled_orbit_sizes(int v) {
    EdgeList pairs = all_pairs(v);
    int p = static_cast<int>(pairs.size());
    std::map<std::string, std::uint64_t> orbit;
    for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
        EdgeList edges;
        for (int i = 0; i < p; ++i)
            if ((mask >> i) & 1u) edges.push_back(pairs[i]);
        ++orbit[canonical_serial(v, edges)];
    }
    return orbit;
}

} // namespace oracles
