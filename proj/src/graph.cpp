#include "deckforge/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace deckforge {
namespace {

using EdgeList = std::vector<VertexPair>;

// Connected components at desk scale fit comfortably in a 32-bit mask.
constexpr int kMaxComponentVertices = 31;
constexpr std::uint64_t kMaxComponentOrderings = 1u << 20;

std::string format_edges(int v, const EdgeList& edges) {
    std::string out = "G" + std::to_string(v) + ":";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(edges[i].first);
        out += '-';
        out += std::to_string(edges[i].second);
    }
    return out;
}

// Exact search for the vertex relabeling of one connected graph that
// minimizes the sorted edge list. Labels 0,1,2,... are assigned one at a
// time. A branch dies as soon as the part of the final edge list it has
// already pinned down loses to the incumbent, where an edge (i,j) is pinned
// once no future edge can sort before it. Unlabeled vertices exchangeable by
// a transposition automorphism yield identical subtrees, so only one
// representative per twin class is tried.
class ConnCanonSearch {
public:
    explicit ConnCanonSearch(std::vector<std::uint32_t> adjacency)
        : nv_(static_cast<int>(adjacency.size())), adj_(std::move(adjacency)),
          label_of_(nv_, -1), orig_of_(nv_, -1) {
        degree_.resize(nv_);
        for (int i = 0; i < nv_; ++i)
            degree_[i] = __builtin_popcount(adj_[i]);
        unlabeled_ = (nv_ == 32) ? ~0u : ((1u << nv_) - 1u);
    }

    EdgeList run() {
        committed_.reserve(64);
        extend(0);
        return best_;
    }

private:
    void extend(int k) {
        if (k == nv_) {
            if (!have_best_ || committed_ < best_) {
                best_ = committed_;
                have_best_ = true;
            }
            return;
        }
        std::vector<int> cands = candidates();
        for (int u : cands) {
            label_of_[u] = k;
            orig_of_[k] = u;
            unlabeled_ &= ~(1u << u);
            commit_edges_of(u, k);
            if (certain_compare(k + 1) <= 0)
                extend(k + 1);
            // edges added at this level are exactly those ending in label k
            committed_.erase(std::remove_if(committed_.begin(), committed_.end(),
                                            [k](const VertexPair& e) {
                                                return e.second == k;
                                            }),
                             committed_.end());
            unlabeled_ |= 1u << u;
            orig_of_[k] = -1;
            label_of_[u] = -1;
        }
    }

    // Unlabeled vertices, one per twin class, ordered so that the first
    // descent lands on a strong incumbent: more adjacency to low labels
    // first, then higher degree.
    std::vector<int> candidates() const {
        std::vector<int> reps;
        std::vector<std::vector<int>> keys;
        for (int u = 0; u < nv_; ++u) {
            if (label_of_[u] >= 0) continue;
            bool twin = false;
            for (int w : reps) {
                std::uint32_t mask = ~((1u << u) | (1u << w));
                if ((adj_[u] & mask) == (adj_[w] & mask)) {
                    twin = true;
                    break;
                }
            }
            if (twin) continue;
            reps.push_back(u);
            std::vector<int> key;
            for (int x = 0; x < nv_; ++x)
                if (((adj_[u] >> x) & 1u) && label_of_[x] >= 0)
                    key.push_back(label_of_[x]);
            std::sort(key.begin(), key.end());
            keys.push_back(std::move(key));
        }
        std::vector<std::size_t> order(reps.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const auto& ka = keys[a];
            const auto& kb = keys[b];
            std::size_t m = std::min(ka.size(), kb.size());
            for (std::size_t i = 0; i < m; ++i)
                if (ka[i] != kb[i]) return ka[i] < kb[i];
            if (ka.size() != kb.size()) return ka.size() > kb.size();
            if (degree_[reps[a]] != degree_[reps[b]])
                return degree_[reps[a]] > degree_[reps[b]];
            return reps[a] < reps[b];
        });
        std::vector<int> out(reps.size());
        for (std::size_t i = 0; i < order.size(); ++i) out[i] = reps[order[i]];
        return out;
    }

    // Adds the edges between u (just labeled k) and previously labeled
    // vertices, keeping committed_ sorted.
    void commit_edges_of(int u, int k) {
        for (int x = 0; x < nv_; ++x) {
            if (!((adj_[u] >> x) & 1u) || label_of_[x] < 0 || x == u) continue;
            VertexPair e{label_of_[x], k};
            committed_.insert(
                std::lower_bound(committed_.begin(), committed_.end(), e), e);
        }
    }

    // -1: the committed prefix already beats the incumbent on a pinned
    // position, +1: it already loses (prune), 0: undecided.
    int certain_compare(int next_label) const {
        if (!have_best_) return 0;
        VertexPair bound{nv_, nv_};
        if (next_label < nv_) {
            int a_min = -1;
            for (int lab = 0; lab < next_label; ++lab) {
                if (adj_[orig_of_[lab]] & unlabeled_) {
                    a_min = lab;
                    break;
                }
            }
            bound = (a_min >= 0) ? VertexPair{a_min, next_label}
                                 : VertexPair{next_label, next_label + 1};
        }
        for (std::size_t i = 0; i < committed_.size(); ++i) {
            if (!(committed_[i] < bound)) break;
            if (i >= best_.size()) return -1;
            if (committed_[i] < best_[i]) return -1;
            if (best_[i] < committed_[i]) return +1;
        }
        return 0;
    }

    int nv_;
    std::vector<std::uint32_t> adj_;
    std::vector<int> degree_;
    std::vector<int> label_of_;
    std::vector<int> orig_of_;
    std::uint32_t unlabeled_;
    EdgeList committed_;
    EdgeList best_;
    bool have_best_ = false;
};

struct Component {
    int nv = 0;
    EdgeList canon;
    std::string key; // "nv|edgetext", identical keys mean isomorphic parts
};

// The lexicographically minimal edge list labels the non-isolated vertices
// first and keeps each connected component on a contiguous label interval,
// so the global minimum is: canonical form per component, then the best
// ordering of the components. The number of distinct orderings is tiny at
// desk scale, so they are tried exhaustively.
EdgeList canonical_edges(int vertex_count, const EdgeList& edges) {
    if (edges.empty()) return {};

    std::vector<int> compact_of(vertex_count, -1);
    std::vector<int> used;
    for (const auto& [a, b] : edges) {
        if (compact_of[a] < 0) { compact_of[a] = 0; used.push_back(a); }
        if (compact_of[b] < 0) { compact_of[b] = 0; used.push_back(b); }
    }
    std::sort(used.begin(), used.end());
    for (std::size_t i = 0; i < used.size(); ++i)
        compact_of[used[i]] = static_cast<int>(i);
    int u_count = static_cast<int>(used.size());

    std::vector<std::vector<int>> nbrs(u_count);
    for (const auto& [a, b] : edges) {
        nbrs[compact_of[a]].push_back(compact_of[b]);
        nbrs[compact_of[b]].push_back(compact_of[a]);
    }

    std::vector<int> comp_of(u_count, -1);
    int comp_count = 0;
    for (int s = 0; s < u_count; ++s) {
        if (comp_of[s] >= 0) continue;
        std::vector<int> stack{s};
        comp_of[s] = comp_count;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : nbrs[x])
                if (comp_of[y] < 0) {
                    comp_of[y] = comp_count;
                    stack.push_back(y);
                }
        }
        ++comp_count;
    }

    std::vector<Component> comps(comp_count);
    {
        std::vector<std::vector<int>> members(comp_count);
        std::vector<int> local_of(u_count, -1);
        for (int x = 0; x < u_count; ++x) members[comp_of[x]].push_back(x);
        for (int c = 0; c < comp_count; ++c) {
            int m = static_cast<int>(members[c].size());
            if (m > kMaxComponentVertices)
                throw resource_error(
                    "canonicalize: connected component with " +
                    std::to_string(m) + " vertices exceeds the supported " +
                    std::to_string(kMaxComponentVertices));
            for (int i = 0; i < m; ++i) local_of[members[c][i]] = i;
            std::vector<std::uint32_t> adj(m, 0);
            for (int x : members[c])
                for (int y : nbrs[x])
                    adj[local_of[x]] |= 1u << local_of[y];
            comps[c].nv = m;
            comps[c].canon = ConnCanonSearch(adj).run();
            comps[c].key = std::to_string(m) + "|" +
                           format_edges(m, comps[c].canon);
        }
    }

    std::sort(comps.begin(), comps.end(),
              [](const Component& a, const Component& b) { return a.key < b.key; });

    std::vector<std::size_t> order(comps.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto order_less = [&](std::size_t a, std::size_t b) {
        return comps[a].key < comps[b].key;
    };

    EdgeList best;
    bool have_best = false;
    std::uint64_t tried = 0;
    do {
        if (++tried > kMaxComponentOrderings)
            throw resource_error("canonicalize: component ordering count cap "
                                 "exceeded");
        EdgeList candidate;
        candidate.reserve(edges.size());
        int offset = 0;
        for (std::size_t idx : order) {
            for (const auto& [a, b] : comps[idx].canon)
                candidate.emplace_back(a + offset, b + offset);
            offset += comps[idx].nv;
        }
        if (!have_best || candidate < best) {
            best = std::move(candidate);
            have_best = true;
        }
    } while (std::next_permutation(order.begin(), order.end(), order_less));

    return best;
}

// Backtracking count of edge-preserving self-bijections of one connected
// component (adjacency given as masks).
std::uint64_t count_connected_automorphisms(const std::vector<std::uint32_t>& adj) {
    int m = static_cast<int>(adj.size());
    std::vector<int> degree(m);
    for (int i = 0; i < m; ++i) degree[i] = __builtin_popcount(adj[i]);
    std::vector<int> image(m, -1);
    std::uint32_t taken = 0;
    std::uint64_t count = 0;

    auto rec = [&](auto&& self, int i) -> void {
        if (i == m) {
            ++count;
            return;
        }
        for (int t = 0; t < m; ++t) {
            if ((taken >> t) & 1u) continue;
            if (degree[t] != degree[i]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (((adj[i] >> j) & 1u) != ((adj[t] >> image[j]) & 1u))
                    ok = false;
            if (!ok) continue;
            image[i] = t;
            taken |= 1u << t;
            self(self, i + 1);
            taken &= ~(1u << t);
            image[i] = -1;
        }
    };
    rec(rec, 0);
    return count;
}

} // namespace

CanonicalGraph::CanonicalGraph(int v, std::vector<VertexPair> canonical_edges)
    : vertex_count_(v), edges_(std::move(canonical_edges)),
      serial_(format_edges(v, edges_)) {}

int CanonicalGraph::isolated_vertex_count() const {
    std::vector<bool> seen(vertex_count_, false);
    for (const auto& [a, b] : edges_) {
        seen[a] = true;
        seen[b] = true;
    }
    int used = static_cast<int>(std::count(seen.begin(), seen.end(), true));
    return vertex_count_ - used;
}

CanonicalGraph CanonicalGraph::parse(std::string_view text) {
    RawGraph raw = parse_raw_graph(text);
    CanonicalGraph g = canonicalize(raw);
    if (g.serial() != text)
        throw input_error("graph '" + std::string(text) +
                          "' is not in canonical form (expected '" +
                          g.serial() + "')");
    return g;
}

RawGraph parse_raw_graph(std::string_view text) {
    auto fail = [&](const std::string& why) -> input_error {
        return input_error("bad graph '" + std::string(text) + "': " + why);
    };
    std::size_t pos = 0;
    auto read_int = [&]() -> int {
        std::size_t start = pos;
        long value = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            value = value * 10 + (text[pos] - '0');
            if (value > 1'000'000) throw fail("vertex label too large");
            ++pos;
        }
        if (pos == start) throw fail("expected a number at offset " +
                                     std::to_string(pos));
        return static_cast<int>(value);
    };

    if (pos >= text.size() || text[pos] != 'G') throw fail("must start with 'G'");
    ++pos;
    RawGraph raw;
    raw.vertex_count = read_int();
    if (pos >= text.size() || text[pos] != ':') throw fail("missing ':'");
    ++pos;
    if (pos < text.size()) {
        while (true) {
            int a = read_int();
            if (pos >= text.size() || text[pos] != '-') throw fail("missing '-'");
            ++pos;
            int b = read_int();
            raw.edges.emplace_back(a, b);
            if (pos == text.size()) break;
            if (text[pos] != ',') throw fail("expected ',' at offset " +
                                             std::to_string(pos));
            ++pos;
        }
    }
    return raw;
}

CanonicalGraph canonicalize(const RawGraph& g) {
    if (g.vertex_count < 0)
        throw input_error("negative vertex count");
    std::vector<VertexPair> edges;
    edges.reserve(g.edges.size());
    for (const auto& [a, b] : g.edges) {
        if (a < 0 || b < 0 || a >= g.vertex_count || b >= g.vertex_count)
            throw input_error("edge (" + std::to_string(a) + "," +
                              std::to_string(b) + ") out of range for " +
                              std::to_string(g.vertex_count) + " vertices");
        if (a == b)
            throw input_error("loop at vertex " + std::to_string(a));
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw input_error("duplicate edge in input");
    return CanonicalGraph(g.vertex_count, canonical_edges(g.vertex_count, edges));
}

CanonicalGraph delete_edge(const CanonicalGraph& g, std::size_t edge_index) {
    if (edge_index >= g.edges().size())
        throw input_error("edge index " + std::to_string(edge_index) +
                          " out of range for " + g.serial());
    RawGraph raw{g.vertex_count(), g.edges()};
    raw.edges.erase(raw.edges.begin() + static_cast<std::ptrdiff_t>(edge_index));
    return canonicalize(raw);
}

CanonicalGraph delete_vertex(const CanonicalGraph& g, int u) {
    if (u < 0 || u >= g.vertex_count())
        throw input_error("vertex " + std::to_string(u) +
                          " out of range for " + g.serial());
    RawGraph raw;
    raw.vertex_count = g.vertex_count() - 1;
    for (const auto& [a, b] : g.edges()) {
        if (a == u || b == u) continue;
        raw.edges.emplace_back(a > u ? a - 1 : a, b > u ? b - 1 : b);
    }
    return canonicalize(raw);
}

CanonicalGraph disjoint_union(const CanonicalGraph& g, const CanonicalGraph& h) {
    RawGraph raw;
    raw.vertex_count = g.vertex_count() + h.vertex_count();
    raw.edges = g.edges();
    for (const auto& [a, b] : h.edges())
        raw.edges.emplace_back(a + g.vertex_count(), b + g.vertex_count());
    return canonicalize(raw);
}

AutCount automorphism_count(const CanonicalGraph& g) {
    // Split into connected pieces; isomorphic pieces may be permuted freely,
    // so |Aut| is the product over piece types of mult! * |Aut(piece)|^mult.
    int v = g.vertex_count();
    std::vector<int> compact_of(v, -1);
    std::vector<int> used;
    for (const auto& [a, b] : g.edges()) {
        if (compact_of[a] < 0) { compact_of[a] = 0; used.push_back(a); }
        if (compact_of[b] < 0) { compact_of[b] = 0; used.push_back(b); }
    }
    std::sort(used.begin(), used.end());
    for (std::size_t i = 0; i < used.size(); ++i)
        compact_of[used[i]] = static_cast<int>(i);
    int u_count = static_cast<int>(used.size());

    std::vector<std::vector<int>> nbrs(u_count);
    for (const auto& [a, b] : g.edges()) {
        nbrs[compact_of[a]].push_back(compact_of[b]);
        nbrs[compact_of[b]].push_back(compact_of[a]);
    }
    std::vector<int> comp_of(u_count, -1);
    std::vector<std::vector<int>> members;
    for (int s = 0; s < u_count; ++s) {
        if (comp_of[s] >= 0) continue;
        members.emplace_back();
        std::vector<int> stack{s};
        comp_of[s] = static_cast<int>(members.size()) - 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            members.back().push_back(x);
            for (int y : nbrs[x])
                if (comp_of[y] < 0) {
                    comp_of[y] = comp_of[s];
                    stack.push_back(y);
                }
        }
    }

    std::vector<std::pair<std::string, std::uint64_t>> piece_info; // key, |Aut|
    std::vector<int> local_of(u_count, -1);
    for (const auto& mem : members) {
        int m = static_cast<int>(mem.size());
        if (m > kMaxComponentVertices)
            throw resource_error("automorphism_count: component too large");
        for (int i = 0; i < m; ++i) local_of[mem[i]] = i;
        std::vector<std::uint32_t> adj(m, 0);
        for (int x : mem)
            for (int y : nbrs[x])
                adj[local_of[x]] |= 1u << local_of[y];
        EdgeList canon = ConnCanonSearch(adj).run();
        piece_info.emplace_back(std::to_string(m) + "|" + format_edges(m, canon),
                                count_connected_automorphisms(adj));
    }
    // isolated vertices are single-vertex pieces
    int iso = g.isolated_vertex_count();
    for (int i = 0; i < iso; ++i) piece_info.emplace_back("1|G1:", 1);

    std::sort(piece_info.begin(), piece_info.end());
    mpz_class order = 1;
    std::size_t i = 0;
    while (i < piece_info.size()) {
        std::size_t j = i;
        while (j < piece_info.size() && piece_info[j].first == piece_info[i].first)
            ++j;
        unsigned long mult = static_cast<unsigned long>(j - i);
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), mult);
        order *= fact;
        mpz_class per(static_cast<unsigned long>(piece_info[i].second));
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), per.get_mpz_t(), mult);
        order *= pw;
        i = j;
    }
    return AutCount{order};
}

} // namespace deckforge
