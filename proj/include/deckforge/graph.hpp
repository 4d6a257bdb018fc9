#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "deckforge/errors.hpp"

namespace deckforge {

// Vertex pair (a, b) with a < b once normalized.
using VertexPair = std::pair<int, int>;

// A labeled graph as supplied by a caller. Edges may be unnormalized.
struct RawGraph {
    int vertex_count = 0;
    std::vector<VertexPair> edges;
};

/// An isomorphism-class representative. The edge list is the lexicographic
/// minimum of the sorted edge list over all relabelings of the vertices, so
/// two graphs are isomorphic exactly when their CanonicalGraphs are equal.
/// Instances are only produced by canonicalize() and the surgery functions,
/// which keeps the invariant airtight. Isolated vertices are significant:
/// vertex_count may exceed the number of vertices that appear in edges.
class CanonicalGraph {
public:
    CanonicalGraph() = default; // the empty graph "G0:"

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexPair>& edges() const { return edges_; }

    // Serialization "G{v}:{a}-{b},{a}-{b},..." -- ASCII, no whitespace,
    // edges sorted. This is the on-disk and on-the-wire format.
    const std::string& serial() const { return serial_; }

    int isolated_vertex_count() const;

    bool operator==(const CanonicalGraph& o) const { return serial_ == o.serial_; }
    // Catalogs and decks order classes by the lexicographic order of their
    // serializations.
    std::strong_ordering operator<=>(const CanonicalGraph& o) const {
        return serial_ <=> o.serial_;
    }

    // Parses a serialization and checks it is in canonical form.
    static CanonicalGraph parse(std::string_view text);

private:
    friend CanonicalGraph canonicalize(const RawGraph&);
    CanonicalGraph(int v, std::vector<VertexPair> canonical_edges);

    int vertex_count_ = 0;
    std::vector<VertexPair> edges_;
    std::string serial_ = "G0:";
};

// Parses the graph format without requiring canonical labeling.
RawGraph parse_raw_graph(std::string_view text);

// Validates the raw graph (endpoints in range, no loops, no duplicate edges)
// and returns its canonical representative. Throws input_error on bad input.
CanonicalGraph canonicalize(const RawGraph& g);

// Removes the edge with the given position in the canonical edge list. The
// vertex set is kept, so deletion may create isolated vertices.
CanonicalGraph delete_edge(const CanonicalGraph& g, std::size_t edge_index);

// Removes vertex u together with all incident edges; vertex_count drops by 1.
CanonicalGraph delete_vertex(const CanonicalGraph& g, int u);

// Disjoint union. Commutative and associative on canonical forms; the empty
// graph is the unit.
CanonicalGraph disjoint_union(const CanonicalGraph& g, const CanonicalGraph& h);

// Order of the automorphism group of g.
struct AutCount {
    mpz_class order;
};

AutCount automorphism_count(const CanonicalGraph& g);

} // namespace deckforge
