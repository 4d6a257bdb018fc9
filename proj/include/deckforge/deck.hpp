#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "deckforge/catalog.hpp"
#include "deckforge/graph.hpp"
#include "deckforge/int_matrix.hpp"

namespace deckforge {

enum class DeckKind { edge, vertex };

/// Multiset of cards: the one-edge-deleted (or one-vertex-deleted) subgraphs
/// of a graph, counted with multiplicity and sorted by serialization.
struct Deck {
    DeckKind kind = DeckKind::edge;
    std::vector<std::pair<CanonicalGraph, long long>> cards;

    long long total_cards() const;
    // Canonical byte encoding; equal keys mean equal decks.
    std::string key() const;
    bool operator==(const Deck&) const = default;
};

Deck edge_deck(const CanonicalGraph& g);
Deck vertex_deck(const CanonicalGraph& g);

struct MatrixLimits {
    std::uint64_t max_cells = 10'000'000;
};

/// The deck map as an exact matrix on a vertex stratum. For the edge kind,
/// rows are the (v, n-1) classes and entry (i, j) counts how often row class
/// i occurs in the edge deck of column class j; every column sums to n. For
/// the vertex kind, columns are the (v, n) classes, rows run over all
/// (v-1)-vertex classes with at most n edges (ordered by edge count, then
/// serialization), and every column sums to v.
struct DeckMatrix {
    DeckKind kind = DeckKind::edge;
    int v = 0;
    int n = 0;
    std::vector<CanonicalGraph> row_classes;
    std::vector<CanonicalGraph> col_classes;
    IntMatrix entries;

    std::vector<mpz_class> column(std::size_t j) const;
};

DeckMatrix deck_matrix(int v, int n, DeckKind kind, CatalogStore& store,
                       const MatrixLimits& limits = {}, int threads = 1);

/// All unordered pairs of distinct classes in the stratum with identical
/// decks. An empty result certifies edge-reconstructability of the stratum.
std::vector<std::pair<CanonicalGraph, CanonicalGraph>> erc_scan(
    int v, int n, CatalogStore& store);

} // namespace deckforge
