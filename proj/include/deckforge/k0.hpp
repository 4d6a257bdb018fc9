#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "deckforge/catalog.hpp"
#include "deckforge/int_matrix.hpp"

namespace deckforge {

/// A presentation of an abelian group: free on the generators, modulo one
/// relation vector per covering family, each encoding [A] - sum_i [A_i] = 0.
struct K0Presentation {
    std::vector<std::string> generators;
    // sparse relation vectors: (generator index, coefficient)
    std::vector<std::vector<std::pair<std::size_t, long long>>> relations;

    std::size_t generator_index(const std::string& label) const;
    bool operator==(const K0Presentation&) const = default;
};

/// The computed quotient group. Coordinates of a class are listed torsion
/// first (entry i reduced into [0, torsion[i])), then free coordinates.
struct K0Group {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion; // invariant factors > 1, d1 | d2 | ...
    std::map<std::string, std::vector<mpz_class>> class_map;
};

// Quotient computation via Smith normal form of the relation matrix. The
// class map is checked to annihilate every relation before returning.
K0Group present_k0(const K0Presentation& p);

// Presentation with generators the n-edge and (n-1)-edge classes of the
// v-stratum and one relation [G] - sum of deck cards per n-edge class. The
// quotient is free on the (n-1)-edge classes; restricted to n-edge classes
// the class map is the map that sends a class to the sum of its cards.
K0Presentation build_deck_presentation(int v, int n, CatalogStore& store);

// Presentation of the subgraph-cover structure on graphs with at most n_max
// edges and at most v_max vertices: every class is covered by its edges
// (single-edge subgraphs) plus its isolated vertices, and the one-vertex
// class is covered by two copies of itself, which kills it. The quotient is
// free of rank one on the single-edge class.
K0Presentation build_gamma_leq_presentation(int v_max, int n_max,
                                            CatalogStore& store);

/// Result of testing whether an integer assignment on generators is additive
/// over every covering relation, i.e. factors through the quotient.
struct CoveringInvariantCheck {
    bool factors = false;
    std::optional<std::size_t> violating_relation;
};

CoveringInvariantCheck check_covering_invariant(
    const std::map<std::string, long long>& f, const K0Presentation& p);

} // namespace deckforge
