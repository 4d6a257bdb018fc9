#include <doctest.h>

#include <map>

#include "deckforge/deck.hpp"

using namespace deckforge;

namespace {

std::map<std::string, long long> as_map(const Deck& d) {
    std::map<std::string, long long> out;
    for (const auto& [card, mult] : d.cards) out[card.serial()] = mult;
    return out;
}

} // namespace

TEST_SUITE("decks") {

TEST_CASE("edge deck of the paw") {
    CanonicalGraph paw = CanonicalGraph::parse("G4:0-1,0-2,0-3,1-2");
    Deck deck = edge_deck(paw);
    std::map<std::string, long long> expect{
        {"G4:0-1,0-2,1-2", 1}, // triangle + K1
        {"G4:0-1,0-2,0-3", 1}, // claw
        {"G4:0-1,0-2,1-3", 2}, // P4, twice
    };
    CHECK(as_map(deck) == expect);
    CHECK(deck.total_cards() == 4);
}

TEST_CASE("the two-edge and three-edge duplicate decks") {
    Deck d1 = edge_deck(CanonicalGraph::parse("G4:0-1,2-3"));
    Deck d2 = edge_deck(CanonicalGraph::parse("G4:0-1,0-2"));
    CHECK(d1.cards == d2.cards);
    CHECK(as_map(d1) == std::map<std::string, long long>{{"G4:0-1", 2}});

    Deck d3 = edge_deck(CanonicalGraph::parse("G4:0-1,0-2,1-2"));
    Deck d4 = edge_deck(CanonicalGraph::parse("G4:0-1,0-2,0-3"));
    CHECK(d3.cards == d4.cards);
    CHECK(as_map(d3) == std::map<std::string, long long>{{"G4:0-1,0-2", 3}});
}

TEST_CASE("deck errors") {
    CHECK_THROWS_AS(edge_deck(CanonicalGraph::parse("G3:")), input_error);
    CHECK_THROWS_AS(vertex_deck(CanonicalGraph()), input_error);
}

TEST_CASE("vertex decks") {
    CHECK(as_map(vertex_deck(CanonicalGraph::parse("G2:0-1"))) ==
          std::map<std::string, long long>{{"G1:", 2}});
    CHECK(as_map(vertex_deck(CanonicalGraph::parse("G3:0-1,0-2"))) ==
          std::map<std::string, long long>{{"G2:0-1", 2}, {"G2:", 1}});
    CHECK(as_map(vertex_deck(CanonicalGraph::parse("G3:0-1,0-2,1-2"))) ==
          std::map<std::string, long long>{{"G2:0-1", 3}});
}

TEST_CASE("deck cards preserve the vertex count and drop one edge") {
    CatalogStore store;
    for (int n = 1; n <= 4; ++n) {
        for (const auto& g : store.get(5, n).classes) {
            Deck d = edge_deck(g);
            CHECK(d.total_cards() == g.edge_count());
            for (const auto& [card, mult] : d.cards) {
                (void)mult;
                CHECK(card.vertex_count() == g.vertex_count());
                CHECK(card.edge_count() == g.edge_count() - 1);
            }
        }
    }
}

TEST_CASE("spec deck matrices") {
    CatalogStore store;

    DeckMatrix m42 = deck_matrix(4, 2, DeckKind::edge, store);
    REQUIRE(m42.row_classes.size() == 1);
    REQUIRE(m42.col_classes.size() == 2);
    CHECK(m42.row_classes[0].serial() == "G4:0-1");
    CHECK(m42.entries.at(0, 0) == 2);
    CHECK(m42.entries.at(0, 1) == 2);

    DeckMatrix m43 = deck_matrix(4, 3, DeckKind::edge, store);
    REQUIRE(m43.row_classes.size() == 2);
    REQUIRE(m43.col_classes.size() == 3);
    // rows sorted: P3+K1 then 2K2; cols: claw, triangle+K1, P4
    CHECK(m43.row_classes[0].serial() == "G4:0-1,0-2");
    CHECK(m43.row_classes[1].serial() == "G4:0-1,2-3");
    CHECK(m43.entries.at(0, 0) == 3); // claw -> 3 x (P3+K1)
    CHECK(m43.entries.at(1, 0) == 0);
    CHECK(m43.entries.at(0, 1) == 3); // triangle+K1 -> 3 x (P3+K1)
    CHECK(m43.entries.at(1, 1) == 0);
    CHECK(m43.entries.at(0, 2) == 2); // P4 -> 2 x (P3+K1) + 1 x 2K2
    CHECK(m43.entries.at(1, 2) == 1);

    DeckMatrix m21 = deck_matrix(2, 1, DeckKind::edge, store);
    REQUIRE(m21.row_classes.size() == 1);
    REQUIRE(m21.col_classes.size() == 1);
    CHECK(m21.entries.at(0, 0) == 1);
}

TEST_CASE("column sums: n for edge decks, v for vertex decks (v <= 7)") {
    CatalogStore store;
    for (int v = 1; v <= 7; ++v) {
        int max_edges = v * (v - 1) / 2;
        for (int n = 0; n <= max_edges; ++n) {
            if (n >= 1) {
                DeckMatrix em = deck_matrix(v, n, DeckKind::edge, store);
                for (std::size_t j = 0; j < em.col_classes.size(); ++j) {
                    mpz_class sum = 0;
                    for (std::size_t i = 0; i < em.row_classes.size(); ++i)
                        sum += em.entries.at(i, j);
                    REQUIRE(sum == n);
                }
            }
            DeckMatrix vm = deck_matrix(v, n, DeckKind::vertex, store);
            for (std::size_t j = 0; j < vm.col_classes.size(); ++j) {
                mpz_class sum = 0;
                for (std::size_t i = 0; i < vm.row_classes.size(); ++i)
                    sum += vm.entries.at(i, j);
                REQUIRE(sum == v);
            }
        }
    }
}

TEST_CASE("matrix columns reproduce decks") {
    CatalogStore store;
    DeckMatrix m = deck_matrix(6, 4, DeckKind::edge, store);
    for (std::size_t j = 0; j < m.col_classes.size(); ++j) {
        Deck d = edge_deck(m.col_classes[j]);
        std::vector<mpz_class> col = m.column(j);
        mpz_class listed = 0;
        for (const auto& [card, mult] : d.cards) {
            std::size_t i = 0;
            while (m.row_classes[i].serial() != card.serial()) ++i;
            CHECK(col[i] == mult);
            listed += col[i];
        }
        mpz_class total = 0;
        for (const auto& e : col) total += e;
        CHECK(listed == total);
    }
}

TEST_CASE("deck matrix is thread-count independent") {
    CatalogStore store;
    DeckMatrix a = deck_matrix(6, 4, DeckKind::edge, store, {}, 1);
    DeckMatrix b = deck_matrix(6, 4, DeckKind::edge, store, {}, 4);
    CHECK(a.entries == b.entries);
    CHECK_THROWS_AS(deck_matrix(6, 4, DeckKind::edge, store, MatrixLimits{4}),
                    resource_error);
}

TEST_CASE("erc_scan finds exactly the two small duplicate pairs") {
    CatalogStore store;
    auto p42 = erc_scan(4, 2, store);
    REQUIRE(p42.size() == 1);
    CHECK(p42[0].first.serial() == "G4:0-1,0-2");
    CHECK(p42[0].second.serial() == "G4:0-1,2-3");

    auto p43 = erc_scan(4, 3, store);
    REQUIRE(p43.size() == 1);
    CHECK(p43[0].first.serial() == "G4:0-1,0-2,0-3");  // claw
    CHECK(p43[0].second.serial() == "G4:0-1,0-2,1-2"); // triangle + K1

    CHECK(erc_scan(5, 4, store).empty());
}

TEST_CASE("duplicate-deck pairs share every deck-determined invariant") {
    CatalogStore store;
    for (auto [v, n] : std::vector<std::pair<int, int>>{{4, 2}, {4, 3}, {5, 2}, {5, 3}}) {
        for (const auto& [a, b] : erc_scan(v, n, store)) {
            CHECK(a.vertex_count() == b.vertex_count());
            CHECK(a.edge_count() == b.edge_count());
            std::multiset<int> iso_a, iso_b;
            for (const auto& [card, mult] : edge_deck(a).cards)
                for (long long k = 0; k < mult; ++k)
                    iso_a.insert(card.isolated_vertex_count());
            for (const auto& [card, mult] : edge_deck(b).cards)
                for (long long k = 0; k < mult; ++k)
                    iso_b.insert(card.isolated_vertex_count());
            CHECK(iso_a == iso_b);
        }
    }
}

} // TEST_SUITE
