#include "deckforge/deck.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace deckforge {

long long Deck::total_cards() const {
    long long total = 0;
    for (const auto& [_, mult] : cards) total += mult;
    return total;
}

std::string Deck::key() const {
    std::string out;
    for (const auto& [card, mult] : cards) {
        out += card.serial();
        out += '*';
        out += std::to_string(mult);
        out += ';';
    }
    return out;
}

namespace {

Deck collect(DeckKind kind, std::vector<CanonicalGraph> raw_cards) {
    std::map<std::string, std::pair<CanonicalGraph, long long>> acc;
    for (auto& c : raw_cards) {
        auto it = acc.find(c.serial());
        if (it == acc.end())
            acc.emplace(c.serial(), std::make_pair(std::move(c), 1LL));
        else
            ++it->second.second;
    }
    Deck deck;
    deck.kind = kind;
    deck.cards.reserve(acc.size());
    for (auto& [_, entry] : acc) deck.cards.push_back(std::move(entry));
    return deck;
}

} // namespace

Deck edge_deck(const CanonicalGraph& g) {
    if (g.edge_count() == 0)
        throw input_error("edge deck of the edgeless graph " + g.serial() +
                          " is undefined");
    std::vector<CanonicalGraph> cards;
    cards.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
        cards.push_back(delete_edge(g, static_cast<std::size_t>(e)));
    return collect(DeckKind::edge, std::move(cards));
}

Deck vertex_deck(const CanonicalGraph& g) {
    if (g.vertex_count() == 0)
        throw input_error("vertex deck of the empty graph is undefined");
    std::vector<CanonicalGraph> cards;
    cards.reserve(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        cards.push_back(delete_vertex(g, u));
    return collect(DeckKind::vertex, std::move(cards));
}

std::vector<mpz_class> DeckMatrix::column(std::size_t j) const {
    std::vector<mpz_class> col(row_classes.size());
    for (std::size_t i = 0; i < row_classes.size(); ++i) col[i] = entries.at(i, j);
    return col;
}

DeckMatrix deck_matrix(int v, int n, DeckKind kind, CatalogStore& store,
                       const MatrixLimits& limits, int threads) {
    DeckMatrix out;
    out.kind = kind;
    out.v = v;
    out.n = n;

    if (kind == DeckKind::edge) {
        if (n < 1) throw input_error("edge deck matrix needs n >= 1");
        out.row_classes = store.get(v, n - 1).classes;
    } else {
        if (v < 1) throw input_error("vertex deck matrix needs v >= 1");
        for (int m = 0; m <= std::min(n, (v - 1) * (v - 2) / 2); ++m)
            for (const auto& g : store.get(v - 1, m).classes)
                out.row_classes.push_back(g);
    }
    out.col_classes = store.get(v, n).classes;

    std::uint64_t cells = static_cast<std::uint64_t>(out.row_classes.size()) *
                          out.col_classes.size();
    if (cells > limits.max_cells)
        throw resource_error("deck matrix (v=" + std::to_string(v) + ", n=" +
                             std::to_string(n) + ") has " +
                             std::to_string(cells) + " cells, over max_cells=" +
                             std::to_string(limits.max_cells));

    std::unordered_map<std::string, std::size_t> row_index;
    for (std::size_t i = 0; i < out.row_classes.size(); ++i)
        row_index.emplace(out.row_classes[i].serial(), i);

    out.entries = IntMatrix(out.row_classes.size(), out.col_classes.size());

    // columns are independent; compute them in fixed slots so the result
    // does not depend on the thread count
    std::size_t ncols = out.col_classes.size();
    std::vector<Deck> decks(ncols);
    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j)
            decks[j] = (kind == DeckKind::edge) ? edge_deck(out.col_classes[j])
                                                : vertex_deck(out.col_classes[j]);
    };
    int nthreads = std::max(1, std::min<int>(threads, static_cast<int>(ncols)));
    if (nthreads <= 1 || ncols < 2) {
        worker(0, ncols);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (ncols + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            std::size_t begin = t * chunk;
            std::size_t end = std::min(ncols, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    for (std::size_t j = 0; j < ncols; ++j) {
        for (const auto& [card, mult] : decks[j].cards) {
            auto it = row_index.find(card.serial());
            if (it == row_index.end())
                throw invariant_error("deck card " + card.serial() +
                                      " missing from the row catalog");
            out.entries.at(it->second, j) += mult;
        }
    }
    return out;
}

std::vector<std::pair<CanonicalGraph, CanonicalGraph>> erc_scan(
    int v, int n, CatalogStore& store) {
    if (n < 1) throw input_error("erc scan needs n >= 1");
    const StratumCatalog& cat = store.get(v, n);
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t j = 0; j < cat.size(); ++j)
        groups[edge_deck(cat.classes[j]).key()].push_back(j);

    std::vector<std::pair<CanonicalGraph, CanonicalGraph>> pairs;
    for (const auto& [_, members] : groups)
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                pairs.emplace_back(cat.classes[members[a]],
                                   cat.classes[members[b]]);
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

} // namespace deckforge
