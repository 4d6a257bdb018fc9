#include "deckforge/k0.hpp"

#include <algorithm>

#include "deckforge/deck.hpp"
#include "deckforge/normal_form.hpp"

namespace deckforge {

std::size_t K0Presentation::generator_index(const std::string& label) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == label) return i;
    throw input_error("label '" + label + "' is not a generator");
}

K0Group present_k0(const K0Presentation& p) {
    std::size_t g = p.generators.size();
    for (const auto& rel : p.relations)
        for (const auto& [idx, coeff] : rel) {
            (void)coeff;
            if (idx >= g)
                throw input_error("relation index " + std::to_string(idx) +
                                  " outside the generator list");
        }

    // columns of m span the relation subgroup of Z^g
    IntMatrix m(g, p.relations.size());
    for (std::size_t r = 0; r < p.relations.size(); ++r)
        for (const auto& [idx, coeff] : p.relations[r])
            m.at(idx, r) += coeff;

    SnfResult s = snf(m);
    std::size_t rank = s.rank();

    K0Group out;
    out.free_rank = g - rank;
    std::vector<std::size_t> torsion_positions;
    for (std::size_t i = 0; i < rank; ++i) {
        if (s.d.at(i, i) > 1) {
            torsion_positions.push_back(i);
            out.torsion.push_back(s.d.at(i, i));
        }
    }

    // In coordinates z = u*x the relation subgroup is the span of d_i * e_i,
    // so the class of x is (z_i mod d_i) on torsion positions plus the
    // untouched coordinates z_i for i >= rank.
    auto coords_of = [&](const std::vector<mpz_class>& x) {
        std::vector<mpz_class> z = s.u.apply(x);
        std::vector<mpz_class> coords;
        coords.reserve(torsion_positions.size() + out.free_rank);
        for (std::size_t k = 0; k < torsion_positions.size(); ++k) {
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), z[torsion_positions[k]].get_mpz_t(),
                       out.torsion[k].get_mpz_t());
            coords.push_back(r);
        }
        for (std::size_t i = rank; i < g; ++i) coords.push_back(z[i]);
        return coords;
    };
    auto annihilated = [&](const std::vector<mpz_class>& x) {
        std::vector<mpz_class> z = s.u.apply(x);
        for (std::size_t i = 0; i < g; ++i) {
            if (i < rank) {
                if (z[i] % s.d.at(i, i) != 0) return false;
            } else if (z[i] != 0) {
                return false;
            }
        }
        return true;
    };

    for (std::size_t j = 0; j < g; ++j) {
        std::vector<mpz_class> e(g);
        e[j] = 1;
        out.class_map.emplace(p.generators[j], coords_of(e));
    }
    for (const auto& rel : p.relations) {
        std::vector<mpz_class> x(g);
        for (const auto& [idx, coeff] : rel) x[idx] += coeff;
        if (!annihilated(x))
            throw invariant_error("present_k0: class map does not kill a "
                                  "relation");
    }
    return out;
}

K0Presentation build_deck_presentation(int v, int n, CatalogStore& store) {
    if (n < 1)
        throw input_error("deck presentation needs n >= 1");
    const StratumCatalog& cards = store.get(v, n - 1);
    const StratumCatalog& front = store.get(v, n);

    K0Presentation p;
    p.generators.reserve(cards.size() + front.size());
    for (const auto& g : cards.classes) p.generators.push_back(g.serial());
    for (const auto& g : front.classes) p.generators.push_back(g.serial());

    std::size_t offset = cards.size();
    for (std::size_t j = 0; j < front.size(); ++j) {
        std::vector<std::pair<std::size_t, long long>> rel;
        rel.emplace_back(offset + j, 1);
        Deck deck = edge_deck(front.classes[j]);
        for (const auto& [card, mult] : deck.cards)
            rel.emplace_back(cards.position_of(card), -mult);
        p.relations.push_back(std::move(rel));
    }
    return p;
}

K0Presentation build_gamma_leq_presentation(int v_max, int n_max,
                                            CatalogStore& store) {
    if (v_max < 1 || n_max < 0)
        throw input_error("gamma_leq presentation needs v_max >= 1, n_max >= 0");

    K0Presentation p;
    std::unordered_map<std::string, std::size_t> index;
    for (int v = 1; v <= v_max; ++v) {
        int top = std::min(n_max, v * (v - 1) / 2);
        for (int n = 0; n <= top; ++n) {
            for (const auto& g : store.get(v, n).classes) {
                index.emplace(g.serial(), p.generators.size());
                p.generators.push_back(g.serial());
            }
        }
    }

    std::size_t one_vertex = index.at("G1:");
    // {* = *} twice covers *, so [*] = 2[*]
    p.relations.push_back({{one_vertex, -1}});

    std::optional<std::size_t> single_edge;
    if (auto it = index.find("G2:0-1"); it != index.end()) single_edge = it->second;

    for (int v = 1; v <= v_max; ++v) {
        int top = std::min(n_max, v * (v - 1) / 2);
        for (int n = 0; n <= top; ++n) {
            for (const auto& g : store.get(v, n).classes) {
                // cover by one single-edge subgraph per edge plus one
                // one-vertex subgraph per isolated vertex
                std::map<std::size_t, long long> acc;
                acc[index.at(g.serial())] += 1;
                if (g.edge_count() > 0) {
                    if (!single_edge)
                        throw input_error("gamma_leq: caps exclude the "
                                          "single-edge class needed to cover " +
                                          g.serial());
                    acc[*single_edge] -= g.edge_count();
                }
                if (g.isolated_vertex_count() > 0)
                    acc[one_vertex] -= g.isolated_vertex_count();
                std::vector<std::pair<std::size_t, long long>> rel;
                for (const auto& [idx, coeff] : acc)
                    if (coeff != 0) rel.emplace_back(idx, coeff);
                p.relations.push_back(std::move(rel));
            }
        }
    }
    return p;
}

CoveringInvariantCheck check_covering_invariant(
    const std::map<std::string, long long>& f, const K0Presentation& p) {
    std::vector<long long> values(p.generators.size());
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        auto it = f.find(p.generators[i]);
        if (it == f.end())
            throw input_error("invariant undefined on generator " +
                              p.generators[i]);
        values[i] = it->second;
    }
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
        mpz_class sum = 0;
        for (const auto& [idx, coeff] : p.relations[r])
            sum += mpz_class(coeff) * mpz_class(values[idx]);
        if (sum != 0) return {false, r};
    }
    return {true, std::nullopt};
}

} // namespace deckforge
