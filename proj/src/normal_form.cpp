#include "deckforge/normal_form.hpp"

#include <algorithm>
#include <cstdlib>

namespace deckforge {
namespace {

// Row and column operations with unimodular bookkeeping. det_sign flips on
// swaps and negations, so |det| = 1 holds structurally for u and v.
struct RowOps {
    IntMatrix* m;
    IntMatrix* u;
    int det_sign = 1;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < m->cols(); ++c)
            std::swap(m->at(i, c), m->at(j, c));
        for (std::size_t c = 0; c < u->cols(); ++c)
            std::swap(u->at(i, c), u->at(j, c));
        det_sign = -det_sign;
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < m->cols(); ++c) m->at(i, c) = -m->at(i, c);
        for (std::size_t c = 0; c < u->cols(); ++c) u->at(i, c) = -u->at(i, c);
        det_sign = -det_sign;
    }
    // row i -= q * row j
    void submul_row(std::size_t i, std::size_t j, const mpz_class& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < m->cols(); ++c)
            m->at(i, c) -= q * m->at(j, c);
        for (std::size_t c = 0; c < u->cols(); ++c)
            u->at(i, c) -= q * u->at(j, c);
    }
};

struct ColOps {
    IntMatrix* m;
    IntMatrix* v;
    int det_sign = 1;

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < m->rows(); ++r)
            std::swap(m->at(r, i), m->at(r, j));
        for (std::size_t r = 0; r < v->rows(); ++r)
            std::swap(v->at(r, i), v->at(r, j));
        det_sign = -det_sign;
    }
    void negate_col(std::size_t i) {
        for (std::size_t r = 0; r < m->rows(); ++r) m->at(r, i) = -m->at(r, i);
        for (std::size_t r = 0; r < v->rows(); ++r) v->at(r, i) = -v->at(r, i);
        det_sign = -det_sign;
    }
    // col i -= q * col j
    void submul_col(std::size_t i, std::size_t j, const mpz_class& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < m->rows(); ++r)
            m->at(r, i) -= q * m->at(r, j);
        for (std::size_t r = 0; r < v->rows(); ++r)
            v->at(r, i) -= q * v->at(r, j);
    }
};

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

HnfResult hnf(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    RowOps ops{&h, &u};

    std::size_t row = 0;
    for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
        // euclidean elimination below position (row, col)
        while (true) {
            std::size_t pivot = row;
            bool found = false;
            for (std::size_t i = row; i < h.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                if (!found || cmp(abs(h.at(i, col)), abs(h.at(pivot, col))) < 0)
                    pivot = i, found = true;
            }
            if (!found) break;
            ops.swap_rows(row, pivot);
            bool cleared = true;
            for (std::size_t i = row + 1; i < h.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                ops.submul_row(i, row, floor_div(h.at(i, col), h.at(row, col)));
                if (h.at(i, col) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (h.at(row, col) == 0) continue;
        if (h.at(row, col) < 0) ops.negate_row(row);
        for (std::size_t i = 0; i < row; ++i)
            ops.submul_row(i, row, floor_div(h.at(i, col), h.at(row, col)));
        ++row;
    }

    if (std::abs(ops.det_sign) != 1)
        throw invariant_error("hnf: transform determinant not unimodular");
    if (u.multiplied(m) != h)
        throw invariant_error("hnf: certificate u*m == h failed");
    return HnfResult{std::move(h), std::move(u)};
}

std::size_t SnfResult::rank() const {
    std::size_t r = 0;
    std::size_t lim = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < lim; ++i)
        if (d.at(i, i) != 0) ++r;
    return r;
}

std::vector<mpz_class> SnfResult::diagonal() const {
    std::size_t lim = std::min(d.rows(), d.cols());
    std::vector<mpz_class> out(lim);
    for (std::size_t i = 0; i < lim; ++i) out[i] = d.at(i, i);
    return out;
}

SnfResult snf(const IntMatrix& m) {
    IntMatrix d = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    RowOps rops{&d, &u};
    ColOps cops{&d, &v};

    std::size_t lim = std::min(d.rows(), d.cols());

    // isolate a pivot at (t, t): pull the absolutely smallest nonzero entry
    // of the active submatrix to the corner, then alternate row and column
    // reductions until the rest of its row and column vanish
    auto clear_position = [&](std::size_t t) -> bool {
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < d.rows(); ++i)
            for (std::size_t j = t; j < d.cols(); ++j) {
                if (d.at(i, j) == 0) continue;
                if (!found || cmp(abs(d.at(i, j)), abs(d.at(pi, pj))) < 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) return false;
        rops.swap_rows(t, pi);
        cops.swap_cols(t, pj);
        while (true) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t) == 0) continue;
                rops.submul_row(i, t, floor_div(d.at(i, t), d.at(t, t)));
                if (d.at(i, t) != 0) {
                    rops.swap_rows(t, i); // smaller remainder becomes pivot
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j) == 0) continue;
                cops.submul_col(j, t, floor_div(d.at(t, j), d.at(t, t)));
                if (d.at(t, j) != 0) {
                    cops.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            bool col_clear = true;
            for (std::size_t i = t + 1; i < d.rows(); ++i)
                if (d.at(i, t) != 0) col_clear = false;
            bool row_clear = true;
            for (std::size_t j = t + 1; j < d.cols(); ++j)
                if (d.at(t, j) != 0) row_clear = false;
            if (col_clear && row_clear) break;
        }
        if (d.at(t, t) < 0) rops.negate_row(t);
        return true;
    };

    std::size_t t = 0;
    while (t < lim && clear_position(t)) ++t;
    std::size_t diag_count = t;

    // Divisibility repair on one diagonal pair: diag(a, b) -> diag(gcd, lcm)
    // using operations confined to rows {i, j} and columns {i, j}. Outside
    // the pair those rows and columns are zero, so nothing else moves.
    auto fix_pair = [&](std::size_t i, std::size_t j) {
        cops.submul_col(i, j, mpz_class(-1)); // col i += col j
        while (d.at(j, i) != 0) {
            if (d.at(i, i) == 0) {
                rops.swap_rows(i, j);
                continue;
            }
            rops.submul_row(j, i, floor_div(d.at(j, i), d.at(i, i)));
            if (d.at(j, i) != 0) rops.swap_rows(i, j);
        }
        if (d.at(i, i) < 0) rops.negate_row(i);
        // gcd divides the fill-in at (i, j), so one exact column op clears it
        cops.submul_col(j, i, floor_div(d.at(i, j), d.at(i, i)));
        if (d.at(j, j) < 0) rops.negate_row(j);
    };

    bool stable = false;
    while (!stable) {
        stable = true;
        for (std::size_t i = 0; i + 1 < diag_count; ++i) {
            for (std::size_t j = i + 1; j < diag_count; ++j) {
                if (d.at(j, j) % d.at(i, i) == 0) continue;
                fix_pair(i, j);
                stable = false;
            }
        }
    }

    if (std::abs(rops.det_sign) != 1 || std::abs(cops.det_sign) != 1)
        throw invariant_error("snf: transform determinant not unimodular");
    for (std::size_t i = 0; i < lim; ++i) {
        if (d.at(i, i) < 0)
            throw invariant_error("snf: negative diagonal entry");
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && j < d.cols() && d.at(i, j) != 0)
                throw invariant_error("snf: off-diagonal residue");
        if (i + 1 < lim && d.at(i, i) == 0 && d.at(i + 1, i + 1) != 0)
            throw invariant_error("snf: zero before nonzero on the diagonal");
        if (i + 1 < lim && d.at(i, i) != 0 && d.at(i + 1, i + 1) % d.at(i, i) != 0)
            throw invariant_error("snf: divisibility chain broken");
    }
    for (std::size_t i = lim; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (d.at(i, j) != 0)
                throw invariant_error("snf: off-diagonal residue");
    if (u.multiplied(m).multiplied(v) != d)
        throw invariant_error("snf: certificate u*m*v == d failed");

    return SnfResult{std::move(d), std::move(u), std::move(v)};
}

std::vector<std::vector<mpz_class>> kernel_basis(const IntMatrix& m) {
    SnfResult s = snf(m);
    std::size_t r = s.rank();
    std::vector<std::vector<mpz_class>> basis;
    for (std::size_t j = r; j < m.cols(); ++j) {
        std::vector<mpz_class> x(m.cols());
        for (std::size_t i = 0; i < m.cols(); ++i) x[i] = s.v.at(i, j);
        for (auto& e : m.apply(x))
            if (e != 0) throw invariant_error("kernel_basis: m*x != 0");
        for (auto& e : x) {
            if (e == 0) continue;
            if (e < 0)
                for (auto& f : x) f = -f;
            break;
        }
        basis.push_back(std::move(x));
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

} // namespace deckforge
