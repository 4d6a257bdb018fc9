#pragma once

#include <vector>

#include "deckforge/int_matrix.hpp"

namespace deckforge {

/// h = u * m with u unimodular, h in row-style Hermite normal form: positive
/// pivots stepping right as rows descend, entries above each pivot reduced
/// into [0, pivot). The certificate u*m == h is checked before returning.
struct HnfResult {
    IntMatrix h;
    IntMatrix u;
};

HnfResult hnf(const IntMatrix& m);

/// d = u * m * v with u, v unimodular and d diagonal with d1 | d2 | ...
/// (nonnegative, zeros trailing). Certified on every call: the product
/// identity, the divisibility chain, and |det u| = |det v| = 1 via the
/// elementary-operation sign trace.
struct SnfResult {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;

    std::size_t rank() const;
    // diag entries up to min(rows, cols)
    std::vector<mpz_class> diagonal() const;
};

SnfResult snf(const IntMatrix& m);

/// Basis of the integer kernel lattice {x : m*x = 0}. Vectors are primitive
/// (columns of a unimodular matrix), sign-normalized so the first nonzero
/// entry is positive, and sorted for determinism. The basis spans the full
/// kernel lattice, not just a finite-index sublattice.
std::vector<std::vector<mpz_class>> kernel_basis(const IntMatrix& m);

} // namespace deckforge
