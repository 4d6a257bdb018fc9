#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "deckforge/errors.hpp"

namespace deckforge {

/// Dense arbitrary-precision integer matrix, row-major. No floating point
/// enters any computation built on this type.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    bool operator==(const IntMatrix&) const = default;

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    IntMatrix multiplied(const IntMatrix& o) const;

    // m * x for a column vector x.
    std::vector<mpz_class> apply(const std::vector<mpz_class>& x) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> a_;
};

} // namespace deckforge
