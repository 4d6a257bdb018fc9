#include "deckforge/int_matrix.hpp"

namespace deckforge {

IntMatrix IntMatrix::multiplied(const IntMatrix& o) const {
    if (cols_ != o.rows_)
        throw input_error("matrix product dimension mismatch");
    IntMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const mpz_class& bkj = o.at(k, j);
                if (bkj != 0) out.at(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

std::vector<mpz_class> IntMatrix::apply(const std::vector<mpz_class>& x) const {
    if (x.size() != cols_)
        throw input_error("matrix-vector dimension mismatch");
    std::vector<mpz_class> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const mpz_class& aij = at(i, j);
            if (aij != 0 && x[j] != 0) out[i] += aij * x[j];
        }
    return out;
}

} // namespace deckforge
