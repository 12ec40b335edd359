#include "hessmap/polymatrix.hpp"

#include "hessmap/errors.hpp"

namespace hessmap {

PolyMatrix::PolyMatrix(std::size_t dim, const Ring& ring)
    : dim_(dim), ring_(ring), entries_(dim * dim, MultiPoly::zero(ring)) {
    if (dim == 0) throw DimensionMismatch("polynomial matrix dimension must be positive");
}

MultiPoly& PolyMatrix::at(std::size_t i, std::size_t j) {
    if (i >= dim_ || j >= dim_)
        throw DimensionMismatch("matrix index out of range");
    return entries_[i * dim_ + j];
}

const MultiPoly& PolyMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_)
        throw DimensionMismatch("matrix index out of range");
    return entries_[i * dim_ + j];
}

namespace {

MultiPoly det_recursive(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
    const std::size_t n = rows.size();
    if (n == 1) return m.at(rows[0], cols[0]);
    if (n == 2)
        return m.at(rows[0], cols[0]) * m.at(rows[1], cols[1]) -
               m.at(rows[0], cols[1]) * m.at(rows[1], cols[0]);
    MultiPoly acc = MultiPoly::zero(m.ring());
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < n; ++k) {
        const MultiPoly& pivot = m.at(rows[0], cols[k]);
        if (pivot.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        MultiPoly term = pivot * det_recursive(m, sub_rows, sub_cols);
        if (k % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

} // namespace

MultiPoly PolyMatrix::determinant() const {
    std::vector<std::size_t> idx(dim_);
    for (std::size_t i = 0; i < dim_; ++i) idx[i] = i;
    return det_recursive(*this, idx, idx);
}

} // namespace hessmap
