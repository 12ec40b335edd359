#pragma once

#include <vector>

#include "hessmap/multipoly.hpp"

namespace hessmap {

// Square matrix with polynomial entries, used for Hessian matrices.
// Dimension is tiny (2..4), so the determinant is computed by cofactor
// expansion along the first row — exact and simple.
class PolyMatrix {
public:
    PolyMatrix(std::size_t dim, const Ring& ring);

    std::size_t dim() const { return dim_; }
    const Ring& ring() const { return ring_; }

    MultiPoly& at(std::size_t i, std::size_t j);
    const MultiPoly& at(std::size_t i, std::size_t j) const;

    MultiPoly determinant() const;

private:
    std::size_t dim_;
    Ring ring_;
    std::vector<MultiPoly> entries_; // row-major
};

} // namespace hessmap
