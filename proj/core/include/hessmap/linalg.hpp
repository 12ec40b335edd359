#pragma once

#include <optional>
#include <vector>

#include "hessmap/rational.hpp"

namespace hessmap {

// Dense rational matrix as rows of rows.  Small fixed sizes only (2..4 in
// practice), so plain Gaussian elimination with exact arithmetic is plenty.
using RatMatrix = std::vector<std::vector<Rational>>;

// Throws DimensionMismatch unless m is square and non-empty.
void require_square(const RatMatrix& m);

Rational det(const RatMatrix& m);

struct LinearSolveResult {
    Rational determinant;
    // Present iff determinant != 0: the unique x with m * x = rhs.
    std::optional<std::vector<Rational>> solution;
};

// Solves m * x = rhs by fraction-free-ish Gaussian elimination (exact).
LinearSolveResult solve_linear(const RatMatrix& m, const std::vector<Rational>& rhs);

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
std::vector<Rational> mat_apply(const RatMatrix& m, const std::vector<Rational>& v);
RatMatrix identity_matrix(std::size_t n);

} // namespace hessmap
