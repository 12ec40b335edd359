#include "hessmap/linalg.hpp"

#include <utility>

#include "hessmap/errors.hpp"

namespace hessmap {

void require_square(const RatMatrix& m) {
    if (m.empty()) throw DimensionMismatch("matrix is empty");
    for (const auto& row : m)
        if (row.size() != m.size())
            throw DimensionMismatch("matrix is not square: " + std::to_string(m.size()) +
                                    " rows, row of length " + std::to_string(row.size()));
}

Rational det(const RatMatrix& m) {
    require_square(m);
    RatMatrix a = m;
    const std::size_t n = a.size();
    Rational result(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            result = -result;
        }
        result *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            const Rational factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c)
                a[r][c] -= factor * a[col][c];
        }
    }
    return result;
}

LinearSolveResult solve_linear(const RatMatrix& m, const std::vector<Rational>& rhs) {
    require_square(m);
    const std::size_t n = m.size();
    if (rhs.size() != n)
        throw DimensionMismatch("right-hand side length " + std::to_string(rhs.size()) +
                                " does not match matrix size " + std::to_string(n));
    RatMatrix a = m;
    std::vector<Rational> b = rhs;
    Rational d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return {Rational(0), std::nullopt};
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(b[pivot], b[col]);
            d = -d;
        }
        d *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            const Rational factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c)
                a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    // back-substitution
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return {d, std::move(x)};
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.empty() || b.empty() || a[0].size() != b.size())
        throw DimensionMismatch("matrix product shape mismatch");
    const std::size_t rows = a.size(), inner = b.size(), cols = b[0].size();
    RatMatrix r(rows, std::vector<Rational>(cols, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j)
                r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

std::vector<Rational> mat_apply(const RatMatrix& m, const std::vector<Rational>& v) {
    if (m.empty() || m[0].size() != v.size())
        throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<Rational> r(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            r[i] += m[i][j] * v[j];
    return r;
}

RatMatrix identity_matrix(std::size_t n) {
    RatMatrix r(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = Rational(1);
    return r;
}

} // namespace hessmap
