#pragma once

#include "hessmap/linalg.hpp"
#include "hessmap/multipoly.hpp"

namespace hessmap {

// A homogeneous polynomial with a certified degree.  The zero polynomial is
// allowed as a form of any declared degree (it arises naturally as a Hessian
// determinant of degenerate inputs), so the degree is carried explicitly.
class Form {
public:
    // Certifies homogeneity; throws NotHomogeneous (naming two offending
    // monomials) otherwise.  Throws DimensionMismatch unless the ring has
    // 2..4 variables.
    static Form make(MultiPoly poly);

    // The zero form with an explicitly declared degree.
    static Form zero(const Ring& ring, unsigned degree);

    const MultiPoly& poly() const { return poly_; }
    const Ring& ring() const { return poly_.ring(); }
    unsigned degree() const { return degree_; }
    std::size_t nvars() const { return poly_.ring().size(); }
    bool is_zero() const { return poly_.is_zero(); }

    bool operator==(const Form& o) const { return degree_ == o.degree_ && poly_ == o.poly_; }
    bool operator!=(const Form& o) const { return !(*this == o); }

private:
    Form(MultiPoly poly, unsigned degree) : poly_(std::move(poly)), degree_(degree) {}

    MultiPoly poly_;
    unsigned degree_;
};

// An invertible linear change of variables x_i -> sum_j m[i][j] * x_j.
class LinearChange {
public:
    // Throws DimensionMismatch if not square, SingularMatrix if det == 0.
    explicit LinearChange(RatMatrix m);

    static LinearChange identity(std::size_t n);

    const RatMatrix& matrix() const { return matrix_; }
    const Rational& determinant() const { return det_; }
    std::size_t dim() const { return matrix_.size(); }

private:
    RatMatrix matrix_;
    Rational det_;
};

} // namespace hessmap
