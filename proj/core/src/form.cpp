#include "hessmap/form.hpp"

#include "hessmap/errors.hpp"

namespace hessmap {

Form Form::make(MultiPoly poly) {
    const std::size_t n = poly.ring().size();
    if (n < 2 || n > 4)
        throw DimensionMismatch("forms are supported in 2..4 variables, ring has " +
                                std::to_string(n));
    const auto info = poly.homogeneous_degree();
    if (info.kind == MultiPoly::Homogeneity::mixed) {
        // find two monomials of different total degree for the error message
        const auto& terms = poly.terms();
        auto first = terms.begin();
        const unsigned d0 = first->first.total_degree();
        for (auto it = std::next(first); it != terms.end(); ++it) {
            if (it->first.total_degree() != d0) {
                std::string ta = monomial_str(poly.ring(), first->first, first->second, true);
                std::string tb = monomial_str(poly.ring(), it->first, it->second, true);
                throw NotHomogeneous("polynomial is not homogeneous: mixes " + ta + " (degree " +
                                         std::to_string(d0) + ") and " + tb + " (degree " +
                                         std::to_string(it->first.total_degree()) + ")",
                                     ta, tb);
            }
        }
    }
    const unsigned degree = (info.kind == MultiPoly::Homogeneity::homogeneous) ? info.degree : 0;
    return Form(std::move(poly), degree);
}

Form Form::zero(const Ring& ring, unsigned degree) {
    const std::size_t n = ring.size();
    if (n < 2 || n > 4)
        throw DimensionMismatch("forms are supported in 2..4 variables, ring has " +
                                std::to_string(n));
    return Form(MultiPoly::zero(ring), degree);
}

LinearChange::LinearChange(RatMatrix m) : matrix_(std::move(m)), det_(0) {
    require_square(matrix_);
    det_ = det(matrix_);
    if (det_.is_zero()) throw SingularMatrix("linear change of variables must be invertible");
}

LinearChange LinearChange::identity(std::size_t n) {
    return LinearChange(identity_matrix(n));
}

} // namespace hessmap
