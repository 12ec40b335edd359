#pragma once

#include <span>

#include "hessmap/form.hpp"
#include "hessmap/polymatrix.hpp"

namespace hessmap {

// Matrix of second partials d2p/(dx_i dx_j) with respect to the listed
// variable indices.  The generic overload lets a polynomial live in a larger
// ring (e.g. with symbolic parameters) while differentiating only in the
// actual form variables.
PolyMatrix hessian_matrix(const MultiPoly& p, std::span<const std::size_t> vars);
PolyMatrix hessian_matrix(const Form& f);

// Hessian determinant of a degree-d form in n variables, as a form of
// declared degree n*(d-2); the zero form is a legitimate value.
Form hessian(const Form& f);

// The substituted form f(A*x), where row i of A gives the image of the
// i-th variable.
Form pullback(const Form& f, const LinearChange& a);

} // namespace hessmap
