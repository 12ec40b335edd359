#include "hessmap/hessian.hpp"

#include <numeric>
#include <vector>

#include "hessmap/errors.hpp"

namespace hessmap {

PolyMatrix hessian_matrix(const MultiPoly& p, std::span<const std::size_t> vars) {
    if (vars.empty()) throw DimensionMismatch("need at least one differentiation variable");
    for (std::size_t v : vars)
        if (v >= p.ring().size())
            throw DimensionMismatch("differentiation variable index out of range");

    const std::size_t n = vars.size();
    std::vector<MultiPoly> first;
    first.reserve(n);
    for (std::size_t i = 0; i < n; ++i) first.push_back(p.partial(vars[i]));

    PolyMatrix h(n, p.ring());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            MultiPoly second = first[i].partial(vars[j]);
            if (i != j) h.at(j, i) = second;
            h.at(i, j) = std::move(second);
        }
    }
    return h;
}

PolyMatrix hessian_matrix(const Form& f) {
    std::vector<std::size_t> vars(f.nvars());
    std::iota(vars.begin(), vars.end(), 0);
    return hessian_matrix(f.poly(), vars);
}

Form hessian(const Form& f) {
    const MultiPoly h = hessian_matrix(f).determinant();
    const unsigned n = static_cast<unsigned>(f.nvars());
    const unsigned declared = f.degree() >= 2 ? n * (f.degree() - 2) : 0;
    if (h.is_zero()) return Form::zero(f.ring(), declared);
    return Form::make(h);
}

Form pullback(const Form& f, const LinearChange& a) {
    if (a.dim() != f.nvars())
        throw DimensionMismatch("linear change has dimension " + std::to_string(a.dim()) +
                                ", form has " + std::to_string(f.nvars()) + " variables");
    MultiPoly sub = f.poly().substitute_linear(a.matrix());
    if (sub.is_zero()) return Form::zero(f.ring(), f.degree());
    return Form::make(std::move(sub));
}

} // namespace hessmap
