#include "hessmap/sampling.hpp"

#include "hessmap/errors.hpp"

namespace hessmap {

long SampleRng::uniform_int(long lo, long hi) {
    if (lo > hi) throw DimensionMismatch("empty sampling range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(gen_() % span);
}

std::vector<Rational> sample_params(SampleRng& rng, FamilyCase c) {
    std::vector<Rational> p;
    p.reserve(param_count(c));
    for (std::size_t i = 0; i < param_count(c); ++i)
        p.emplace_back(rng.uniform_int(-9, 9));
    return p;
}

Form sample_form(SampleRng& rng, const Ring& ring, unsigned degree) {
    for (;;) {
        MultiPoly p = MultiPoly::zero(ring);
        for (const auto& alpha : exponents_of_degree(ring.size(), degree)) {
            const long c = rng.uniform_int(-9, 9);
            if (c != 0) p += MultiPoly::monomial(ring, alpha, Rational(c));
        }
        if (!p.is_zero()) return Form::make(std::move(p));
    }
}

LinearChange sample_invertible(SampleRng& rng, std::size_t n) {
    for (;;) {
        RatMatrix m(n, std::vector<Rational>(n, Rational(0)));
        for (auto& row : m)
            for (auto& entry : row) entry = Rational(rng.uniform_int(-3, 3));
        if (!det(m).is_zero()) return LinearChange(std::move(m));
    }
}

} // namespace hessmap
