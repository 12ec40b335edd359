#include "hessmap/multipoly.hpp"

#include <sstream>

#include "hessmap/errors.hpp"

namespace hessmap {

MultiPoly MultiPoly::constant(const Ring& ring, Rational value) {
    MultiPoly p(ring);
    p.add_term(ExponentVector(std::vector<unsigned>(ring.size(), 0)), value);
    return p;
}

MultiPoly MultiPoly::monomial(const Ring& ring, ExponentVector alpha, Rational coeff) {
    if (alpha.size() != ring.size())
        throw RingMismatch("exponent vector length " + std::to_string(alpha.size()) +
                           " does not match ring size " + std::to_string(ring.size()));
    MultiPoly p(ring);
    p.add_term(alpha, coeff);
    return p;
}

MultiPoly MultiPoly::variable(const Ring& ring, std::size_t index) {
    std::vector<unsigned> e(ring.size(), 0);
    e.at(index) = 1;
    return monomial(ring, ExponentVector(std::move(e)), Rational(1));
}

void MultiPoly::require_same_ring(const MultiPoly& o) const {
    if (ring_ != o.ring_) {
        std::string lhs, rhs;
        for (const auto& n : ring_.names()) lhs += (lhs.empty() ? "" : ",") + n;
        for (const auto& n : o.ring_.names()) rhs += (rhs.empty() ? "" : ",") + n;
        throw RingMismatch("ring mismatch: (" + lhs + ") vs (" + rhs + ")");
    }
}

void MultiPoly::add_term(const ExponentVector& alpha, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
        terms_.emplace(alpha, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(ring_);
    for (const auto& [alpha, c] : terms_) r.terms_.emplace(alpha, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_ring(o);
    for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_ring(o);
    for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_ring(b);
    MultiPoly r(a.ring_);
    for (const auto& [ae, ac] : a.terms_)
        for (const auto& [be, bc] : b.terms_)
            r.add_term(ae.plus(be), ac * bc);
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [alpha, v] : terms_) r.terms_.emplace(alpha, v * c);
    return r;
}

MultiPoly MultiPoly::partial(std::size_t var) const {
    if (var >= ring_.size())
        throw DimensionMismatch("derivative variable index " + std::to_string(var) +
                                " out of range for ring of size " + std::to_string(ring_.size()));
    MultiPoly r(ring_);
    for (const auto& [alpha, c] : terms_) {
        const unsigned e = alpha[var];
        if (e == 0) continue;
        std::vector<unsigned> down = alpha.exponents();
        down[var] = e - 1;
        r.add_term(ExponentVector(std::move(down)), c * Rational(static_cast<long>(e)));
    }
    return r;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() != ring_.size())
        throw RingMismatch("evaluation point length " + std::to_string(point.size()) +
                           " does not match ring size " + std::to_string(ring_.size()));
    Rational acc(0);
    for (const auto& [alpha, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < ring_.size(); ++i)
            if (alpha[i] != 0) term *= point[i].pow(alpha[i]);
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::substitute_linear(const std::vector<std::vector<Rational>>& m) const {
    const std::size_t n = ring_.size();
    if (m.size() != n)
        throw DimensionMismatch("substitution matrix is " + std::to_string(m.size()) +
                                "-row, ring has " + std::to_string(n) + " variables");
    for (const auto& row : m)
        if (row.size() != n)
            throw DimensionMismatch("substitution matrix is not square");

    // image of each variable under the substitution
    std::vector<MultiPoly> image;
    image.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly li = zero(ring_);
        for (std::size_t j = 0; j < n; ++j)
            if (!m[i][j].is_zero()) li += m[i][j] * variable(ring_, j);
        image.push_back(std::move(li));
    }

    MultiPoly r = zero(ring_);
    for (const auto& [alpha, c] : terms_) {
        MultiPoly term = constant(ring_, c);
        for (std::size_t i = 0; i < n; ++i)
            for (unsigned k = 0; k < alpha[i]; ++k) term = term * image[i];
        r += term;
    }
    return r;
}

Rational MultiPoly::coefficient_of(const ExponentVector& alpha) const {
    if (alpha.size() != ring_.size())
        throw RingMismatch("exponent vector length does not match ring size");
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly::DegreeInfo MultiPoly::homogeneous_degree() const {
    if (terms_.empty()) return {Homogeneity::zero, 0};
    const unsigned d = terms_.begin()->first.total_degree();
    for (const auto& [alpha, c] : terms_)
        if (alpha.total_degree() != d) return {Homogeneity::mixed, 0};
    return {Homogeneity::homogeneous, d};
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [alpha, c] : terms_)
        d = std::max(d, alpha.total_degree());
    return d;
}

namespace {

std::string magnitude_str(const Ring& ring, const ExponentVector& alpha, const Rational& coeff) {
    std::string factors;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += ring.name(i);
        if (alpha[i] > 1) factors += "^" + std::to_string(alpha[i]);
    }
    const Rational mag = coeff.abs();
    if (factors.empty()) return mag.str();
    if (mag.is_one()) return factors;
    return mag.str() + "*" + factors;
}

} // namespace

std::string monomial_str(const Ring& ring, const ExponentVector& alpha,
                         const Rational& coeff, bool with_sign) {
    std::string body = magnitude_str(ring, alpha, coeff);
    if (with_sign && coeff.sign() < 0) return "-" + body;
    return body;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // descending graded-lex: leading term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [alpha, c] = *it;
        if (out.empty()) {
            out = monomial_str(ring_, alpha, c, true);
        } else {
            out += (c.sign() < 0) ? " - " : " + ";
            out += magnitude_str(ring_, alpha, c);
        }
    }
    return out;
}

} // namespace hessmap
