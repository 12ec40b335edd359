#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "hessmap/rational.hpp"
#include "hessmap/ring.hpp"

namespace hessmap {

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed ring, kept canonical: no zero coefficients are ever stored, and two
/// polynomials over the same ring are equal iff their term maps are equal.
/// Values are immutable in use; all operations return new polynomials.
class MultiPoly {
public:
    using TermMap = std::map<ExponentVector, Rational, GrlexLess>;

    static MultiPoly zero(const Ring& ring) { return MultiPoly(ring); }
    static MultiPoly constant(const Ring& ring, Rational value);
    static MultiPoly monomial(const Ring& ring, ExponentVector alpha, Rational coeff);
    static MultiPoly variable(const Ring& ring, std::size_t index);

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const Rational& c) const;
    friend MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p.scaled(c); }
    friend MultiPoly operator*(const MultiPoly& p, const Rational& c) { return p.scaled(c); }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Formal partial derivative with respect to variable `var`.
    MultiPoly partial(std::size_t var) const;

    /// Exact value at a rational point; point length must equal the ring size.
    Rational evaluate(std::span<const Rational> point) const;

    /// Pullback p(A·x): substitutes variable i by the linear form given by
    /// row i of `m`. The matrix must be square of the ring's dimension.
    MultiPoly substitute_linear(const std::vector<std::vector<Rational>>& m) const;

    /// Stored coefficient of the monomial x^alpha, or 0 if absent.
    Rational coefficient_of(const ExponentVector& alpha) const;

    enum class Homogeneity { zero, homogeneous, mixed };
    struct DegreeInfo {
        Homogeneity kind;
        unsigned degree;  // meaningful only when kind == homogeneous
    };
    /// Reports whether every term shares one total degree. The zero
    /// polynomial is its own distinguished case.
    DegreeInfo homogeneous_degree() const;

    /// Max total degree over the stored terms; 0 for the zero polynomial.
    unsigned total_degree() const;

    /// Canonical rendering: terms in descending graded-lex order, signs as
    /// separators, no redundant "1*" factors. The zero polynomial is "0".
    std::string str() const;

private:
    explicit MultiPoly(Ring ring) : ring_(std::move(ring)) {}
    void add_term(const ExponentVector& alpha, const Rational& coeff);
    void require_same_ring(const MultiPoly& o) const;

    Ring ring_;
    TermMap terms_;
};

/// Renders one monomial with its coefficient, e.g. "3/2*x^2*y". Used by the
/// canonical printer and by error reporting.
std::string monomial_str(const Ring& ring, const ExponentVector& alpha,
                         const Rational& coeff, bool with_sign = true);

} // namespace hessmap
