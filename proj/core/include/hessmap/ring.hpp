#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hessmap {

/// An ordered list of variable names fixed at construction. Two polynomials
/// interoperate only over equal rings.
class Ring {
public:
    explicit Ring(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

    static const Ring& ternary();           // x, y, z
    static const Ring& quaternary();        // x, y, z, t
    static const Ring& quartic_params();    // a1, a2, b1, b2, c1, c2
    static const Ring& cubic_params();      // a, b, c, d
    static const Ring& quartic_extended();  // x, y, z, a1, a2, b1, b2, c1, c2
    static const Ring& cubic_extended();    // x, y, z, t, a, b, c, d

private:
    std::vector<std::string> names_;
};

/// Exponent multi-index over a ring's variables; length equals the ring size.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<unsigned> exps) : exps_(std::move(exps)) {}
    ExponentVector(std::initializer_list<unsigned> exps) : exps_(exps) {}

    std::size_t size() const { return exps_.size(); }
    unsigned operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<unsigned>& exponents() const { return exps_; }
    unsigned total_degree() const;

    ExponentVector plus(const ExponentVector& o) const;
    /// Subvector [begin, end).
    ExponentVector slice(std::size_t begin, std::size_t end) const;

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
        return a.exps_ == b.exps_;
    }
    friend bool operator!=(const ExponentVector& a, const ExponentVector& b) {
        return !(a == b);
    }

    std::string str() const;  // "(i,j,k)"

private:
    std::vector<unsigned> exps_;
};

/// Graded lexicographic order: total degree first, then lexicographic on the
/// exponent sequence. A strict total order on each ring's multi-indices.
struct GrlexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

/// All multi-indices of the given total degree over `nvars` variables, in
/// ascending grlex order.
std::vector<ExponentVector> exponents_of_degree(std::size_t nvars, unsigned degree);

} // namespace hessmap
