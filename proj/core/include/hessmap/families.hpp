#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hessmap/form.hpp"

namespace hessmap {

// The two parameterized families whose Hessian coefficient tables this
// library studies and inverts:
//
//   quartic-curve (ternary quartics):
//     f = x^4 + y^4 + z^4 + a1*y^2*z^2 + b1*x^2*z^2 + c1*x^2*y^2
//                         + a2*x^2*y*z + b2*x*y^2*z + c2*x*y*z^2
//   cubic-surface (quaternary cubics):
//     f = x^3 + y^3 + z^3 + t^3 + 6a*y*z*t + 6b*x*z*t + 6c*x*y*t + 6d*x*y*z
enum class FamilyCase { quartic_curve, cubic_surface };

std::string family_name(FamilyCase c);                            // "quartic-curve" etc.
std::optional<FamilyCase> family_from_name(std::string_view s);

struct QuarticParams {
    Rational a1, a2, b1, b2, c1, c2;
    bool operator==(const QuarticParams&) const = default;
};

struct CubicSurfParams {
    Rational a, b, c, d;
    bool operator==(const CubicSurfParams&) const = default;
};

std::size_t param_count(FamilyCase c);      // 6 / 4
const Ring& param_ring(FamilyCase c);       // (a1,..,c2) / (a,b,c,d)
const Ring& form_ring(FamilyCase c);        // (x,y,z) / (x,y,z,t)
unsigned form_degree(FamilyCase c);         // 4 / 3
unsigned hessian_degree(FamilyCase c);      // 6 / 4

Form build_quartic(const QuarticParams& p);
Form build_cubic3(const CubicSurfParams& p);
// Generic entry point; params in the param_ring variable order.
Form family_form(FamilyCase c, std::span<const Rational> params);

// Complete coefficient table of a Hessian of a family member: every
// multi-index of the Hessian degree is present (28 quartic / 35 cubic keys),
// zeros included.
class CoeffTable {
public:
    static CoeffTable zero(FamilyCase c);
    // Extracts all coefficients of `h`, which must live in the family's form
    // ring with the family's Hessian degree (throws DimensionMismatch).
    static CoeffTable from_form(const Form& h, FamilyCase c);

    FamilyCase family() const { return family_; }
    const Ring& ring() const { return form_ring(family_); }
    unsigned degree() const { return hessian_degree(family_); }

    // Both throw DimensionMismatch for an index outside the table.
    const Rational& at(const ExponentVector& alpha) const;
    void set(const ExponentVector& alpha, Rational value);

    const std::map<ExponentVector, Rational, GrlexLess>& entries() const { return entries_; }

    CoeffTable scaled(const Rational& c) const;

    bool operator==(const CoeffTable&) const = default;

private:
    explicit CoeffTable(FamilyCase c);

    FamilyCase family_;
    std::map<ExponentVector, Rational, GrlexLess> entries_;
};

// Hessian coefficients of the family member with the given parameters.
CoeffTable forward_map(FamilyCase c, std::span<const Rational> params);
CoeffTable forward_map(const QuarticParams& p);
CoeffTable forward_map(const CubicSurfParams& p);

// Multi-index (in the form variables) -> coefficient as a polynomial in the
// parameters.
using FormulaTable = std::map<ExponentVector, MultiPoly, GrlexLess>;

// The complete symbolic table: expands the family form over the extended ring
// (form variables followed by parameter variables), takes the Hessian
// determinant with respect to the form variables only, and collects each
// coefficient as a polynomial over the parameter ring. All 28 / 35 entries.
const FormulaTable& symbolic_coeff_table(FamilyCase c);

// The hard-coded reference formulas this library asserts against: the 20
// quartic-curve and 6 cubic-surface coefficient polynomials, stored expanded.
const FormulaTable& reference_formulas(FamilyCase c);

struct FormulaRecord {
    ExponentVector index;
    MultiPoly expected;   // reference formula
    MultiPoly computed;   // from the symbolic table
    bool match;
};

struct FormulaReport {
    FamilyCase family;
    std::vector<FormulaRecord> records;  // ascending graded-lex by index

    std::size_t match_count() const;
    bool all_match() const { return match_count() == records.size(); }
};

// Entry-by-entry exact polynomial comparison of the symbolic table against
// `reference`. Mismatches are report content, never exceptions.
FormulaReport verify_formulas(FamilyCase c, const FormulaTable& reference);
FormulaReport verify_reference_formulas(FamilyCase c);

} // namespace hessmap
