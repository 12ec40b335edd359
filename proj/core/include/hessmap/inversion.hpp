#pragma once

#include <optional>
#include <utility>

#include "hessmap/families.hpp"
#include "hessmap/linalg.hpp"

namespace hessmap {

// Quartic-curve coefficients after dividing out the fixed constants:
//   /12 : (6,0,0),(0,6,0),(0,0,6),(3,2,1),(3,1,2)
//   /48 : (5,1,0),(1,5,0),(5,0,1),(1,0,5),(0,5,1),(0,1,5)
//   /24 : (3,3,0),(3,0,3),(0,3,3)
//   /6  : (4,2,0),(2,4,0),(4,0,2),(2,0,4),(0,4,2),(0,2,4)
struct NormalizedCoeffs {
    std::map<ExponentVector, Rational, GrlexLess> values;

    const Rational& at(const ExponentVector& alpha) const;
    const Rational& at(std::initializer_list<unsigned> alpha) const {
        return at(ExponentVector(alpha));
    }
};

// The divisor for each normalized index (the map above, as data).
const std::map<ExponentVector, long, GrlexLess>& normalization_divisors();

// Divides the 20 grouped entries of a quartic table by their constants.
NormalizedCoeffs normalize(const CoeffTable& h);

// The 3x3 rational system in the unknowns (a1, b1, c1):
//   row 1:  n006*a1            - n600*c1  =  n420 - n024
//   row 2:  n060*a1 - n600*b1             =  n402 - n042
//   row 3:            n105*n312*b1 - n150*n321*c1  =  n330*n321 - n303*n312
// (n_alpha denotes the normalized coefficient at alpha.)
struct LinearSystem3 {
    RatMatrix matrix;           // 3x3
    std::vector<Rational> rhs;  // length 3
};

LinearSystem3 assemble_quartic_system(const NormalizedCoeffs& n);

struct InversionResult {
    FamilyCase family;
    // Recovered parameters in param_ring order: (a1,a2,b1,b2,c1,c2) or (a,b,c,d).
    std::vector<Rational> params;
    // Genericity quantities actually evaluated, by name.
    std::vector<std::pair<std::string, Rational>> diagnostics;
    // True only when forward_map(params) reproduces the input table exactly
    // on every entry; false means the table is off the family's image.
    bool consistent;
};

// Closed-form inversion for cubic surfaces:
//   a = -h(0,4,0,0)/h(0,0,2,2)   b = -h(4,0,0,0)/h(0,0,2,2)
//   c = -h(0,0,0,4)/h(2,2,0,0)   d = -h(0,0,4,0)/h(2,2,0,0)
// Throws GenericityFailure when either denominator vanishes.
InversionResult invert_cubic3(const CoeffTable& h);

// Quartic-curve inversion: normalize, solve the 3x3 system for (a1,b1,c1) by
// exact elimination, then recover the degree-2 parameters linearly:
//   a2 = (a1*n015 + n033)/12,  b2 = (b1*n105 + n303)/12,  c2 = (c1*n150 + n330)/12.
// Throws GenericityFailure when the system determinant vanishes. Diagnostics
// carry the system determinant, H = n006*n321 - n060*n312, and the two
// denominator-style quantities n150 and n600.
InversionResult invert_quartic(const CoeffTable& h);

// Compares, as polynomials in the six parameters, the exact determinant of
// the assembled 3x3 system against the closed product form
// n150*n600*(n006*n321 - n060*n312). If they differ, reports the difference
// and the first point of {0,1,2}^6 (odometer order, a1 slowest) where the
// two values disagree, plus both values at the probe point (1,2,3,4,5,6).
struct DeltaReport {
    MultiPoly system_det;    // over the quartic parameter ring
    MultiPoly product_form;
    bool equal;
    MultiPoly difference;    // system_det - product_form

    struct Witness {
        std::vector<Rational> point;
        Rational system_det_value;
        Rational product_form_value;
    };
    std::optional<Witness> witness;  // present iff !equal

    std::vector<Rational> probe_point;  // (1,2,3,4,5,6)
    Rational system_det_at_probe;
    Rational product_form_at_probe;
};

DeltaReport delta_discrepancy_report();

// Certifies that H = n006*n321 - n060*n312 is not the zero polynomial by
// exhibiting the first point of {0,1,2}^6 (odometer order) where it is
// nonzero.
struct HNonzeroReport {
    MultiPoly h_poly;  // over the quartic parameter ring
    bool nonzero;
    std::vector<Rational> witness;
    Rational witness_value;
};

HNonzeroReport verify_h_nonzero();

} // namespace hessmap
