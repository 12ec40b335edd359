#include "hessmap/inversion.hpp"

#include "hessmap/errors.hpp"
#include "hessmap/polymatrix.hpp"

namespace hessmap {

namespace {

GenericityFailure genericity(const std::string& what,
                             const std::vector<std::pair<std::string, Rational>>& diag) {
    std::vector<std::pair<std::string, std::string>> text;
    text.reserve(diag.size());
    for (const auto& [k, v] : diag) text.emplace_back(k, v.str());
    return GenericityFailure(what, std::move(text));
}

} // namespace

const std::map<ExponentVector, long, GrlexLess>& normalization_divisors() {
    static const std::map<ExponentVector, long, GrlexLess> divisors = [] {
        std::map<ExponentVector, long, GrlexLess> d;
        auto group = [&](std::initializer_list<ExponentVector> indices, long divisor) {
            for (const auto& alpha : indices) d.emplace(alpha, divisor);
        };
        group({{6, 0, 0}, {0, 6, 0}, {0, 0, 6}, {3, 2, 1}, {3, 1, 2}}, 12);
        group({{5, 1, 0}, {1, 5, 0}, {5, 0, 1}, {1, 0, 5}, {0, 5, 1}, {0, 1, 5}}, 48);
        group({{3, 3, 0}, {3, 0, 3}, {0, 3, 3}}, 24);
        group({{4, 2, 0}, {2, 4, 0}, {4, 0, 2}, {2, 0, 4}, {0, 4, 2}, {0, 2, 4}}, 6);
        return d;
    }();
    return divisors;
}

const Rational& NormalizedCoeffs::at(const ExponentVector& alpha) const {
    auto it = values.find(alpha);
    if (it == values.end())
        throw DimensionMismatch("no normalized coefficient at index " + alpha.str());
    return it->second;
}

NormalizedCoeffs normalize(const CoeffTable& h) {
    if (h.family() != FamilyCase::quartic_curve)
        throw DimensionMismatch("normalization applies to quartic-curve tables only");
    NormalizedCoeffs n;
    for (const auto& [alpha, divisor] : normalization_divisors())
        n.values.emplace(alpha, h.at(alpha) / Rational(divisor));
    return n;
}

LinearSystem3 assemble_quartic_system(const NormalizedCoeffs& n) {
    const Rational& n600 = n.at({6, 0, 0});
    const Rational& n060 = n.at({0, 6, 0});
    const Rational& n006 = n.at({0, 0, 6});
    const Rational& n150 = n.at({1, 5, 0});
    const Rational& n105 = n.at({1, 0, 5});
    const Rational& n330 = n.at({3, 3, 0});
    const Rational& n303 = n.at({3, 0, 3});
    const Rational& n321 = n.at({3, 2, 1});
    const Rational& n312 = n.at({3, 1, 2});

    LinearSystem3 sys;
    sys.matrix = {
        {n006, Rational(0), -n600},
        {n060, -n600, Rational(0)},
        {Rational(0), n105 * n312, -(n150 * n321)},
    };
    sys.rhs = {
        n.at({4, 2, 0}) - n.at({0, 2, 4}),
        n.at({4, 0, 2}) - n.at({0, 4, 2}),
        n330 * n321 - n303 * n312,
    };
    return sys;
}

InversionResult invert_cubic3(const CoeffTable& h) {
    if (h.family() != FamilyCase::cubic_surface)
        throw DimensionMismatch("invert_cubic3 expects a cubic-surface table");

    const Rational& den_ab = h.at({0, 0, 2, 2});  // -2592*c*d on the image
    const Rational& den_cd = h.at({2, 2, 0, 0});  // -2592*a*b on the image

    std::vector<std::pair<std::string, Rational>> diagnostics = {
        {"h(0,0,2,2)", den_ab},
        {"h(2,2,0,0)", den_cd},
    };
    if (den_ab.is_zero() || den_cd.is_zero())
        throw genericity("cubic-surface inversion denominators vanish", diagnostics);

    const Rational a = -h.at({0, 4, 0, 0}) / den_ab;
    const Rational b = -h.at({4, 0, 0, 0}) / den_ab;
    const Rational c = -h.at({0, 0, 0, 4}) / den_cd;
    const Rational d = -h.at({0, 0, 4, 0}) / den_cd;

    const bool consistent = forward_map(CubicSurfParams{a, b, c, d}) == h;
    return {FamilyCase::cubic_surface, {a, b, c, d}, std::move(diagnostics), consistent};
}

InversionResult invert_quartic(const CoeffTable& h) {
    if (h.family() != FamilyCase::quartic_curve)
        throw DimensionMismatch("invert_quartic expects a quartic-curve table");

    const NormalizedCoeffs n = normalize(h);
    const LinearSystem3 sys = assemble_quartic_system(n);
    const LinearSolveResult solved = solve_linear(sys.matrix, sys.rhs);

    const Rational big_h = n.at({0, 0, 6}) * n.at({3, 2, 1}) - n.at({0, 6, 0}) * n.at({3, 1, 2});
    std::vector<std::pair<std::string, Rational>> diagnostics = {
        {"system_det", solved.determinant},
        {"H", big_h},
        {"n(1,5,0)", n.at({1, 5, 0})},
        {"n(6,0,0)", n.at({6, 0, 0})},
    };

    if (!solved.solution)
        throw genericity("quartic-curve system determinant vanishes", diagnostics);

    const Rational& a1 = (*solved.solution)[0];
    const Rational& b1 = (*solved.solution)[1];
    const Rational& c1 = (*solved.solution)[2];
    const Rational twelfth(1, 12);
    const Rational a2 = (a1 * n.at({0, 1, 5}) + n.at({0, 3, 3})) * twelfth;
    const Rational b2 = (b1 * n.at({1, 0, 5}) + n.at({3, 0, 3})) * twelfth;
    const Rational c2 = (c1 * n.at({1, 5, 0}) + n.at({3, 3, 0})) * twelfth;

    const bool consistent = forward_map(QuarticParams{a1, a2, b1, b2, c1, c2}) == h;
    return {FamilyCase::quartic_curve, {a1, a2, b1, b2, c1, c2}, std::move(diagnostics),
            consistent};
}

namespace {

// Symbolic analogue of `normalize`: the coefficient polynomial at alpha
// divided by its group constant, over the parameter ring.
MultiPoly normalized_symbolic(const ExponentVector& alpha) {
    const auto& table = symbolic_coeff_table(FamilyCase::quartic_curve);
    const long divisor = normalization_divisors().at(alpha);
    return table.at(alpha).scaled(Rational(1, divisor));
}

// Odometer over {0,1,2}^6, first coordinate slowest. Returns the first point
// where `p` evaluates nonzero, if any.
std::optional<std::pair<std::vector<Rational>, Rational>> first_nonzero_small_point(
    const MultiPoly& p) {
    std::vector<int> digits(6, 0);
    for (;;) {
        std::vector<Rational> point;
        point.reserve(6);
        for (int d : digits) point.emplace_back(d);
        const Rational value = p.evaluate(point);
        if (!value.is_zero()) return std::make_pair(std::move(point), value);
        std::size_t i = digits.size();
        while (i > 0 && digits[i - 1] == 2) digits[--i] = 0;
        if (i == 0) return std::nullopt;
        ++digits[i - 1];
    }
}

} // namespace

DeltaReport delta_discrepancy_report() {
    const Ring& pring = param_ring(FamilyCase::quartic_curve);

    const MultiPoly n600 = normalized_symbolic({6, 0, 0});
    const MultiPoly n060 = normalized_symbolic({0, 6, 0});
    const MultiPoly n006 = normalized_symbolic({0, 0, 6});
    const MultiPoly n150 = normalized_symbolic({1, 5, 0});
    const MultiPoly n105 = normalized_symbolic({1, 0, 5});
    const MultiPoly n321 = normalized_symbolic({3, 2, 1});
    const MultiPoly n312 = normalized_symbolic({3, 1, 2});

    PolyMatrix m(3, pring);
    m.at(0, 0) = n006;
    m.at(0, 2) = -n600;
    m.at(1, 0) = n060;
    m.at(1, 1) = -n600;
    m.at(2, 1) = n105 * n312;
    m.at(2, 2) = -(n150 * n321);

    DeltaReport report{
        .system_det = m.determinant(),
        .product_form = n150 * n600 * (n006 * n321 - n060 * n312),
        .equal = false,
        .difference = MultiPoly::zero(pring),
        .witness = std::nullopt,
        .probe_point = {},
        .system_det_at_probe = Rational(0),
        .product_form_at_probe = Rational(0),
    };
    report.difference = report.system_det - report.product_form;
    report.equal = report.difference.is_zero();
    if (!report.equal) {
        if (auto w = first_nonzero_small_point(report.difference)) {
            report.witness = DeltaReport::Witness{
                w->first,
                report.system_det.evaluate(w->first),
                report.product_form.evaluate(w->first),
            };
        }
    }

    report.probe_point = {1, 2, 3, 4, 5, 6};
    report.system_det_at_probe = report.system_det.evaluate(report.probe_point);
    report.product_form_at_probe = report.product_form.evaluate(report.probe_point);
    return report;
}

HNonzeroReport verify_h_nonzero() {
    const MultiPoly h = normalized_symbolic({0, 0, 6}) * normalized_symbolic({3, 2, 1}) -
                        normalized_symbolic({0, 6, 0}) * normalized_symbolic({3, 1, 2});
    HNonzeroReport report{h, !h.is_zero(), {}, Rational(0)};
    if (auto w = first_nonzero_small_point(h)) {
        report.witness = w->first;
        report.witness_value = w->second;
    }
    return report;
}

} // namespace hessmap
