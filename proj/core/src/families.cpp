#include "hessmap/families.hpp"

#include <numeric>

#include "hessmap/errors.hpp"
#include "hessmap/formio.hpp"
#include "hessmap/hessian.hpp"

namespace hessmap {

std::string family_name(FamilyCase c) {
    return c == FamilyCase::quartic_curve ? "quartic-curve" : "cubic-surface";
}

std::optional<FamilyCase> family_from_name(std::string_view s) {
    if (s == "quartic-curve") return FamilyCase::quartic_curve;
    if (s == "cubic-surface") return FamilyCase::cubic_surface;
    return std::nullopt;
}

std::size_t param_count(FamilyCase c) { return c == FamilyCase::quartic_curve ? 6 : 4; }

const Ring& param_ring(FamilyCase c) {
    return c == FamilyCase::quartic_curve ? Ring::quartic_params() : Ring::cubic_params();
}

const Ring& form_ring(FamilyCase c) {
    return c == FamilyCase::quartic_curve ? Ring::ternary() : Ring::quaternary();
}

unsigned form_degree(FamilyCase c) { return c == FamilyCase::quartic_curve ? 4 : 3; }

unsigned hessian_degree(FamilyCase c) { return c == FamilyCase::quartic_curve ? 6 : 4; }

namespace {

// Exponent layout of each family: the monomial attached to each parameter
// (and the Fermat part with parameter index SIZE_MAX). Shared between the
// numeric builder and the extended-ring symbolic builder so the two can
// never drift apart.
struct FamilyTerm {
    std::vector<unsigned> form_exps;
    std::size_t param;       // index into the param ring, SIZE_MAX for constant 1
    long scale;              // integer factor multiplying the parameter
};

const std::vector<FamilyTerm>& family_terms(FamilyCase c) {
    static const std::vector<FamilyTerm> quartic = {
        {{4, 0, 0}, SIZE_MAX, 1}, {{0, 4, 0}, SIZE_MAX, 1}, {{0, 0, 4}, SIZE_MAX, 1},
        {{0, 2, 2}, 0, 1},  // a1*y^2*z^2
        {{2, 1, 1}, 1, 1},  // a2*x^2*y*z
        {{2, 0, 2}, 2, 1},  // b1*x^2*z^2
        {{1, 2, 1}, 3, 1},  // b2*x*y^2*z
        {{2, 2, 0}, 4, 1},  // c1*x^2*y^2
        {{1, 1, 2}, 5, 1},  // c2*x*y*z^2
    };
    static const std::vector<FamilyTerm> cubic = {
        {{3, 0, 0, 0}, SIZE_MAX, 1}, {{0, 3, 0, 0}, SIZE_MAX, 1},
        {{0, 0, 3, 0}, SIZE_MAX, 1}, {{0, 0, 0, 3}, SIZE_MAX, 1},
        {{0, 1, 1, 1}, 0, 6},  // 6a*y*z*t
        {{1, 0, 1, 1}, 1, 6},  // 6b*x*z*t
        {{1, 1, 0, 1}, 2, 6},  // 6c*x*y*t
        {{1, 1, 1, 0}, 3, 6},  // 6d*x*y*z
    };
    return c == FamilyCase::quartic_curve ? quartic : cubic;
}

const Ring& extended_ring(FamilyCase c) {
    return c == FamilyCase::quartic_curve ? Ring::quartic_extended() : Ring::cubic_extended();
}

} // namespace

Form family_form(FamilyCase c, std::span<const Rational> params) {
    if (params.size() != param_count(c))
        throw DimensionMismatch("family " + family_name(c) + " takes " +
                                std::to_string(param_count(c)) + " parameters, got " +
                                std::to_string(params.size()));
    const Ring& ring = form_ring(c);
    MultiPoly p = MultiPoly::zero(ring);
    for (const auto& term : family_terms(c)) {
        const Rational coeff =
            term.param == SIZE_MAX ? Rational(term.scale) : Rational(term.scale) * params[term.param];
        p += MultiPoly::monomial(ring, ExponentVector(term.form_exps), coeff);
    }
    return Form::make(std::move(p));
}

Form build_quartic(const QuarticParams& p) {
    const Rational params[] = {p.a1, p.a2, p.b1, p.b2, p.c1, p.c2};
    return family_form(FamilyCase::quartic_curve, params);
}

Form build_cubic3(const CubicSurfParams& p) {
    const Rational params[] = {p.a, p.b, p.c, p.d};
    return family_form(FamilyCase::cubic_surface, params);
}

CoeffTable::CoeffTable(FamilyCase c) : family_(c) {
    for (const auto& alpha : exponents_of_degree(form_ring(c).size(), hessian_degree(c)))
        entries_.emplace(alpha, Rational(0));
}

CoeffTable CoeffTable::zero(FamilyCase c) { return CoeffTable(c); }

CoeffTable CoeffTable::from_form(const Form& h, FamilyCase c) {
    if (h.ring() != form_ring(c))
        throw DimensionMismatch("form ring does not match family " + family_name(c));
    if (h.degree() != hessian_degree(c))
        throw DimensionMismatch("expected a degree-" + std::to_string(hessian_degree(c)) +
                                " form for family " + family_name(c) + ", got degree " +
                                std::to_string(h.degree()));
    CoeffTable table(c);
    for (auto& [alpha, value] : table.entries_) value = h.poly().coefficient_of(alpha);
    return table;
}

const Rational& CoeffTable::at(const ExponentVector& alpha) const {
    auto it = entries_.find(alpha);
    if (it == entries_.end())
        throw DimensionMismatch("index " + alpha.str() + " is not a degree-" +
                                std::to_string(degree()) + " multi-index of this table");
    return it->second;
}

void CoeffTable::set(const ExponentVector& alpha, Rational value) {
    auto it = entries_.find(alpha);
    if (it == entries_.end())
        throw DimensionMismatch("index " + alpha.str() + " is not a degree-" +
                                std::to_string(degree()) + " multi-index of this table");
    it->second = std::move(value);
}

CoeffTable CoeffTable::scaled(const Rational& c) const {
    CoeffTable r = *this;
    for (auto& [alpha, value] : r.entries_) value *= c;
    return r;
}

CoeffTable forward_map(FamilyCase c, std::span<const Rational> params) {
    return CoeffTable::from_form(hessian(family_form(c, params)), c);
}

CoeffTable forward_map(const QuarticParams& p) {
    return CoeffTable::from_form(hessian(build_quartic(p)), FamilyCase::quartic_curve);
}

CoeffTable forward_map(const CubicSurfParams& p) {
    return CoeffTable::from_form(hessian(build_cubic3(p)), FamilyCase::cubic_surface);
}

namespace {

FormulaTable symbolic_coeff_table_compute(FamilyCase c) {
    const Ring& ext = extended_ring(c);
    const Ring& pring = param_ring(c);
    const std::size_t nf = form_ring(c).size();

    // family form over the extended ring, parameters as indeterminates
    MultiPoly f = MultiPoly::zero(ext);
    for (const auto& term : family_terms(c)) {
        std::vector<unsigned> exps(ext.size(), 0);
        for (std::size_t i = 0; i < nf; ++i) exps[i] = term.form_exps[i];
        if (term.param != SIZE_MAX) exps[nf + term.param] = 1;
        f += MultiPoly::monomial(ext, ExponentVector(std::move(exps)), Rational(term.scale));
    }

    std::vector<std::size_t> form_vars(nf);
    std::iota(form_vars.begin(), form_vars.end(), 0);
    const MultiPoly hess = hessian_matrix(f, form_vars).determinant();

    // split each monomial into its form part (table key) and parameter part
    FormulaTable table;
    for (const auto& alpha : exponents_of_degree(nf, hessian_degree(c)))
        table.emplace(alpha, MultiPoly::zero(pring));
    for (const auto& [exps, coeff] : hess.terms()) {
        const ExponentVector form_part = exps.slice(0, nf);
        const ExponentVector param_part = exps.slice(nf, ext.size());
        auto it = table.find(form_part);
        if (it == table.end())
            throw Error("symbolic Hessian produced unexpected form-degree monomial " +
                        form_part.str());
        it->second += MultiPoly::monomial(pring, param_part, coeff);
    }
    return table;
}

} // namespace

const FormulaTable& symbolic_coeff_table(FamilyCase c) {
    static const FormulaTable quartic = symbolic_coeff_table_compute(FamilyCase::quartic_curve);
    static const FormulaTable cubic = symbolic_coeff_table_compute(FamilyCase::cubic_surface);
    return c == FamilyCase::quartic_curve ? quartic : cubic;
}

const FormulaTable& reference_formulas(FamilyCase c) {
    // Coefficient polynomials transcribed with constants multiplied through,
    // so comparison against the computed table is plain canonical equality.
    static const FormulaTable quartic = [] {
        const Ring& R = Ring::quartic_params();
        FormulaTable t;
        auto put = [&](ExponentVector alpha, std::string_view text) {
            t.emplace(std::move(alpha), parse_polynomial(text, R));
        };
        put({6, 0, 0}, "48*b1*c1 - 12*a2^2");
        put({0, 6, 0}, "48*a1*c1 - 12*b2^2");
        put({0, 0, 6}, "48*a1*b1 - 12*c2^2");
        put({5, 1, 0}, "48*c1*c2 - 48*a2*b2");
        put({1, 5, 0}, "48*c1*c2 - 48*a2*b2");
        put({5, 0, 1}, "48*b1*b2 - 48*a2*c2");
        put({1, 0, 5}, "48*b1*b2 - 48*a2*c2");
        put({0, 5, 1}, "48*a1*a2 - 48*b2*c2");
        put({0, 1, 5}, "48*a1*a2 - 48*b2*c2");
        put({3, 3, 0}, "24*a2*b2*c1 - 24*c1^2*c2 + 288*c2");
        put({3, 0, 3}, "24*a2*b1*c2 - 24*b1^2*b2 + 288*b2");
        put({0, 3, 3}, "24*a1*b2*c2 - 24*a1^2*a2 + 288*a2");
        put({4, 2, 0}, "48*a1*c1 + 6*a2^2*c1 - 24*b1*c1^2 + 288*b1 - 48*b2^2");
        put({4, 0, 2}, "48*a1*b1 + 6*a2^2*b1 - 24*b1^2*c1 + 288*c1 - 48*c2^2");
        put({2, 4, 0}, "48*b1*c1 + 6*b2^2*c1 - 24*a1*c1^2 + 288*a1 - 48*a2^2");
        put({0, 4, 2}, "48*a1*b1 + 6*a1*b2^2 - 24*a1^2*c1 + 288*c1 - 48*c2^2");
        put({2, 0, 4}, "48*b1*c1 + 6*b1*c2^2 - 24*a1*b1^2 + 288*a1 - 48*a2^2");
        put({0, 2, 4}, "48*a1*c1 + 6*a1*c2^2 - 24*a1^2*b1 + 288*b1 - 48*b2^2");
        put({3, 2, 1}, "12*a2^2*b2 + 24*b1*b2*c1 - 144*a1*b2");
        put({3, 1, 2}, "12*a2^2*c2 + 24*b1*c1*c2 - 144*a1*c2");
        return t;
    }();
    static const FormulaTable cubic = [] {
        const Ring& R = Ring::cubic_params();
        FormulaTable t;
        auto put = [&](ExponentVector alpha, std::string_view text) {
            t.emplace(std::move(alpha), parse_polynomial(text, R));
        };
        put({4, 0, 0, 0}, "2592*b*c*d");
        put({0, 4, 0, 0}, "2592*a*c*d");
        put({0, 0, 4, 0}, "2592*a*b*d");
        put({0, 0, 0, 4}, "2592*a*b*c");
        put({2, 2, 0, 0}, "-2592*a*b");
        put({0, 0, 2, 2}, "-2592*c*d");
        return t;
    }();
    return c == FamilyCase::quartic_curve ? quartic : cubic;
}

std::size_t FormulaReport::match_count() const {
    std::size_t n = 0;
    for (const auto& r : records)
        if (r.match) ++n;
    return n;
}

FormulaReport verify_formulas(FamilyCase c, const FormulaTable& reference) {
    const FormulaTable& computed = symbolic_coeff_table(c);
    FormulaReport report{c, {}};
    for (const auto& [alpha, expected] : reference) {
        auto it = computed.find(alpha);
        const MultiPoly got =
            it != computed.end() ? it->second : MultiPoly::zero(param_ring(c));
        report.records.push_back({alpha, expected, got, got == expected});
    }
    return report;
}

FormulaReport verify_reference_formulas(FamilyCase c) {
    return verify_formulas(c, reference_formulas(c));
}

} // namespace hessmap
