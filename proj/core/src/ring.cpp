#include "hessmap/ring.hpp"

#include <algorithm>
#include <numeric>

#include "hessmap/errors.hpp"

namespace hessmap {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw Error("ring needs at least one variable");
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw Error("duplicate ring variable '" + names_[i] + "'");
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

const Ring& Ring::ternary() {
    static const Ring r({"x", "y", "z"});
    return r;
}

const Ring& Ring::quaternary() {
    static const Ring r({"x", "y", "z", "t"});
    return r;
}

const Ring& Ring::quartic_params() {
    static const Ring r({"a1", "a2", "b1", "b2", "c1", "c2"});
    return r;
}

const Ring& Ring::cubic_params() {
    static const Ring r({"a", "b", "c", "d"});
    return r;
}

const Ring& Ring::quartic_extended() {
    static const Ring r({"x", "y", "z", "a1", "a2", "b1", "b2", "c1", "c2"});
    return r;
}

const Ring& Ring::cubic_extended() {
    static const Ring r({"x", "y", "z", "t", "a", "b", "c", "d"});
    return r;
}

unsigned ExponentVector::total_degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

ExponentVector ExponentVector::plus(const ExponentVector& o) const {
    std::vector<unsigned> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = exps_[i] + o.exps_[i];
    return ExponentVector(std::move(e));
}

ExponentVector ExponentVector::slice(std::size_t begin, std::size_t end) const {
    return ExponentVector(std::vector<unsigned>(exps_.begin() + begin, exps_.begin() + end));
}

std::string ExponentVector::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(exps_[i]);
    }
    return s + ")";
}

bool GrlexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
    const unsigned da = a.total_degree();
    const unsigned db = b.total_degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(),
                                        b.exponents().begin(), b.exponents().end());
}

std::vector<ExponentVector> exponents_of_degree(std::size_t nvars, unsigned degree) {
    std::vector<ExponentVector> out;
    std::vector<unsigned> cur(nvars, 0);
    // enumerate all compositions of `degree` into nvars parts
    auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
        if (pos + 1 == nvars) {
            cur[pos] = remaining;
            out.push_back(ExponentVector(cur));
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), [](const ExponentVector& a, const ExponentVector& b) {
        return GrlexLess{}(a, b);
    });
    return out;
}

} // namespace hessmap
