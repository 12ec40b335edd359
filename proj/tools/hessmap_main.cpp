// hessmap CLI: Hessian computation, family coefficient tables, inversion,
// and the symbolic verification reports, with deterministic text or JSON
// output and a fixed exit-code contract:
//   0 success, 2 usage/parse error, 3 genericity failure, 4 off-image input,
//   5 asserted identity failed.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hessmap/coeff_io.hpp"
#include "hessmap/errors.hpp"
#include "hessmap/families.hpp"
#include "hessmap/formio.hpp"
#include "hessmap/hessian.hpp"
#include "hessmap/inversion.hpp"
#include "hessmap/sampling.hpp"

using json = nlohmann::ordered_json;
using namespace hessmap;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitGenericity = 3;
constexpr int kExitNotInImage = 4;
constexpr int kExitIdentityFailure = 5;

struct Options {
    bool json_mode = false;
    bool verbose = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string piece;
    while (std::getline(ss, piece, sep)) out.push_back(piece);
    return out;
}

Ring ring_from_vars(const std::string& vars) {
    auto names = split(vars, ',');
    if (names.empty()) throw Error("--vars needs a comma-separated variable list");
    return Ring(names);
}

FamilyCase case_from_flag(const std::string& name) {
    auto c = family_from_name(name);
    if (!c) throw Error("unknown case '" + name + "' (expected quartic-curve or cubic-surface)");
    return *c;
}

// "a1=1,a2=2,..." -> params in param_ring order; every parameter required.
std::vector<Rational> parse_params(const std::string& text, FamilyCase c) {
    const Ring& pring = param_ring(c);
    std::vector<std::optional<Rational>> values(pring.size());
    for (const auto& piece : split(text, ',')) {
        const auto eq = piece.find('=');
        if (eq == std::string::npos) throw Error("bad --params entry '" + piece + "' (want name=value)");
        const std::string name = piece.substr(0, eq);
        const auto idx = pring.index_of(name);
        if (!idx) throw Error("unknown parameter '" + name + "' for case " + family_name(c));
        if (values[*idx]) throw Error("parameter '" + name + "' given twice");
        values[*idx] = Rational::from_string(piece.substr(eq + 1));
    }
    std::vector<Rational> out;
    out.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i]) throw Error("missing parameter '" + pring.name(i) + "'");
        out.push_back(*values[i]);
    }
    return out;
}

json params_json(FamilyCase c, const std::vector<Rational>& params) {
    json obj = json::object();
    for (std::size_t i = 0; i < params.size(); ++i)
        obj[param_ring(c).name(i)] = params[i].str();
    return obj;
}

json diagnostics_json(const std::vector<std::pair<std::string, Rational>>& diag) {
    json obj = json::object();
    for (const auto& [k, v] : diag) obj[k] = v.str();
    return obj;
}

json table_json(const CoeffTable& table) {
    json arr = json::array();
    const auto& entries = table.entries();
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        if (it->second.is_zero()) continue;
        arr.push_back({{"index", it->first.exponents()}, {"value", it->second.str()}});
    }
    return arr;
}

std::string point_str(const std::vector<Rational>& point) {
    std::string s = "(";
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (i) s += ",";
        s += point[i].str();
    }
    return s + ")";
}

void emit(const Options& opt, const json& j) { if (opt.json_mode) std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- hess

int run_hess(const Options& opt, const std::string& form_text, const std::string& file,
             const std::string& vars, bool as_table) {
    std::string text = form_text;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw Error("cannot open form file '" + file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    const Ring ring = ring_from_vars(vars);
    const Form f = parse_form(text, ring);
    const Form h = hessian(f);

    if (opt.json_mode) {
        json coeffs = json::array();
        const auto& terms = h.poly().terms();
        for (auto it = terms.rbegin(); it != terms.rend(); ++it)
            coeffs.push_back({{"index", it->first.exponents()}, {"value", it->second.str()}});
        emit(opt, json{{"vars", ring.names()},
                       {"input", print_form(f)},
                       {"input_degree", f.degree()},
                       {"hessian", print_form(h)},
                       {"degree", h.degree()},
                       {"zero", h.is_zero()},
                       {"coefficients", coeffs}});
        return kExitOk;
    }
    if (as_table) {
        const auto& terms = h.poly().terms();
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            const auto& exps = it->first.exponents();
            for (std::size_t i = 0; i < exps.size(); ++i) std::cout << (i ? "," : "") << exps[i];
            std::cout << " : " << it->second.str() << "\n";
        }
        return kExitOk;
    }
    std::cout << print_form(h) << "\n";
    if (h.is_zero())
        std::cout << "ZERO-HESSIAN: the second-derivative determinant vanishes identically\n";
    return kExitOk;
}

// ---------------------------------------------------------------- invert

void print_inversion_text(const InversionResult& r) {
    std::cout << "case: " << family_name(r.family) << "\n";
    std::cout << "params:";
    for (std::size_t i = 0; i < r.params.size(); ++i)
        std::cout << (i ? ", " : " ") << param_ring(r.family).name(i) << " = "
                  << r.params[i].str();
    std::cout << "\ndiagnostics:";
    for (std::size_t i = 0; i < r.diagnostics.size(); ++i)
        std::cout << (i ? ", " : " ") << r.diagnostics[i].first << " = "
                  << r.diagnostics[i].second.str();
    std::cout << "\nconsistent: " << (r.consistent ? "yes" : "no") << "\n";
}

int run_invert(const Options& opt, const std::string& case_name, const std::string& coeffs_file,
               const std::string& form_text) {
    const FamilyCase c = case_from_flag(case_name);

    CoeffTable table = CoeffTable::zero(c);
    if (!coeffs_file.empty()) {
        table = read_coeff_table_file(coeffs_file, c);
    } else {
        const Form f = parse_form(form_text, form_ring(c));
        if (f.degree() != form_degree(c))
            throw Error("expected a degree-" + std::to_string(form_degree(c)) + " form for " +
                        family_name(c) + ", got degree " + std::to_string(f.degree()));
        table = CoeffTable::from_form(hessian(f), c);
    }

    const InversionResult r =
        c == FamilyCase::quartic_curve ? invert_quartic(table) : invert_cubic3(table);

    if (opt.json_mode) {
        emit(opt, json{{"case", family_name(r.family)},
                       {"params", params_json(r.family, r.params)},
                       {"diagnostics", diagnostics_json(r.diagnostics)},
                       {"consistent", r.consistent}});
    } else {
        print_inversion_text(r);
    }
    if (!r.consistent) {
        std::cerr << "NotInImage: the recovered parameters do not reproduce the input table\n";
        return kExitNotInImage;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- forward

int run_forward(const Options& opt, const std::string& case_name, const std::string& params_text) {
    const FamilyCase c = case_from_flag(case_name);
    const std::vector<Rational> params = parse_params(params_text, c);
    const Form f = family_form(c, params);
    const CoeffTable table = forward_map(c, params);

    if (opt.json_mode) {
        emit(opt, json{{"case", family_name(c)},
                       {"params", params_json(c, params)},
                       {"form", print_form(f)},
                       {"coefficients", table_json(table)}});
        return kExitOk;
    }
    std::cout << "# case: " << family_name(c) << "\n";
    std::cout << "# form: " << print_form(f) << "\n";
    write_coeff_table(std::cout, table);
    return kExitOk;
}

// ---------------------------------------------------------------- roundtrip

int run_roundtrip(const Options& opt, const std::string& case_name, long samples,
                  unsigned long seed) {
    const FamilyCase c = case_from_flag(case_name);
    SampleRng rng(seed);

    long exact = 0, rejected = 0, failed = 0;
    for (long i = 0; i < samples; ++i) {
        const std::vector<Rational> params = sample_params(rng, c);
        const CoeffTable table = forward_map(c, params);
        try {
            const InversionResult r =
                c == FamilyCase::quartic_curve ? invert_quartic(table) : invert_cubic3(table);
            if (r.consistent && r.params == params)
                ++exact;
            else
                ++failed;
        } catch (const GenericityFailure&) {
            ++rejected;
        }
    }

    const long attempted = samples - rejected;
    if (opt.json_mode) {
        emit(opt, json{{"case", family_name(c)},
                       {"samples", samples},
                       {"seed", seed},
                       {"exact", exact},
                       {"rejected", rejected},
                       {"failed", failed}});
    } else {
        std::cout << exact << "/" << attempted << " exact, " << rejected << " rejected\n";
    }
    return failed == 0 ? kExitOk : kExitIdentityFailure;
}

// ---------------------------------------------------------------- verify-tables

int run_verify_tables(const Options& opt) {
    const FormulaReport cubic = verify_reference_formulas(FamilyCase::cubic_surface);
    const FormulaReport quartic = verify_reference_formulas(FamilyCase::quartic_curve);

    auto report_json = [](const FormulaReport& r) {
        json records = json::array();
        for (const auto& rec : r.records)
            records.push_back({{"index", rec.index.exponents()},
                               {"expected", rec.expected.str()},
                               {"computed", rec.computed.str()},
                               {"match", rec.match}});
        return json{{"case", family_name(r.family)},
                    {"total", r.records.size()},
                    {"matched", r.match_count()},
                    {"records", records}};
    };

    const bool ok = cubic.all_match() && quartic.all_match();
    if (opt.json_mode) {
        emit(opt, json{{"cases", json::array({report_json(cubic), report_json(quartic)})},
                       {"all_match", ok}});
    } else {
        std::cout << family_name(cubic.family) << ": " << cubic.match_count() << "/"
                  << cubic.records.size() << (cubic.all_match() ? " MATCH" : " MISMATCH") << "; "
                  << family_name(quartic.family) << ": " << quartic.match_count() << "/"
                  << quartic.records.size() << (quartic.all_match() ? " MATCH" : " MISMATCH")
                  << "\n";
        if (opt.verbose || !ok) {
            for (const FormulaReport* r : {&cubic, &quartic})
                for (const auto& rec : r->records)
                    if (opt.verbose || !rec.match)
                        std::cout << "  " << family_name(r->family) << " " << rec.index.str()
                                  << ": " << (rec.match ? "MATCH" : "MISMATCH")
                                  << " expected = " << rec.expected.str()
                                  << " computed = " << rec.computed.str() << "\n";
        }
    }
    return ok ? kExitOk : kExitIdentityFailure;
}

// ---------------------------------------------------------------- delta-report

int run_delta_report(const Options& opt) {
    const DeltaReport d = delta_discrepancy_report();
    const HNonzeroReport h = verify_h_nonzero();

    if (opt.json_mode) {
        json witness = nullptr;
        if (d.witness)
            witness = json{{"point", [&] {
                                json p = json::array();
                                for (const auto& v : d.witness->point) p.push_back(v.str());
                                return p;
                            }()},
                           {"system_det", d.witness->system_det_value.str()},
                           {"product_form", d.witness->product_form_value.str()}};
        json h_witness = json::array();
        for (const auto& v : h.witness) h_witness.push_back(v.str());
        emit(opt, json{{"system_det", d.system_det.str()},
                       {"product_form", d.product_form.str()},
                       {"equal", d.equal},
                       {"difference", d.difference.str()},
                       {"witness", witness},
                       {"probe",
                        {{"point", [&] {
                              json p = json::array();
                              for (const auto& v : d.probe_point) p.push_back(v.str());
                              return p;
                          }()},
                         {"system_det", d.system_det_at_probe.str()},
                         {"product_form", d.product_form_at_probe.str()}}},
                       {"h_nonzero",
                        {{"polynomial", h.h_poly.str()},
                         {"nonzero", h.nonzero},
                         {"witness", h_witness},
                         {"value", h.witness_value.str()}}}});
        return h.nonzero ? kExitOk : kExitIdentityFailure;
    }

    std::cout << "system determinant (unknowns a1,b1,c1):\n  " << d.system_det.str() << "\n";
    std::cout << "product form n(1,5,0)*n(6,0,0)*(n(0,0,6)*n(3,2,1) - n(0,6,0)*n(3,1,2)):\n  "
              << d.product_form.str() << "\n";
    std::cout << "verdict: " << (d.equal ? "EQUAL" : "UNEQUAL") << "\n";
    if (!d.equal) {
        std::cout << "difference:\n  " << d.difference.str() << "\n";
        if (d.witness)
            std::cout << "first differing point (a1,a2,b1,b2,c1,c2) = "
                      << point_str(d.witness->point)
                      << ": system = " << d.witness->system_det_value.str()
                      << ", product = " << d.witness->product_form_value.str() << "\n";
    }
    std::cout << "probe " << point_str(d.probe_point)
              << ": system = " << d.system_det_at_probe.str()
              << ", product = " << d.product_form_at_probe.str() << "\n";
    std::cout << "H = n(0,0,6)*n(3,2,1) - n(0,6,0)*n(3,1,2): "
              << (h.nonzero ? "nonzero" : "ZERO") << ", witness " << point_str(h.witness)
              << " value " << h.witness_value.str() << "\n";
    return h.nonzero ? kExitOk : kExitIdentityFailure;
}

// ---------------------------------------------------------------- equivariance

int run_equivariance(const Options& opt, long samples, unsigned long seed) {
    SampleRng rng(seed);
    long exact = 0;
    for (long i = 0; i < samples; ++i) {
        bool ok = true;
        for (const FamilyCase c : {FamilyCase::quartic_curve, FamilyCase::cubic_surface}) {
            const Ring& ring = form_ring(c);
            const Form f = sample_form(rng, ring, form_degree(c));
            const LinearChange a = sample_invertible(rng, ring.size());
            const Form lhs = hessian(pullback(f, a));
            const Rational det2 = a.determinant() * a.determinant();
            const MultiPoly rhs = pullback(hessian(f), a).poly().scaled(det2);
            if (lhs.poly() != rhs) ok = false;
        }
        if (ok) ++exact;
    }
    if (opt.json_mode) {
        emit(opt, json{{"samples", samples}, {"seed", seed}, {"exact", exact}});
    } else {
        std::cout << exact << "/" << samples << " exact\n";
    }
    return exact == samples ? kExitOk : kExitIdentityFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hessian maps of homogeneous forms: computation, family "
                 "coefficient tables, and inversion"};
    app.require_subcommand(1);

    Options opt;
    const char* env_mode = std::getenv("HESSMAP_OUTPUT");
    if (env_mode && std::string(env_mode) == "json") opt.json_mode = true;
    app.add_flag("--json,!--text", opt.json_mode,
                 "structured JSON output (default from HESSMAP_OUTPUT=json|text)");
    app.add_flag("--verbose", opt.verbose, "per-entry detail in text reports");

    // hess
    auto* hess_cmd = app.add_subcommand("hess", "Hessian determinant of a form");
    std::string hess_form, hess_file, hess_vars;
    bool hess_table = false;
    hess_cmd->add_option("form", hess_form, "form text, e.g. \"x^4 + y^4 + z^4\"");
    hess_cmd->add_option("--file", hess_file, "read the form text from a file");
    hess_cmd->add_option("--vars", hess_vars, "comma-separated variables, e.g. x,y,z")
        ->required();
    hess_cmd->add_flag("--table", hess_table, "print the coefficient table instead");

    // invert
    auto* invert_cmd = app.add_subcommand("invert", "recover family parameters from a Hessian");
    std::string invert_case, invert_coeffs, invert_form;
    invert_cmd->add_option("--case", invert_case, "quartic-curve | cubic-surface")->required();
    invert_cmd->add_option("--coeffs", invert_coeffs, "coefficient table file");
    invert_cmd->add_option("--form", invert_form, "family-member form text (Hessian is computed)");

    // forward
    auto* forward_cmd =
        app.add_subcommand("forward", "family member and its Hessian coefficient table");
    std::string forward_case, forward_params;
    forward_cmd->add_option("--case", forward_case, "quartic-curve | cubic-surface")->required();
    forward_cmd->add_option("--params", forward_params, "e.g. a1=1,a2=2,b1=3,b2=4,c1=5,c2=6")
        ->required();

    // roundtrip
    auto* roundtrip_cmd =
        app.add_subcommand("roundtrip", "forward-then-invert campaign over random parameters");
    std::string rt_case;
    long rt_samples = 0;
    unsigned long rt_seed = 0;
    roundtrip_cmd->add_option("--case", rt_case, "quartic-curve | cubic-surface")->required();
    roundtrip_cmd->add_option("--samples", rt_samples, "number of parameter tuples")
        ->required()
        ->check(CLI::Range(1L, 1000000000L));
    roundtrip_cmd->add_option("--seed", rt_seed, "RNG seed")->required();

    // verify-tables
    auto* verify_cmd =
        app.add_subcommand("verify-tables", "check the reference coefficient formulas");

    // delta-report
    auto* delta_cmd = app.add_subcommand(
        "delta-report", "system determinant vs the closed product form, plus the H certificate");

    // equivariance
    auto* equiv_cmd =
        app.add_subcommand("equivariance", "Hessian behavior under linear changes of variables");
    long eq_samples = 0;
    unsigned long eq_seed = 0;
    equiv_cmd->add_option("--samples", eq_samples, "number of (form, matrix) pairs per case")
        ->required()
        ->check(CLI::Range(1L, 1000000000L));
    equiv_cmd->add_option("--seed", eq_seed, "RNG seed")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (hess_cmd->parsed()) {
            if (hess_form.empty() == hess_file.empty()) {
                std::cerr << "hess: give exactly one of a form argument or --file\n";
                return kExitUsage;
            }
            return run_hess(opt, hess_form, hess_file, hess_vars, hess_table);
        }
        if (invert_cmd->parsed()) {
            if (invert_coeffs.empty() == invert_form.empty()) {
                std::cerr << "invert: give exactly one of --coeffs or --form\n";
                return kExitUsage;
            }
            return run_invert(opt, invert_case, invert_coeffs, invert_form);
        }
        if (forward_cmd->parsed()) return run_forward(opt, forward_case, forward_params);
        if (roundtrip_cmd->parsed()) return run_roundtrip(opt, rt_case, rt_samples, rt_seed);
        if (verify_cmd->parsed()) return run_verify_tables(opt);
        if (delta_cmd->parsed()) return run_delta_report(opt);
        if (equiv_cmd->parsed()) return run_equivariance(opt, eq_samples, eq_seed);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const GenericityFailure& e) {
        std::cerr << "GenericityFailure: " << e.what() << "\n";
        for (const auto& [k, v] : e.diagnostics) std::cerr << "  " << k << " = " << v << "\n";
        return kExitGenericity;
    } catch (const NotInImage& e) {
        std::cerr << "NotInImage: " << e.what() << "\n";
        return kExitNotInImage;
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error at position " << e.position << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownVariable& e) {
        std::cerr << "unknown variable at position " << e.position << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotHomogeneous& e) {
        std::cerr << "not homogeneous: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
