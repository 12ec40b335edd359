#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "hessmap/coeff_io.hpp"
#include "hessmap/families.hpp"

using json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

// Runs the installed CLI binary through the shell. HESSMAP_OUTPUT is cleared
// so the ambient environment cannot change the expected output mode; tests
// that exercise the variable pass their own assignment via `env_assign`.
RunResult run_cli(const std::string& args, bool capture_stderr = false,
                  const std::string& env_assign = "") {
    std::string cmd = "env -u HESSMAP_OUTPUT ";
    if (!env_assign.empty()) cmd += env_assign + " ";
    cmd += std::string(HESSMAP_CLI_PATH) + " " + args;
    cmd += capture_stderr ? " 2>&1" : " 2>/dev/null";

    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
}

} // namespace

TEST_CASE("cli: hess prints Hessians, tables, and the zero note") {
    const RunResult fermat = run_cli("hess \"x^4 + y^4 + z^4\" --vars x,y,z");
    CHECK(fermat.exit_code == 0);
    CHECK(fermat.output == "1728*x^2*y^2*z^2\n");

    const RunResult cubic = run_cli("hess \"x^3 + y^3 + z^3 + t^3\" --vars x,y,z,t");
    CHECK(cubic.exit_code == 0);
    CHECK(cubic.output == "1296*x*y*z*t\n");

    const RunResult table = run_cli("hess \"x^4 + y^4 + z^4\" --vars x,y,z --table");
    CHECK(table.exit_code == 0);
    CHECK(table.output == "2,2,2 : 1728\n");

    const RunResult zero = run_cli("hess \"x^4\" --vars x,y,z");
    CHECK(zero.exit_code == 0);
    CHECK(zero.output ==
          "0\nZERO-HESSIAN: the second-derivative determinant vanishes identically\n");

    write_file("/tmp/hessmap_cli_form.txt", "x^4 + y^4 + z^4\n");
    const RunResult from_file = run_cli("hess --file /tmp/hessmap_cli_form.txt --vars x,y,z");
    CHECK(from_file.exit_code == 0);
    CHECK(from_file.output == fermat.output);
    std::remove("/tmp/hessmap_cli_form.txt");
}

TEST_CASE("cli: hess rejects malformed input with positioned messages") {
    const RunResult unknown = run_cli("hess \"x^4 + w^4\" --vars x,y,z", true);
    CHECK(unknown.exit_code == 2);
    CHECK(contains(unknown.output, "unknown variable at position 7"));
    CHECK(contains(unknown.output, "'w'"));

    const RunResult juxta = run_cli("hess \"2x^4\" --vars x,y,z", true);
    CHECK(juxta.exit_code == 2);
    CHECK(contains(juxta.output, "syntax error at position 2"));
    CHECK(contains(juxta.output, "explicit '*'"));

    const RunResult mixed = run_cli("hess \"x^2 + y\" --vars x,y,z", true);
    CHECK(mixed.exit_code == 2);
    CHECK(contains(mixed.output, "not homogeneous"));

    const RunResult dup_vars = run_cli("hess \"x^4\" --vars x,x,y", true);
    CHECK(dup_vars.exit_code == 2);
    CHECK(contains(dup_vars.output, "duplicate ring variable 'x'"));

    CHECK(run_cli("hess \"x^4\"", true).exit_code == 2);  // --vars is required
    const RunResult both =
        run_cli("hess \"x^4\" --file /etc/hostname --vars x,y,z", true);
    CHECK(both.exit_code == 2);
    CHECK(contains(both.output, "give exactly one of a form argument or --file"));
    CHECK(run_cli("hess --vars x,y,z", true).exit_code == 2);  // neither source
}

TEST_CASE("cli: invert recovers parameters from a family member form") {
    const RunResult r = run_cli(
        "invert --case cubic-surface --form "
        "\"x^3+y^3+z^3+t^3+6*y*z*t+6*x*z*t+6*x*y*t+6*x*y*z\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "case: cubic-surface\n"
          "params: a = 1, b = 1, c = 1, d = 1\n"
          "diagnostics: h(0,0,2,2) = -2592, h(2,2,0,0) = -2592\n"
          "consistent: yes\n");
}

TEST_CASE("cli: forward output feeds invert") {
    const RunResult fwd = run_cli(
        "forward --case quartic-curve --params a1=1,a2=2,b1=3,b2=4,c1=5,c2=6");
    CHECK(fwd.exit_code == 0);
    CHECK(contains(fwd.output, "# case: quartic-curve\n"));
    CHECK(contains(fwd.output, "6,0,0 : 672\n"));
    write_file("/tmp/hessmap_cli_fwd.txt", fwd.output);

    const RunResult inv = run_cli("invert --case quartic-curve --coeffs /tmp/hessmap_cli_fwd.txt");
    CHECK(inv.exit_code == 0);
    CHECK(inv.output ==
          "case: quartic-curve\n"
          "params: a1 = 1, a2 = 2, b1 = 3, b2 = 4, c1 = 5, c2 = 6\n"
          "diagnostics: system_det = -2601984, H = -2640, n(1,5,0) = 22, n(6,0,0) = 56\n"
          "consistent: yes\n");
    std::remove("/tmp/hessmap_cli_fwd.txt");

    const RunResult ones = run_cli("forward --case cubic-surface --params a=1,b=1,c=1,d=1");
    CHECK(ones.exit_code == 0);
    CHECK(contains(ones.output,
                   "# form: x^3 + 6*x*y*z + 6*x*y*t + 6*x*z*t + y^3 + 6*y*z*t + z^3 + t^3\n"));
    CHECK(contains(ones.output, "4,0,0,0 : 2592\n"));
}

TEST_CASE("cli: inversion failure modes map to distinct exit codes") {
    // degenerate member: every diagnostic vanishes, exit 3
    write_file("/tmp/hessmap_cli_fermat.txt", "2,2,2 : 1728\n");
    const RunResult generic =
        run_cli("invert --case quartic-curve --coeffs /tmp/hessmap_cli_fermat.txt", true);
    CHECK(generic.exit_code == 3);
    CHECK(contains(generic.output, "GenericityFailure"));
    CHECK(contains(generic.output, "system_det = 0"));
    CHECK(contains(generic.output, "H = 0"));
    CHECK(contains(generic.output, "n(1,5,0) = 0"));
    CHECK(contains(generic.output, "n(6,0,0) = 0"));
    std::remove("/tmp/hessmap_cli_fermat.txt");

    // off-image table: parameters resolve but the recheck fails, exit 4
    using namespace hessmap;
    CoeffTable t = forward_map(QuarticParams{1, 2, 3, 4, 5, 6});
    t.set({2, 2, 2}, t.at({2, 2, 2}) + Rational(1));
    write_file("/tmp/hessmap_cli_offimage.txt", coeff_table_text(t));
    const RunResult off =
        run_cli("invert --case quartic-curve --coeffs /tmp/hessmap_cli_offimage.txt", true);
    CHECK(off.exit_code == 4);
    CHECK(contains(off.output, "consistent: no"));
    CHECK(contains(off.output, "NotInImage"));
    std::remove("/tmp/hessmap_cli_offimage.txt");

    // wrong degree for the requested case, unknown case, conflicting sources
    const RunResult wrong_degree =
        run_cli("invert --case quartic-curve --form \"x^3+y^3+z^3\"", true);
    CHECK(wrong_degree.exit_code == 2);
    CHECK(contains(wrong_degree.output, "expected a degree-4 form"));
    const RunResult bogus = run_cli("invert --case bogus --form \"x^3\"", true);
    CHECK(bogus.exit_code == 2);
    CHECK(contains(bogus.output, "unknown case 'bogus'"));
    CHECK(run_cli("invert --case quartic-curve", true).exit_code == 2);
}

TEST_CASE("cli: forward validates its parameter list") {
    const RunResult missing =
        run_cli("forward --case cubic-surface --params a=1,b=2,c=3", true);
    CHECK(missing.exit_code == 2);
    CHECK(contains(missing.output, "missing parameter 'd'"));

    const RunResult twice =
        run_cli("forward --case cubic-surface --params a=1,a=2,b=1,c=1,d=1", true);
    CHECK(twice.exit_code == 2);
    CHECK(contains(twice.output, "given twice"));

    const RunResult foreign =
        run_cli("forward --case cubic-surface --params a1=1,b=2,c=3,d=4", true);
    CHECK(foreign.exit_code == 2);
    CHECK(contains(foreign.output, "unknown parameter 'a1'"));
}

TEST_CASE("cli: roundtrip campaigns are deterministic") {
    const RunResult cubic = run_cli("roundtrip --case cubic-surface --samples 100 --seed 7");
    CHECK(cubic.exit_code == 0);
    CHECK(cubic.output == "79/79 exact, 21 rejected\n");

    const RunResult quartic = run_cli("roundtrip --case quartic-curve --samples 100 --seed 7");
    CHECK(quartic.exit_code == 0);
    CHECK(quartic.output == "96/96 exact, 4 rejected\n");

    const RunResult again = run_cli("roundtrip --case cubic-surface --samples 100 --seed 7");
    CHECK(again.output == cubic.output);

    CHECK(run_cli("roundtrip --case cubic-surface --samples 0 --seed 7", true).exit_code == 2);
}

TEST_CASE("cli: verify-tables reports every formula matching") {
    const RunResult r = run_cli("verify-tables");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "cubic-surface: 6/6 MATCH; quartic-curve: 20/20 MATCH\n");
    CHECK(run_cli("verify-tables").output == r.output);

    const RunResult verbose = run_cli("--verbose verify-tables");
    CHECK(verbose.exit_code == 0);
    CHECK(contains(verbose.output, "cubic-surface (0,0,2,2): MATCH"));
    CHECK(contains(verbose.output, "quartic-curve (6,0,0): MATCH"));
}

TEST_CASE("cli: delta-report prints the frozen discrepancy certificate") {
    const RunResult r = run_cli("delta-report");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "verdict: UNEQUAL\n"));
    CHECK(contains(r.output,
                   "first differing point (a1,a2,b1,b2,c1,c2) = (0,0,1,1,1,2): "
                   "system = -48, product = -32\n"));
    CHECK(contains(r.output,
                   "probe (1,2,3,4,5,6): system = -2601984, product = -3252480\n"));
    CHECK(contains(r.output,
                   "H = n(0,0,6)*n(3,2,1) - n(0,6,0)*n(3,1,2): nonzero, "
                   "witness (0,0,1,1,1,2) value -4\n"));
    CHECK(run_cli("delta-report").output == r.output);
}

TEST_CASE("cli: equivariance campaign") {
    const RunResult r = run_cli("equivariance --samples 20 --seed 11");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "20/20 exact\n");
}

TEST_CASE("cli: JSON output carries the full structures") {
    const RunResult hess = run_cli("--json hess \"x^4 + y^4 + z^4\" --vars x,y,z");
    CHECK(hess.exit_code == 0);
    const json hj = json::parse(hess.output);
    CHECK(hj.at("hessian") == "1728*x^2*y^2*z^2");
    CHECK(hj.at("degree") == 6);
    CHECK(hj.at("zero") == false);
    CHECK(hj.at("coefficients")[0]["index"] == json::array({2, 2, 2}));
    CHECK(hj.at("coefficients")[0]["value"] == "1728");

    const RunResult inv = run_cli(
        "--json invert --case cubic-surface --form "
        "\"x^3+y^3+z^3+t^3+6*y*z*t+12*x*z*t+18*x*y*t+24*x*y*z\"");
    CHECK(inv.exit_code == 0);
    const json ij = json::parse(inv.output);
    CHECK(ij.at("case") == "cubic-surface");
    CHECK(ij.at("params") == json{{"a", "1"}, {"b", "2"}, {"c", "3"}, {"d", "4"}});
    CHECK(ij.at("diagnostics").at("h(0,0,2,2)") == "-31104");
    CHECK(ij.at("diagnostics").at("h(2,2,0,0)") == "-5184");
    CHECK(ij.at("consistent") == true);

    const RunResult rt = run_cli("--json roundtrip --case cubic-surface --samples 100 --seed 7");
    const json rj = json::parse(rt.output);
    CHECK(rj.at("exact") == 79);
    CHECK(rj.at("rejected") == 21);
    CHECK(rj.at("failed") == 0);

    const RunResult fwd = run_cli("--json forward --case cubic-surface --params a=1,b=1,c=1,d=1");
    const json fj = json::parse(fwd.output);
    CHECK(fj.at("coefficients")[0]["index"] == json::array({4, 0, 0, 0}));
    CHECK(fj.at("coefficients")[0]["value"] == "2592");

    const json vj = json::parse(run_cli("--json verify-tables").output);
    CHECK(vj.at("all_match") == true);
    CHECK(vj.at("cases")[0]["case"] == "cubic-surface");
    CHECK(vj.at("cases")[0]["matched"] == 6);
    CHECK(vj.at("cases")[1]["matched"] == 20);

    const json dj = json::parse(run_cli("--json delta-report").output);
    CHECK(dj.at("equal") == false);
    CHECK(dj.at("witness").at("point") ==
          json::array({"0", "0", "1", "1", "1", "2"}));
    CHECK(dj.at("witness").at("system_det") == "-48");
    CHECK(dj.at("h_nonzero").at("nonzero") == true);
}

TEST_CASE("cli: HESSMAP_OUTPUT selects the mode, flags override") {
    const RunResult env_json = run_cli("verify-tables", false, "HESSMAP_OUTPUT=json");
    CHECK(json::parse(env_json.output).at("all_match") == true);

    const RunResult overridden = run_cli("--text verify-tables", false, "HESSMAP_OUTPUT=json");
    CHECK(overridden.output == "cubic-surface: 6/6 MATCH; quartic-curve: 20/20 MATCH\n");

    const RunResult env_text = run_cli("verify-tables", false, "HESSMAP_OUTPUT=text");
    CHECK(env_text.output == overridden.output);
}

TEST_CASE("cli: usage surface") {
    const RunResult help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(contains(help.output, "hess"));
    CHECK(contains(help.output, "invert"));
    CHECK(contains(help.output, "verify-tables"));
    CHECK(run_cli("", true).exit_code == 2);            // a subcommand is required
    CHECK(run_cli("frobnicate", true).exit_code == 2);  // unknown subcommand
}
