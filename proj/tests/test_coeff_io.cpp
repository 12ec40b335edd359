#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "hessmap/coeff_io.hpp"
#include "hessmap/errors.hpp"

using namespace hessmap;

namespace {

CoeffTable parse_text(const std::string& text, FamilyCase c) {
    std::istringstream in(text);
    return read_coeff_table(in, c);
}

std::string error_text(const std::string& text, FamilyCase c) {
    try {
        parse_text(text, c);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("tables roundtrip through their text form") {
    const CoeffTable q = forward_map(QuarticParams{1, -2, Rational(3, 7), 4, 5, 6});
    CHECK(parse_text(coeff_table_text(q), FamilyCase::quartic_curve) == q);
    const CoeffTable c = forward_map(CubicSurfParams{Rational(-1, 3), 2, 0, 9});
    CHECK(parse_text(coeff_table_text(c), FamilyCase::cubic_surface) == c);
}

TEST_CASE("writing lists nonzero entries in descending graded-lex order") {
    CHECK(coeff_table_text(forward_map(QuarticParams{0, 0, 0, 0, 0, 0})) == "2,2,2 : 1728\n");
    const std::string text = coeff_table_text(forward_map(QuarticParams{1, 2, 3, 4, 5, 6}));
    CHECK(text.substr(0, text.find('\n')) == "6,0,0 : 672");

    CoeffTable sparse = CoeffTable::zero(FamilyCase::cubic_surface);
    sparse.set({0, 0, 2, 2}, Rational(-1, 3));
    sparse.set({4, 0, 0, 0}, Rational(7));
    CHECK(coeff_table_text(sparse) == "4,0,0,0 : 7\n0,0,2,2 : -1/3\n");
}

TEST_CASE("comments, blank lines, spacing, fractions, and defaults") {
    const std::string text =
        "# partial table\n"
        "\n"
        "  2,2,2 : 1/2\n"
        "\t6,0,0:  -3\n"
        "   # another remark\n";
    const CoeffTable t = parse_text(text, FamilyCase::quartic_curve);
    CHECK(t.at({2, 2, 2}) == Rational(1, 2));
    CHECK(t.at({6, 0, 0}) == Rational(-3));
    CHECK(t.at({0, 6, 0}).is_zero());  // unlisted entries default to zero
    CHECK(parse_text("", FamilyCase::quartic_curve) == CoeffTable::zero(FamilyCase::quartic_curve));
}

TEST_CASE("malformed tables report the offending line") {
    CHECK(contains(error_text("what is this\n", FamilyCase::quartic_curve),
                   "line 1: expected 'i,j,... : value'"));
    CHECK(contains(error_text("2,2 : 5\n", FamilyCase::quartic_curve),
                   "expected 3 indices, got 2"));
    CHECK(contains(error_text("1,1,1 : 5\n", FamilyCase::quartic_curve),
                   "has total degree 3, expected 6"));
    CHECK(contains(error_text("2,2,2 : 1\n2,2,2 : 2\n", FamilyCase::quartic_curve),
                   "line 2: duplicate index (2,2,2)"));
    CHECK(contains(error_text("# fine\n\n7,0,0 : 1\n", FamilyCase::quartic_curve),
                   "line 3"));
    CHECK(contains(error_text("a,0,0 : 1\n", FamilyCase::quartic_curve),
                   "bad index component 'a'"));
    CHECK(contains(error_text("-1,0,7 : 1\n", FamilyCase::quartic_curve),
                   "bad index component '-1'"));
    CHECK(contains(error_text("2,2,2 : abc\n", FamilyCase::quartic_curve),
                   "bad value 'abc'"));
    CHECK(contains(error_text("2,2,2 : 1/0\n", FamilyCase::quartic_curve),
                   "bad value '1/0'"));
    CHECK(contains(error_text("2,2,2 :\n", FamilyCase::quartic_curve),
                   "missing value after ':'"));
    CHECK(contains(error_text("2,2,0,2 : 1\n", FamilyCase::quartic_curve),
                   "expected 3 indices, got 4"));
}

TEST_CASE("file reading surfaces open failures and roundtrips") {
    CHECK_THROWS_AS(read_coeff_table_file("/nonexistent/coeffs.txt", FamilyCase::quartic_curve),
                    Error);
    const std::string path = "/tmp/hessmap_coeff_io_test.txt";
    const CoeffTable t = forward_map(CubicSurfParams{1, 2, 3, 4});
    {
        std::ofstream out(path);
        write_coeff_table(out, t);
    }
    CHECK(read_coeff_table_file(path, FamilyCase::cubic_surface) == t);
    std::remove(path.c_str());
}
