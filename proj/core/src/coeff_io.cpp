#include "hessmap/coeff_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hessmap/errors.hpp"

namespace hessmap {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
    throw Error("coefficient table, line " + std::to_string(line_no) + ": " + msg);
}

} // namespace

CoeffTable read_coeff_table(std::istream& in, FamilyCase c) {
    CoeffTable table = CoeffTable::zero(c);
    const std::size_t arity = form_ring(c).size();
    std::set<ExponentVector, GrlexLess> seen;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;

        const auto colon = body.find(':');
        if (colon == std::string::npos) fail(line_no, "expected 'i,j,... : value'");

        // indices
        std::vector<unsigned> exps;
        std::stringstream idx_part(body.substr(0, colon));
        std::string piece;
        while (std::getline(idx_part, piece, ',')) {
            const std::string p = trim(piece);
            if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos)
                fail(line_no, "bad index component '" + p + "'");
            try {
                exps.push_back(static_cast<unsigned>(std::stoul(p)));
            } catch (const std::exception&) {
                fail(line_no, "bad index component '" + p + "'");
            }
        }
        if (exps.size() != arity)
            fail(line_no, "expected " + std::to_string(arity) + " indices, got " +
                              std::to_string(exps.size()));

        ExponentVector alpha(std::move(exps));
        if (alpha.total_degree() != table.degree())
            fail(line_no, "index " + alpha.str() + " has total degree " +
                              std::to_string(alpha.total_degree()) + ", expected " +
                              std::to_string(table.degree()));
        if (!seen.insert(alpha).second)
            fail(line_no, "duplicate index " + alpha.str());

        // value
        const std::string value_text = trim(body.substr(colon + 1));
        if (value_text.empty()) fail(line_no, "missing value after ':'");
        try {
            table.set(alpha, Rational::from_string(value_text));
        } catch (const Error& e) {
            fail(line_no, std::string("bad value '") + value_text + "': " + e.what());
        }
    }
    return table;
}

CoeffTable read_coeff_table_file(const std::string& path, FamilyCase c) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open coefficient table file '" + path + "'");
    return read_coeff_table(in, c);
}

void write_coeff_table(std::ostream& out, const CoeffTable& table) {
    const auto& entries = table.entries();
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        if (it->second.is_zero()) continue;
        const auto& exps = it->first.exponents();
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (i) out << ',';
            out << exps[i];
        }
        out << " : " << it->second.str() << '\n';
    }
}

std::string coeff_table_text(const CoeffTable& table) {
    std::ostringstream out;
    write_coeff_table(out, table);
    return out.str();
}

} // namespace hessmap
