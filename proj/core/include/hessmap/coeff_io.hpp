#pragma once

#include <iosfwd>
#include <string>

#include "hessmap/families.hpp"

namespace hessmap {

// Coefficient-table text format, one record per line:
//
//     i,j,k : value         (quartic-curve: 3 indices summing to 6)
//     i,j,k,l : value       (cubic-surface: 4 indices summing to 4)
//
// where value is an integer or numerator/denominator fraction. Blank lines
// and lines starting with '#' are ignored. Indices not listed default to 0;
// an index outside the table (wrong arity or wrong total degree) or listed
// twice is an Error carrying the line number.
CoeffTable read_coeff_table(std::istream& in, FamilyCase c);
CoeffTable read_coeff_table_file(const std::string& path, FamilyCase c);

// Writes nonzero entries in descending graded-lex order, in the same format.
void write_coeff_table(std::ostream& out, const CoeffTable& table);
std::string coeff_table_text(const CoeffTable& table);

} // namespace hessmap
