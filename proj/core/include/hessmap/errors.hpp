#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hessmap {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arithmetic on two polynomials whose variable lists differ.
class RingMismatch : public Error {
public:
    using Error::Error;
};

// A matrix whose dimension does not fit the ring it acts on.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ZeroDivision : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

// Form-text parse failure. `position` is a 1-based character offset.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what), position(position) {}
    std::size_t position;
};

class UnknownVariable : public Error {
public:
    UnknownVariable(const std::string& what, std::string name, std::size_t position)
        : Error(what), name(std::move(name)), position(position) {}
    std::string name;
    std::size_t position;
};

// Input polynomial mixes total degrees; carries two offending monomials.
class NotHomogeneous : public Error {
public:
    NotHomogeneous(const std::string& what, std::string term_a, std::string term_b)
        : Error(what), term_a(std::move(term_a)), term_b(std::move(term_b)) {}
    std::string term_a;
    std::string term_b;
};

// The inversion formulas are undefined at this table (a denominator or the
// system determinant vanishes). Diagnostics carry the offending quantities.
class GenericityFailure : public Error {
public:
    GenericityFailure(const std::string& what,
                      std::vector<std::pair<std::string, std::string>> diagnostics = {})
        : Error(what), diagnostics(std::move(diagnostics)) {}
    std::vector<std::pair<std::string, std::string>> diagnostics;
};

// The table is not the coefficient table of any family member: the recovered
// parameters exist but fail the forward-map recheck.
class NotInImage : public Error {
public:
    using Error::Error;
};

} // namespace hessmap
