#include "hessmap/formio.hpp"

#include <cctype>

#include <gmpxx.h>

#include "hessmap/errors.hpp"

namespace hessmap {

namespace {

constexpr unsigned kMaxExponent = 1u << 20;

class Parser {
public:
    Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

    MultiPoly run() {
        skip_ws();
        if (at_end()) throw SyntaxError("empty input", pos());

        MultiPoly acc = MultiPoly::zero(ring_);
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = (take() == '-');
            skip_ws();
        }
        acc += parse_term(negative);
        skip_ws();
        while (!at_end()) {
            const char op = peek();
            if (op != '+' && op != '-')
                throw SyntaxError(std::string("expected '+' or '-', found '") + op + "'", pos());
            take();
            skip_ws();
            acc += parse_term(op == '-');
            skip_ws();
        }
        return acc;
    }

private:
    bool at_end() const { return i_ >= text_.size(); }
    char peek() const { return text_[i_]; }
    char take() { return text_[i_++]; }
    std::size_t pos() const { return i_ + 1; } // 1-based

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
    }

    MultiPoly parse_term(bool negative) {
        if (at_end()) throw SyntaxError("expected a term", pos());

        Rational coeff(1);
        std::vector<unsigned> exps(ring_.size(), 0);

        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_coefficient();
        } else {
            parse_factor(exps);
        }

        skip_ws();
        while (!at_end() && peek() == '*') {
            take();
            skip_ws();
            parse_factor(exps);
            skip_ws();
        }

        // reject juxtaposition like "2x" or "x y" up front with a clear message
        if (!at_end() && (std::isalpha(static_cast<unsigned char>(peek())) ||
                          std::isdigit(static_cast<unsigned char>(peek()))))
            throw SyntaxError("adjacent factors need an explicit '*'", pos());

        if (negative) coeff = -coeff;
        return MultiPoly::monomial(ring_, ExponentVector(std::move(exps)), coeff);
    }

    Rational parse_coefficient() {
        const std::size_t num_pos = pos();
        mpz_class num(read_digits(), 10);
        skip_ws();
        if (!at_end() && peek() == '/') {
            take();
            skip_ws();
            const std::size_t den_pos = pos();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw SyntaxError("expected digits after '/'", den_pos);
            mpz_class den(read_digits(), 10);
            if (den == 0) throw SyntaxError("zero denominator in coefficient", den_pos);
            return Rational(num, den);
        }
        (void)num_pos;
        return Rational(num, mpz_class(1));
    }

    std::string read_digits() {
        std::string s;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += take();
        return s;
    }

    void parse_factor(std::vector<unsigned>& exps) {
        const std::size_t name_pos = pos();
        if (at_end() || !std::isalpha(static_cast<unsigned char>(peek())))
            throw SyntaxError("expected a variable", pos());
        std::string name;
        name += take();
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            name += take();
        const auto idx = ring_.index_of(name);
        if (!idx)
            throw UnknownVariable("unknown variable '" + name + "'", name, name_pos);

        unsigned exponent = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            take();
            skip_ws();
            const std::size_t exp_pos = pos();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw SyntaxError("expected digits after '^'", exp_pos);
            unsigned long v = 0;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                v = v * 10 + static_cast<unsigned long>(take() - '0');
                if (v > kMaxExponent) throw SyntaxError("exponent too large", exp_pos);
            }
            if (v == 0) throw SyntaxError("exponent must be at least 1", exp_pos);
            exponent = static_cast<unsigned>(v);
        }
        if (exps[*idx] > kMaxExponent - exponent)
            throw SyntaxError("exponent too large", name_pos);
        exps[*idx] += exponent;
    }

    std::string_view text_;
    const Ring& ring_;
    std::size_t i_ = 0;
};

} // namespace

MultiPoly parse_polynomial(std::string_view text, const Ring& ring) {
    return Parser(text, ring).run();
}

Form parse_form(std::string_view text, const Ring& ring) {
    return Form::make(parse_polynomial(text, ring));
}

std::string print_polynomial(const MultiPoly& p) { return p.str(); }

std::string print_form(const Form& f) { return f.poly().str(); }

} // namespace hessmap
