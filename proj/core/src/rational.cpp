#include "hessmap/rational.hpp"

#include <cctype>

namespace hessmap {

Rational::Rational(long num, long den) {
    if (den == 0) throw ZeroDivision("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ZeroDivision("rational with zero denominator");
    q_ = mpq_class(num) / mpq_class(den);
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroDivision("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(unsigned long e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), e);
    return Rational(std::move(r));  // already canonical: powers of coprime stay coprime
}

Rational Rational::from_string(std::string_view text) {
    const auto malformed = [&] {
        return Error("malformed rational '" + std::string(text) + "'");
    };
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = (text[i++] == '-');
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) throw malformed();
    mpz_class num(std::string(text.substr(num_begin, i - num_begin)), 10);
    if (negative) num = -num;
    if (i == text.size()) return Rational(mpq_class(num));
    if (text[i] != '/') throw malformed();
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) throw malformed();
    mpz_class den(std::string(text.substr(den_begin)), 10);
    return Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

} // namespace hessmap
