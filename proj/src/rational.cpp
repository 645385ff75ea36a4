#include "qwatson/rational.hpp"

#include <cctype>

#include "qwatson/errors.hpp"

namespace qwatson {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("malformed rational literal '" + std::string(text) +
                         "' (expected p/r or an integer)");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(negative ? mpz_class(-n) : n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    return value.get_str(10);
}

Rational qpow(const Rational& base, long exponent) {
    if (exponent == 0) return Rational(1);
    if (base == 0) {
        if (exponent < 0) throw DivisionByZero("zero raised to negative power " + std::to_string(exponent));
        return Rational(0);
    }
    const unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    Rational r = exponent < 0 ? Rational(den, num) : Rational(num, den);
    r.canonicalize();
    return r;
}

std::optional<Rational> exact_sqrt(const Rational& value) {
    if (value < 0) return std::nullopt;
    if (mpz_perfect_square_p(value.get_num_mpz_t()) == 0 || mpz_perfect_square_p(value.get_den_mpz_t()) == 0) {
        return std::nullopt;
    }
    mpz_class num;
    mpz_class den;
    mpz_sqrt(num.get_mpz_t(), value.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), value.get_den_mpz_t());
    return Rational(num, den);
}

bool is_canonical(const Rational& value) {
    if (value.get_den() <= 0) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return g == 1;
}

}  // namespace qwatson
