#include "qwatson/qfactorial.hpp"

#include <string>

#include "qwatson/errors.hpp"

namespace qwatson {

Rational qpoch(const Rational& x, const Rational& q, int n) {
    Rational result(1);
    Rational step = x;
    for (int i = 0; i < n; ++i) {
        result *= 1 - step;
        step *= q;
    }
    return result;
}

Rational qpoch_desc(const Rational& x, const Rational& q, int n) {
    if (q == 0) throw DivisionByZero("descending q-factorial with q = 0");
    if (n == 0) return Rational(1);
    const Rational inv = 1 / q;
    Rational result(1);
    Rational step = x;
    for (int i = 0; i < n; ++i) {
        result *= 1 - step;
        step *= inv;
    }
    return result;
}

Rational poch_fraction(std::span<const Rational> nums, std::span<const Rational> dens,
                       const Rational& q, int n) {
    Rational denominator(1);
    for (const auto& d : dens) {
        Rational value = qpoch(d, q, n);
        if (value == 0) throw DegenerateDenominator(to_string(d), n);
        denominator *= value;
    }
    Rational numerator(1);
    for (const auto& a : nums) numerator *= qpoch(a, q, n);
    return numerator / denominator;
}

Rational qbinom(int n, int k, const Rational& q) {
    if (k < 0 || k > n) return Rational(0);
    // prod_{j=1..k} (1 - q^{n-k+j}) / (1 - q^j)
    Rational result(1);
    for (int j = 1; j <= k; ++j) {
        result *= (1 - qpow(q, n - k + j)) / (1 - qpow(q, j));
    }
    return result;
}

}  // namespace qwatson
