#include "qwatson/series.hpp"

#include "qwatson/errors.hpp"

namespace qwatson {

Rational phi_eval(const SeriesSpec& spec, const Rational& q) {
    if (q == 0 || q == 1 || q == -1) throw ConstraintViolated("phi_eval needs q outside {0, 1, -1}");
    Rational term(1);
    Rational sum(1);
    Rational qk(1);  // q^k
    bool truncated = false;
    for (int k = 0; k < spec.bound; ++k) {
        // Every (b;q)_{k+1} up to the bound must be nonzero, truncated or not:
        // a vanishing numerator facing a vanishing denominator is 0/0.
        Rational den = 1 - qk * q;
        for (const auto& b : spec.denom) {
            Rational factor = 1 - b * qk;
            if (factor == 0) throw DegenerateDenominator(to_string(b), k + 1);
            den *= factor;
        }
        if (!truncated) {
            Rational num(1);
            for (const auto& a : spec.numer) num *= 1 - a * qk;
            if (num == 0) {
                truncated = true;
            } else {
                term *= spec.argument * num / den;
                sum += term;
            }
        }
        qk *= q;
    }
    return sum;
}

std::optional<int> terminating_bound(const std::vector<Rational>& numer, const Rational& q, int max_probe) {
    if (q == 0) return std::nullopt;
    const Rational inv = 1 / q;
    Rational power(1);  // q^{-n}
    for (int n = 0; n <= max_probe; ++n) {
        for (const auto& a : numer) {
            if (a == power) return n;
        }
        power *= inv;
    }
    return std::nullopt;
}

Rational weighted_sum(const TermGenerator& gen, const ParamPoint& point, int lo, int hi) {
    Rational sum(0);
    for (int i = lo; i <= hi; ++i) sum += gen(point, i);
    return sum;
}

}  // namespace qwatson
