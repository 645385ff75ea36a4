#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qwatson/param_point.hpp"
#include "qwatson/rational.hpp"

namespace qwatson {

/// A terminating basic hypergeometric series with parameters already
/// evaluated. The summation runs over k = 0..bound inclusive; the (q;q)_k
/// factor is implicit and joins the denominator.
struct SeriesSpec {
    std::vector<Rational> numer;
    std::vector<Rational> denom;
    Rational argument;
    int bound = 0;
};

/// Sums the series by the term ratio
///   t_{k+1} = t_k * z * prod(1 - a_i q^k) / ((1 - q^{k+1}) prod(1 - b_j q^k)).
/// Once a numerator factor vanishes the remaining terms are zero, but the
/// denominators are still checked up to the bound: any (b;q)_k = 0 with
/// k <= bound throws DegenerateDenominator.
Rational phi_eval(const SeriesSpec& spec, const Rational& q);

/// Smallest n <= max_probe such that some parameter equals q^{-n}.
std::optional<int> terminating_bound(const std::vector<Rational>& numer, const Rational& q, int max_probe);

/// Summand rule for finite sums whose terms are not hypergeometric in shape.
using TermGenerator = std::function<Rational(const ParamPoint&, int)>;

/// Exact sum of gen(point, i) for i in [lo, hi]; 0 for an empty range.
Rational weighted_sum(const TermGenerator& gen, const ParamPoint& point, int lo, int hi);

}  // namespace qwatson
