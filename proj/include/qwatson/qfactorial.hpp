#pragma once

#include <span>

#include "qwatson/rational.hpp"

namespace qwatson {

/// (x;q)_n = prod_{i<n} (1 - x q^i); 1 for n = 0.
Rational qpoch(const Rational& x, const Rational& q, int n);

/// <x;q>_n = prod_{i<n} (1 - x q^{-i}); 1 for n = 0. Requires q != 0.
Rational qpoch_desc(const Rational& x, const Rational& q, int n);

/// prod (a;q)_n over `nums` divided by prod (d;q)_n over `dens`.
/// Throws DegenerateDenominator naming the first vanishing (d;q)_n.
Rational poch_fraction(std::span<const Rational> nums, std::span<const Rational> dens,
                       const Rational& q, int n);

/// Gaussian binomial (q;q)_n / ((q;q)_k (q;q)_{n-k}); zero when k is
/// outside [0, n]. Requires q not in {0, 1, -1}.
Rational qbinom(int n, int k, const Rational& q);

}  // namespace qwatson
