#pragma once

#include <string>

#include "qwatson/rational.hpp"

namespace qwatson {

/// Concrete evaluation point. The square roots of a and c are carried
/// directly (A = sqrt(a), C = sqrt(c)) so every radical stays rational.
struct ParamPoint {
    Rational q;
    Rational A;
    Rational C;
    int n = 0;
    int eps = 0;

    Rational a() const { return A * A; }
    Rational c() const { return C * C; }

    /// Throws ConstraintViolated unless q is not in {0, 1, -1}, A and C are
    /// nonzero, and n, eps are nonnegative.
    void validate() const;

    std::string str() const;

    friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

/// n = 2s or n = 2s + 1.
struct ParityCase {
    int s = 0;
    bool odd = false;

    static ParityCase of(int n) { return {n / 2, n % 2 != 0}; }
    int n() const { return 2 * s + (odd ? 1 : 0); }
};

}  // namespace qwatson
