#pragma once

#include <stdexcept>
#include <string>

namespace qwatson {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Zero raised to a negative power, or an explicit division by zero.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// A denominator factor vanished at the evaluation point.
///
/// `base` is the Pochhammer base whose product hit zero and `index` the
/// length of the product that vanishes, i.e. (base;q)_index = 0. Scalar
/// factors (1 - x) are reported as base x, index 1.
class DegenerateDenominator : public Error {
public:
    DegenerateDenominator(std::string base, int index, std::string factor = {})
        : Error("degenerate denominator: " +
                (factor.empty() ? "(" + base + ";q)_" + std::to_string(index) : factor) +
                " vanishes"),
          base_(std::move(base)),
          index_(index),
          factor_(std::move(factor)) {}

    const std::string& base() const noexcept { return base_; }
    int index() const noexcept { return index_; }
    const std::string& factor() const noexcept { return factor_; }

private:
    std::string base_;
    int index_;
    std::string factor_;
};

/// The evaluation point violates an identity's hypotheses (e.g. eps > n).
class ConstraintViolated : public Error {
public:
    using Error::Error;
};

/// No point satisfying the constraints can be drawn from the sample space.
class UnsatisfiableConstraints : public Error {
public:
    using Error::Error;
};

class UnknownIdentity : public Error {
public:
    explicit UnknownIdentity(const std::string& key)
        : Error("unknown identity id '" + key + "'"), key_(key) {}
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace qwatson
