#include "qwatson/param_point.hpp"

#include "qwatson/errors.hpp"

namespace qwatson {

void ParamPoint::validate() const {
    if (q == 0 || q == 1 || q == -1) throw ConstraintViolated("q must not be 0, 1 or -1 (got " + to_string(q) + ")");
    if (A == 0) throw ConstraintViolated("A must be nonzero");
    if (C == 0) throw ConstraintViolated("C must be nonzero");
    if (n < 0) throw ConstraintViolated("n must be nonnegative");
    if (eps < 0) throw ConstraintViolated("eps must be nonnegative");
}

std::string ParamPoint::str() const {
    return "q=" + to_string(q) + " A=" + to_string(A) + " C=" + to_string(C) + " n=" + std::to_string(n) +
           " eps=" + std::to_string(eps);
}

}  // namespace qwatson
