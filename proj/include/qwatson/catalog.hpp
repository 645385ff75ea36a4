#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwatson/param_point.hpp"
#include "qwatson/rational.hpp"
#include "qwatson/series.hpp"

namespace qwatson {

/// Hypotheses an evaluation point must satisfy for an identity.
struct Constraints {
    int n_min = 0;
    /// The identity has no eps parameter; samplers set eps = 0.
    bool uses_eps = true;
    /// Corollaries pin eps to a single value.
    std::optional<int> eps_fixed;
    bool eps_le_n = false;
    /// Left side needs sqrt(qac): samplers draw q as a rational square.
    /// Not part of check(); sqrt_q() raises ConstraintViolated when needed.
    bool square_q = false;

    bool admits(const ParamPoint& p) const;
    /// Throws ConstraintViolated naming the first failed hypothesis.
    void check(const ParamPoint& p) const;
    std::string describe() const;
};

using Evaluator = std::function<Rational(const ParamPoint&)>;

struct IdentityCase {
    std::string id;
    std::string paper_ref;
    /// One-line summary of the two sides.
    std::string shape;
    Constraints constraints;
    Evaluator lhs;
    Evaluator rhs;
    /// The closed form with exactly one token altered; see `mutation`.
    Evaluator mutant_rhs;
    std::string mutation;
};

/// All 21 identities in a fixed order.
const std::vector<IdentityCase>& catalog();
/// Throws UnknownIdentity.
const IdentityCase& find_identity(std::string_view id);
bool is_known_identity(std::string_view id);
inline constexpr int kCatalogVersion = 1;

// Closed forms of the base formulas.
Rational andrews_rhs(const ParamPoint& p);
Rational jain_rhs(const ParamPoint& p);
Rational phi65_rhs(const Rational& a, const Rational& b, const Rational& c, const Rational& q, int eps);
Rational phi65_lhs(const Rational& a, const Rational& b, const Rational& c, const Rational& q, int eps);

enum class UnityVariant { A, B };
/// Full i-sum of the partition-of-unity identity with cutoff k; equals 1.
Rational unity_lhs(UnityVariant which, const ParamPoint& p, int k);

/// Theorem closed forms; id in {thm-a, thm-b, thm-c, thm-d}.
Rational thm_rhs(std::string_view id, const ParamPoint& p);
/// Corollary closed forms; id in {cor-a1, ..., cor-d2}.
Rational cor_rhs(std::string_view id, const ParamPoint& p);
/// Right side of the rearrangement relations: an i-sum of inner 4phi3
/// series, each summed term by term. id in {rel-a, rel-b, rel-c, rel-d}.
Rational rel_rhs(std::string_view id, const ParamPoint& p);

/// The defining series of an identity's left side at p. Not available for
/// the unity identities, whose left side is a weighted sum.
SeriesSpec lhs_series(std::string_view id, const ParamPoint& p);

Rational lhs_eval(std::string_view id, const ParamPoint& p);
Rational rhs_eval(std::string_view id, const ParamPoint& p);

/// sqrt(q) for points of Jain-type identities; ConstraintViolated otherwise.
Rational sqrt_q(const ParamPoint& p);

/// The two readings of the left side of cor-d2: the upper parameter
/// printed as q^{-n}, or q^{2-n} as obtained from thm-d at eps = 2.
enum class CorD2Upper { PrintedMinusN, TheoremTwoMinusN };
Rational cor_d2_lhs_variant(CorD2Upper variant, const ParamPoint& p);
std::string_view to_string(CorD2Upper variant);

}  // namespace qwatson
