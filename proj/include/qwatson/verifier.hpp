#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwatson/catalog.hpp"
#include "qwatson/errors.hpp"
#include "qwatson/param_point.hpp"

namespace qwatson {

struct SampleConfig {
    std::uint64_t seed = 42;
    int trials = 100;
    int n_max = 8;
    int eps_max = 4;
    /// Numerators and denominators of q, A, C are drawn from [1, height].
    int height = 10;
    /// Degenerate draws allowed per trial before giving up.
    int max_resamples = 1000;
    /// Worker threads for run_suite; 0 picks hardware concurrency. Does not
    /// affect the report.
    int threads = 0;
};

/// Forced boundary choices used for the first trials of every identity.
enum class BoundarySlot { None, SmallestN, NOne, EpsZero, EpsEqualsN };

/// Deterministic in (config, stream_index, constraints, slot). Throws
/// UnsatisfiableConstraints when the sample space cannot meet the constraints.
ParamPoint sample_point(const SampleConfig& config, std::uint64_t stream_index, const Constraints& constraints,
                        BoundarySlot slot = BoundarySlot::None);

enum class Outcome { Pass, Fail, Degenerate };
std::string_view to_string(Outcome outcome);

struct CheckResult {
    Outcome outcome = Outcome::Pass;
    ParamPoint point;
    std::optional<Rational> lhs;
    std::optional<Rational> rhs;
    /// Diagnostic for Degenerate outcomes.
    std::string detail;
};

/// Evaluates both sides at `point`. Degeneracy is an outcome, not an error;
/// a constraint violation still throws.
CheckResult check_identity(std::string_view id, const ParamPoint& point);
/// Same, against the identity's documented single-token RHS mutation.
CheckResult check_mutant(std::string_view id, const ParamPoint& point);

class ResampleBudgetExhausted : public Error {
public:
    ResampleBudgetExhausted(std::string id, ParamPoint last)
        : Error("resample budget exhausted for '" + id + "' (last degenerate point " + last.str() + ")"),
          id_(std::move(id)),
          last_(std::move(last)) {}
    const std::string& id() const noexcept { return id_; }
    const ParamPoint& last_point() const noexcept { return last_; }

private:
    std::string id_;
    ParamPoint last_;
};

struct FailureRecord {
    ParamPoint point;
    Rational lhs;
    Rational rhs;
};

struct IdentityReport {
    std::string id;
    std::string paper_ref;
    int trials = 0;
    int passes = 0;
    std::vector<FailureRecord> failures;
    int degeneracies = 0;
    double wall_ms = 0.0;
};

struct VariantTally {
    std::string upper;
    int matches = 0;
    int trials = 0;
};

/// Brute-force comparison of alternative readings of one identity's LHS
/// against its printed closed form.
struct VariantProbe {
    std::string id;
    std::vector<VariantTally> variants;
    /// The single variant matching at every sampled point; empty if none or several.
    std::string matching;
};

struct VerificationReport {
    SampleConfig config;
    int catalog_version = kCatalogVersion;
    std::vector<IdentityReport> results;
    std::vector<VariantProbe> probes;

    int total_failures() const;
    bool all_passed() const { return total_failures() == 0; }
};

/// Runs `trials` non-degenerate checks per id. Throws UnknownIdentity before
/// any evaluation if an id is not in the catalog, and
/// ResampleBudgetExhausted if degeneracies exceed the budget.
VerificationReport run_suite(const SampleConfig& config, const std::vector<std::string>& ids);

/// Samples `config.trials` cor-d2 points and counts which LHS reading
/// equals the printed RHS.
VariantProbe probe_cor_d2(const SampleConfig& config);

/// Number of Fail outcomes of the mutated RHS over `config.trials`
/// non-degenerate points.
int count_mutant_failures(std::string_view id, const SampleConfig& config);

}  // namespace qwatson
