#include "qwatson/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

namespace qwatson {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr int kDrawAttempts = 10000;

class PointDrawer {
public:
    PointDrawer(const SampleConfig& config, std::uint64_t stream)
        : rng_(splitmix64(config.seed ^ splitmix64(stream))), height_(config.height) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational nonzero() {
        Rational r(uniform(1, height_), uniform(1, height_));
        r.canonicalize();
        return uniform(0, 1) == 0 ? r : Rational(-r);
    }

    // Nonzero and not +-1. Used for q, and for A and C, where +-1 puts
    // a = 1 or c = 1 on a pole of the Andrews-type lower parameters.
    Rational base() {
        for (int attempt = 0; attempt < kDrawAttempts; ++attempt) {
            Rational r = nonzero();
            if (r != 1 && r != -1) return r;
        }
        throw UnsatisfiableConstraints("could not draw a value outside {0, 1, -1}");
    }

private:
    std::mt19937_64 rng_;
    int height_;
};

const std::vector<BoundarySlot>& boundary_slots() {
    static const std::vector<BoundarySlot> slots{BoundarySlot::SmallestN, BoundarySlot::NOne,
                                                 BoundarySlot::EpsZero, BoundarySlot::EpsEqualsN};
    return slots;
}

std::size_t catalog_position(std::string_view id) {
    const auto& cases = catalog();
    for (std::size_t i = 0; i < cases.size(); ++i) {
        if (cases[i].id == id) return i;
    }
    throw UnknownIdentity(std::string(id));
}

std::uint64_t stream_base(std::size_t position) { return static_cast<std::uint64_t>(position + 1) << 32; }

CheckResult check_with(const Evaluator& lhs, const Evaluator& rhs, const ParamPoint& point) {
    CheckResult result;
    result.point = point;
    try {
        result.lhs = lhs(point);
        result.rhs = rhs(point);
    } catch (const DegenerateDenominator& e) {
        result.outcome = Outcome::Degenerate;
        result.detail = e.what();
        result.lhs.reset();
        result.rhs.reset();
        return result;
    } catch (const DivisionByZero& e) {
        result.outcome = Outcome::Degenerate;
        result.detail = e.what();
        result.lhs.reset();
        result.rhs.reset();
        return result;
    }
    result.outcome = *result.lhs == *result.rhs ? Outcome::Pass : Outcome::Fail;
    return result;
}

// Draws points for `id` until one is non-degenerate under `check`.
template <typename Check>
CheckResult next_informative(const std::string& id, const SampleConfig& config, const Constraints& constraints,
                             std::uint64_t& stream, BoundarySlot slot, int& degeneracies, Check&& check) {
    ParamPoint last;
    for (int attempt = 0; attempt <= config.max_resamples; ++attempt) {
        last = sample_point(config, stream++, constraints, slot);
        CheckResult r = check(last);
        if (r.outcome != Outcome::Degenerate) return r;
        ++degeneracies;
    }
    throw ResampleBudgetExhausted(id, last);
}

IdentityReport run_identity(const SampleConfig& config, const IdentityCase& ic) {
    const auto start = std::chrono::steady_clock::now();
    IdentityReport report;
    report.id = ic.id;
    report.paper_ref = ic.paper_ref;
    std::uint64_t stream = stream_base(catalog_position(ic.id));
    const auto& slots = boundary_slots();
    for (int t = 0; t < config.trials; ++t) {
        const BoundarySlot slot = static_cast<std::size_t>(t) < slots.size() ? slots[t] : BoundarySlot::None;
        CheckResult r = next_informative(ic.id, config, ic.constraints, stream, slot, report.degeneracies,
                                         [&](const ParamPoint& p) { return check_with(ic.lhs, ic.rhs, p); });
        ++report.trials;
        if (r.outcome == Outcome::Pass) {
            ++report.passes;
        } else {
            report.failures.push_back({r.point, *r.lhs, *r.rhs});
        }
    }
    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace

ParamPoint sample_point(const SampleConfig& config, std::uint64_t stream_index, const Constraints& constraints,
                        BoundarySlot slot) {
    if (config.height < 2) {
        throw UnsatisfiableConstraints("rational height " + std::to_string(config.height) +
                                       " only yields q in {-1, 1}");
    }
    if (config.n_max < 0 || config.eps_max < 0) throw UnsatisfiableConstraints("n-max and eps-max must be >= 0");
    int n_lo = constraints.n_min;
    const int n_hi = config.n_max;
    if (constraints.eps_fixed && constraints.eps_le_n) n_lo = std::max(n_lo, *constraints.eps_fixed);
    if (n_lo > n_hi) {
        throw UnsatisfiableConstraints("constraints need n >= " + std::to_string(n_lo) + " but n-max is " +
                                       std::to_string(n_hi));
    }

    PointDrawer draw(config, stream_index);
    ParamPoint p;
    if (constraints.square_q) {
        const Rational root = draw.base();
        p.q = root * root;
    } else {
        p.q = draw.base();
    }
    p.A = draw.base();
    p.C = draw.base();
    p.n = draw.uniform(n_lo, n_hi);

    const bool free_eps = constraints.uses_eps && !constraints.eps_fixed;
    const int fixed = constraints.eps_fixed.value_or(0);
    switch (slot) {
        case BoundarySlot::SmallestN:
            p.n = n_lo;
            break;
        case BoundarySlot::NOne:
            p.n = std::clamp(1, n_lo, n_hi);
            break;
        case BoundarySlot::EpsZero:
        case BoundarySlot::None:
            break;
        case BoundarySlot::EpsEqualsN:
            if (free_eps && n_lo <= std::min(n_hi, config.eps_max)) {
                p.n = draw.uniform(n_lo, std::min(n_hi, config.eps_max));
            }
            break;
    }

    if (!constraints.uses_eps) {
        p.eps = 0;
    } else if (constraints.eps_fixed) {
        p.eps = fixed;
    } else if (slot == BoundarySlot::SmallestN || slot == BoundarySlot::NOne || slot == BoundarySlot::EpsZero) {
        p.eps = 0;
    } else {
        const int eps_hi = constraints.eps_le_n ? std::min(config.eps_max, p.n) : config.eps_max;
        p.eps = (slot == BoundarySlot::EpsEqualsN && p.n <= eps_hi) ? p.n : draw.uniform(0, eps_hi);
    }
    return p;
}

std::string_view to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::Pass:
            return "pass";
        case Outcome::Fail:
            return "FAIL";
        case Outcome::Degenerate:
            return "degenerate";
    }
    return "?";
}

CheckResult check_identity(std::string_view id, const ParamPoint& point) {
    const IdentityCase& ic = find_identity(id);
    return check_with(ic.lhs, ic.rhs, point);
}

CheckResult check_mutant(std::string_view id, const ParamPoint& point) {
    const IdentityCase& ic = find_identity(id);
    return check_with(ic.lhs, ic.mutant_rhs, point);
}

int VerificationReport::total_failures() const {
    int total = 0;
    for (const auto& r : results) total += static_cast<int>(r.failures.size());
    return total;
}

VerificationReport run_suite(const SampleConfig& config, const std::vector<std::string>& ids) {
    if (ids.empty()) throw ConstraintViolated("no identities requested");
    std::vector<const IdentityCase*> cases;
    for (const auto& id : ids) cases.push_back(&find_identity(id));

    VerificationReport report;
    report.config = config;
    report.results.resize(cases.size());

    unsigned workers = config.threads > 0 ? static_cast<unsigned>(config.threads) : std::thread::hardware_concurrency();
    workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(cases.size()));

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            try {
                report.results[i] = run_identity(config, *cases[i]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);

    if (std::find(ids.begin(), ids.end(), "cor-d2") != ids.end()) report.probes.push_back(probe_cor_d2(config));
    return report;
}

VariantProbe probe_cor_d2(const SampleConfig& config) {
    const IdentityCase& ic = find_identity("cor-d2");
    VariantProbe probe;
    probe.id = ic.id;
    const std::vector<CorD2Upper> readings{CorD2Upper::PrintedMinusN, CorD2Upper::TheoremTwoMinusN};
    for (auto v : readings) probe.variants.push_back({std::string(to_string(v)), 0, 0});

    // Separate streams from the main cor-d2 trials.
    std::uint64_t stream = stream_base(catalog().size() + catalog_position(ic.id));
    int degeneracies = 0;
    for (int t = 0; t < config.trials; ++t) {
        std::vector<Rational> lhs;
        auto evaluate = [&](const ParamPoint& p) {
            CheckResult r;
            r.point = p;
            try {
                r.rhs = ic.rhs(p);
                lhs.clear();
                for (auto v : readings) lhs.push_back(cor_d2_lhs_variant(v, p));
            } catch (const DegenerateDenominator& e) {
                r.outcome = Outcome::Degenerate;
                r.detail = e.what();
            }
            return r;
        };
        CheckResult r = next_informative(ic.id, config, ic.constraints, stream, BoundarySlot::None, degeneracies,
                                         evaluate);
        for (std::size_t v = 0; v < readings.size(); ++v) {
            ++probe.variants[v].trials;
            if (lhs[v] == *r.rhs) ++probe.variants[v].matches;
        }
    }
    int full = 0;
    for (const auto& v : probe.variants) {
        if (v.trials > 0 && v.matches == v.trials) {
            ++full;
            probe.matching = v.upper;
        }
    }
    if (full != 1) probe.matching.clear();
    return probe;
}

int count_mutant_failures(std::string_view id, const SampleConfig& config) {
    const IdentityCase& ic = find_identity(id);
    std::uint64_t stream = stream_base(catalog_position(ic.id));
    int degeneracies = 0;
    int failures = 0;
    for (int t = 0; t < config.trials; ++t) {
        CheckResult r = next_informative(ic.id, config, ic.constraints, stream, BoundarySlot::None, degeneracies,
                                         [&](const ParamPoint& p) { return check_with(ic.lhs, ic.mutant_rhs, p); });
        if (r.outcome == Outcome::Fail) ++failures;
    }
    return failures;
}

}  // namespace qwatson
