#include <doctest.h>

#include "qwatson/catalog.hpp"
#include "qwatson/verifier.hpp"

using namespace qwatson;

namespace {
Rational r(const char* s) { return parse_rational(s); }
}  // namespace

TEST_CASE("sample_point honours constraints") {
    SampleConfig cfg;
    cfg.n_max = 4;
    cfg.eps_max = 6;
    const Constraints& jain_type = find_identity("thm-c").constraints;
    for (std::uint64_t s = 0; s < 300; ++s) {
        const ParamPoint p = sample_point(cfg, s, jain_type);
        CHECK(p.eps <= p.n);
        CHECK(p.n <= 4);
        CHECK(p.q != 0);
        CHECK(p.q != 1);
        CHECK(p.q != -1);
        CHECK(p.A != 0);
        CHECK(p.C != 0);
        CHECK(p.A * p.A != 1);
        CHECK(p.C * p.C != 1);
        CHECK(exact_sqrt(p.q).has_value());
    }
    const Constraints& cor = find_identity("cor-c2").constraints;
    for (std::uint64_t s = 0; s < 100; ++s) {
        const ParamPoint p = sample_point(cfg, s, cor);
        CHECK(p.eps == 2);
        CHECK(p.n >= 2);
    }
    const Constraints& plain = find_identity("andrews").constraints;
    for (std::uint64_t s = 0; s < 100; ++s) CHECK(sample_point(cfg, s, plain).eps == 0);
}

TEST_CASE("sample_point is deterministic") {
    SampleConfig cfg;
    const Constraints& c = find_identity("thm-a").constraints;
    CHECK(sample_point(cfg, 17, c) == sample_point(cfg, 17, c));
    CHECK_FALSE(sample_point(cfg, 17, c) == sample_point(cfg, 18, c));
    SampleConfig other = cfg;
    other.seed = 43;
    CHECK_FALSE(sample_point(cfg, 17, c) == sample_point(other, 17, c));
}

TEST_CASE("boundary slots") {
    SampleConfig cfg;
    const Constraints& c = find_identity("thm-c").constraints;
    CHECK(sample_point(cfg, 1, c, BoundarySlot::SmallestN).n == 0);
    CHECK(sample_point(cfg, 1, c, BoundarySlot::NOne).n == 1);
    CHECK(sample_point(cfg, 1, c, BoundarySlot::EpsZero).eps == 0);
    const ParamPoint diag = sample_point(cfg, 1, c, BoundarySlot::EpsEqualsN);
    CHECK(diag.eps == diag.n);
    CHECK(sample_point(cfg, 1, find_identity("cor-d2").constraints, BoundarySlot::SmallestN).n == 2);
}

TEST_CASE("unsatisfiable configurations") {
    SampleConfig cfg;
    cfg.height = 1;
    CHECK_THROWS_AS(sample_point(cfg, 0, find_identity("andrews").constraints), UnsatisfiableConstraints);
    SampleConfig small;
    small.n_max = 1;
    CHECK_THROWS_AS(sample_point(small, 0, find_identity("cor-c2").constraints), UnsatisfiableConstraints);
    CHECK_THROWS_AS(run_suite(small, {"cor-d2"}), UnsatisfiableConstraints);
}

TEST_CASE("check_identity outcomes") {
    const CheckResult odd = check_identity("andrews", {r("1/2"), r("1/3"), r("1/5"), 3, 0});
    CHECK(odd.outcome == Outcome::Pass);
    CHECK(*odd.lhs == 0);
    CHECK(*odd.rhs == 0);

    CHECK(check_identity("thm-a", {r("2/3"), r("1/3"), r("1/5"), 5, 0}).outcome == Outcome::Pass);

    const CheckResult degenerate = check_identity("andrews", {r("1/2"), r("2"), r("1/5"), 2, 0});
    CHECK(degenerate.outcome == Outcome::Degenerate);
    CHECK_FALSE(degenerate.detail.empty());

    const CheckResult mutant = check_mutant("thm-a", {r("2/3"), r("1/3"), r("1/5"), 4, 2});
    CHECK(mutant.outcome == Outcome::Fail);
    CHECK(*mutant.lhs != *mutant.rhs);
}

TEST_CASE("corrupted thm-a closed form fails wherever the true value is nonzero") {
    SampleConfig cfg;
    const IdentityCase& ic = find_identity("thm-a");
    int informative = 0;
    int caught = 0;
    for (std::uint64_t s = 0; informative < 200 && s < 1000; ++s) {
        const ParamPoint p = sample_point(cfg, s, ic.constraints);
        const CheckResult truth = check_identity("thm-a", p);
        if (truth.outcome != Outcome::Pass || *truth.rhs == 0) continue;
        ++informative;
        caught += check_mutant("thm-a", p).outcome == Outcome::Fail;
    }
    REQUIRE(informative == 200);
    CHECK(caught * 100 >= informative * 99);
}

TEST_CASE("run_suite") {
    SampleConfig cfg;
    cfg.trials = 1;
    const VerificationReport one = run_suite(cfg, {"unity-a"});
    REQUIRE(one.results.size() == 1);
    CHECK(one.results[0].passes == 1);
    CHECK(one.results[0].trials == 1);

    CHECK_THROWS_AS(run_suite(cfg, {"thm-a", "nosuch"}), UnknownIdentity);

    cfg.trials = 12;
    const VerificationReport sub = run_suite(cfg, {"thm-b", "rel-d", "cor-d2"});
    CHECK(sub.all_passed());
    for (const auto& r : sub.results) CHECK(r.passes + static_cast<int>(r.failures.size()) == cfg.trials);
    REQUIRE(sub.probes.size() == 1);
    CHECK(sub.probes[0].matching == "q^{2-n}");
}

TEST_CASE("run_suite result does not depend on thread count or id subset") {
    SampleConfig one_thread;
    one_thread.trials = 8;
    one_thread.threads = 1;
    SampleConfig many = one_thread;
    many.threads = 4;
    const std::vector<std::string> ids{"andrews", "jain", "thm-c", "cor-a2"};
    const VerificationReport a = run_suite(one_thread, ids);
    const VerificationReport b = run_suite(many, ids);
    const VerificationReport single = run_suite(one_thread, {"thm-c"});
    REQUIRE(a.results.size() == b.results.size());
    for (std::size_t i = 0; i < a.results.size(); ++i) {
        CHECK(a.results[i].id == b.results[i].id);
        CHECK(a.results[i].passes == b.results[i].passes);
        CHECK(a.results[i].degeneracies == b.results[i].degeneracies);
    }
    CHECK(single.results[0].degeneracies == a.results[2].degeneracies);
}

TEST_CASE("default suite degeneracy rate stays below 5%") {
    std::vector<std::string> ids;
    for (const auto& ic : catalog()) ids.push_back(ic.id);
    const VerificationReport report = run_suite(SampleConfig{}, ids);
    int trials = 0;
    int degenerate = 0;
    for (const auto& r : report.results) {
        trials += r.trials;
        degenerate += r.degeneracies;
    }
    CHECK(trials == 100 * static_cast<int>(catalog().size()));
    CHECK(degenerate * 20 < trials + degenerate);
}

TEST_CASE("mutants are caught for every identity") {
    SampleConfig cfg;
    cfg.trials = 20;
    for (const auto& ic : catalog()) {
        CAPTURE(ic.id);
        CHECK(count_mutant_failures(ic.id, cfg) > 0);
    }
}
