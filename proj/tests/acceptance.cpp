// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "qwatson/catalog.hpp"
#include "qwatson/report_json.hpp"
#include "qwatson/series.hpp"
#include "qwatson/verifier.hpp"
#include "test_support.hpp"

using namespace qwatson;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

SampleConfig main_config() {
    SampleConfig cfg;
    cfg.seed = 42;
    cfg.trials = 100;
    cfg.n_max = 8;
    cfg.eps_max = 4;
    cfg.height = 10;
    return cfg;
}

std::vector<std::string> all_ids() {
    std::vector<std::string> ids;
    for (const auto& ic : catalog()) ids.push_back(ic.id);
    return ids;
}

// Draws `count` points where `check` does not hit a degenerate denominator;
// returns the number of points at which check returned false.
int mismatches_over(const Constraints& constraints, std::uint64_t seed, int count,
                    const std::function<void(ParamPoint&)>& adjust, const std::function<bool(const ParamPoint&)>& check,
                    int& evaluated) {
    SampleConfig cfg = main_config();
    cfg.seed = seed;
    int bad = 0;
    evaluated = 0;
    for (std::uint64_t stream = 0; evaluated < count && stream < 100000; ++stream) {
        ParamPoint p = sample_point(cfg, stream, constraints);
        adjust(p);
        try {
            if (!check(p)) ++bad;
            ++evaluated;
        } catch (const DegenerateDenominator&) {
        }
    }
    return bad;
}

VerificationReport g_main_report;

Verdict full_catalog() {
    const auto start = std::chrono::steady_clock::now();
    g_main_report = run_suite(main_config(), all_ids());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    int trials = 0;
    int degenerate = 0;
    bool quota = true;
    for (const auto& r : g_main_report.results) {
        trials += r.trials;
        degenerate += r.degeneracies;
        quota = quota && r.passes + static_cast<int>(r.failures.size()) == 100;
    }
    const bool ok = g_main_report.results.size() == 21 && g_main_report.all_passed() && quota && secs < 60.0;
    char buf[200];
    std::snprintf(buf, sizeof buf, "21 ids x 100 trials, %d failures, %d degenerate redraws (%.2f%%), %.1fs",
                  g_main_report.total_failures(), degenerate, 100.0 * degenerate / (trials + degenerate), secs);
    return {ok, buf};
}

Verdict collapse() {
    int n_a = 0;
    int n_c = 0;
    const auto zero_eps = [](ParamPoint& p) { p.eps = 0; };
    const int bad_a = mismatches_over(find_identity("thm-a").constraints, 1001, 100, zero_eps,
                                      [](const ParamPoint& p) { return thm_rhs("thm-a", p) == andrews_rhs(p); }, n_a);
    const int bad_c = mismatches_over(find_identity("thm-c").constraints, 1002, 100, zero_eps,
                                      [](const ParamPoint& p) { return thm_rhs("thm-c", p) == jain_rhs(p); }, n_c);
    return {bad_a == 0 && bad_c == 0 && n_a == 100 && n_c == 100,
            "thm-a vs andrews " + std::to_string(n_a - bad_a) + "/" + std::to_string(n_a) + ", thm-c vs jain " +
                std::to_string(n_c - bad_c) + "/" + std::to_string(n_c)};
}

Verdict corollaries() {
    const std::pair<const char*, const char*> pairings[] = {
        {"thm-a", "cor-a1"}, {"thm-a", "cor-a2"}, {"thm-b", "cor-b1"}, {"thm-b", "cor-b2"},
        {"thm-c", "cor-c1"}, {"thm-c", "cor-c2"}, {"thm-d", "cor-d1"}, {"thm-d", "cor-d2"}};
    bool ok = true;
    std::string detail;
    std::uint64_t seed = 2000;
    for (const auto& [thm, cor] : pairings) {
        int evaluated = 0;
        const int bad = mismatches_over(
            find_identity(cor).constraints, seed++, 50, [](ParamPoint&) {},
            [thm = std::string(thm), cor = std::string(cor)](const ParamPoint& p) {
                return thm_rhs(thm, p) == cor_rhs(cor, p);
            },
            evaluated);
        ok = ok && bad == 0 && evaluated == 50;
        detail += std::string(detail.empty() ? "" : ", ") + cor + " " + std::to_string(evaluated - bad) + "/" +
                  std::to_string(evaluated);
    }
    return {ok, detail};
}

Verdict parity() {
    bool ok = true;
    int checked = 0;
    std::uint64_t seed = 3000;
    for (const char* id : {"andrews", "thm-a", "thm-b"}) {
        for (int n = 1; n <= 9; n += 2) {
            int evaluated = 0;
            const int bad = mismatches_over(
                find_identity(id).constraints, seed++, 20,
                [n](ParamPoint& p) {
                    p.n = n;
                    p.eps = 0;
                },
                [id](const ParamPoint& p) { return lhs_eval(id, p) == 0 && rhs_eval(id, p) == 0; }, evaluated);
            ok = ok && bad == 0 && evaluated == 20;
            checked += evaluated - bad;
        }
    }
    return {ok, std::to_string(checked) + "/300 odd-n points sum to exactly 0 (andrews, thm-a, thm-b at eps=0)"};
}

Verdict mutation() {
    SampleConfig cfg = main_config();
    cfg.trials = 20;
    bool ok = true;
    std::string missed;
    int min_caught = cfg.trials;
    for (const auto& ic : catalog()) {
        const int caught = count_mutant_failures(ic.id, cfg);
        min_caught = std::min(min_caught, caught);
        if (caught == 0) {
            ok = false;
            missed += " " + ic.id;
        }
    }
    return {ok, ok ? "every id's mutant caught within 20 trials (fewest catches: " + std::to_string(min_caught) + ")"
                   : "mutants not caught:" + missed};
}

Verdict cor_d2_probe() {
    if (g_main_report.probes.empty()) return {false, "no probe in report"};
    const VariantProbe& probe = g_main_report.probes.front();
    int full = 0;
    std::string detail = probe.id + ":";
    for (const auto& v : probe.variants) {
        full += v.trials > 0 && v.matches == v.trials;
        detail += " " + v.upper + " " + std::to_string(v.matches) + "/" + std::to_string(v.trials);
    }
    const auto doc = report_to_json(g_main_report);
    const bool recorded = doc["variantProbes"][0]["matching"] == probe.matching;
    detail += "; report names " + (probe.matching.empty() ? std::string("nothing") : probe.matching);
    return {full == 1 && !probe.matching.empty() && recorded, detail};
}

Verdict determinism() {
    const std::string first = dump_report(g_main_report, false);
    SampleConfig cfg = main_config();
    cfg.threads = 1;
    const std::string second = dump_report(run_suite(cfg, all_ids()), false);
    return {first == second, std::to_string(first.size()) + "-byte reports " + (first == second ? "identical" : "differ")};
}

Verdict evaluator_oracle() {
    qwatson::testing::RationalGen gen(8008);
    int compared = 0;
    int bad = 0;
    while (compared < 200) {
        const Rational q = gen.base();
        const int bound = gen.integer(0, 8);
        SeriesSpec spec;
        spec.bound = bound;
        spec.numer.push_back(qpow(q, -bound));
        for (int i = gen.integer(0, 4); i > 0; --i) spec.numer.push_back(gen.nonzero());
        for (int i = gen.integer(0, 4); i > 0; --i) spec.denom.push_back(gen.nonzero());
        spec.argument = gen.any();
        try {
            const Rational slow = qwatson::testing::naive_phi(spec, q);
            const Rational fast = phi_eval(spec, q);
            bad += fast != slow;
            ++compared;
        } catch (const DegenerateDenominator&) {
        }
    }
    return {bad == 0, std::to_string(compared - bad) + "/200 random series agree exactly"};
}

}  // namespace

int main() {
    const std::pair<const char*, Verdict (*)()> criteria[] = {
        {"1 full-catalog verification", full_catalog},
        {"2 collapse consistency (eps=0)", collapse},
        {"3 corollary consistency", corollaries},
        {"4 parity structure", parity},
        {"5 mutation sensitivity", mutation},
        {"6 cor-d2 reading resolved", cor_d2_probe},
        {"7 determinism", determinism},
        {"8 evaluator oracle equivalence", evaluator_oracle},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Verdict o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << o.detail << std::endl;
    }
    std::cout << (failed == 0 ? "acceptance: all criteria pass" : "acceptance: " + std::to_string(failed) + " failing")
              << std::endl;
    return failed == 0 ? 0 : 1;
}
