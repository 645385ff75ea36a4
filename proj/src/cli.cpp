#include "qwatson/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "qwatson/catalog.hpp"
#include "qwatson/errors.hpp"
#include "qwatson/report_json.hpp"
#include "qwatson/series.hpp"
#include "qwatson/verifier.hpp"

namespace qwatson {

namespace {

std::vector<Rational> parse_list(const std::string& text) {
    std::vector<Rational> values;
    if (text.empty()) return values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(parse_rational(item));
    return values;
}

void print_catalog(std::ostream& out) {
    for (const auto& ic : catalog()) {
        out << std::left << std::setw(8) << ic.id << " — " << ic.paper_ref << "\n"
            << "         constraints: " << ic.constraints.describe() << "\n"
            << "         " << ic.shape << "\n";
    }
}

void print_table(const VerificationReport& report, std::ostream& out) {
    out << std::left << std::setw(9) << "id" << std::right << std::setw(8) << "trials" << std::setw(8) << "passes"
        << std::setw(10) << "failures" << std::setw(8) << "degen" << std::setw(11) << "ms" << "\n";
    for (const auto& r : report.results) {
        out << std::left << std::setw(9) << r.id << std::right << std::setw(8) << r.trials << std::setw(8) << r.passes
            << std::setw(10) << r.failures.size() << std::setw(8) << r.degeneracies << std::setw(11) << std::fixed
            << std::setprecision(1) << r.wall_ms << "\n";
        for (const auto& f : r.failures) {
            out << "    FAIL at " << f.point.str() << ": lhs=" << to_string(f.lhs) << " rhs=" << to_string(f.rhs)
                << "\n";
        }
    }
    for (const auto& probe : report.probes) {
        out << probe.id << " LHS reading check:";
        for (const auto& v : probe.variants) out << " upper " << v.upper << " " << v.matches << "/" << v.trials;
        out << " -> " << (probe.matching.empty() ? "no unique match" : "matches " + probe.matching) << "\n";
    }
    out << (report.all_passed() ? "ALL PASS" : "FAILURES: " + std::to_string(report.total_failures())) << "\n";
}

struct VerifyOptions {
    bool all = false;
    std::vector<std::string> ids;
    SampleConfig config;
    std::string json_path;
};

int do_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    std::vector<std::string> ids = opt.ids;
    if (opt.all) {
        ids.clear();
        for (const auto& ic : catalog()) ids.push_back(ic.id);
    }
    if (ids.empty()) {
        err << "verify: pass --all or at least one --id\n";
        return kExitUsage;
    }
    for (const auto& id : ids) {
        if (!is_known_identity(id)) {
            err << "verify: unknown identity id '" << id << "' (see `list`)\n";
            return kExitUsage;
        }
    }
    if (opt.config.trials < 1 || opt.config.max_resamples < 1) {
        err << "verify: --trials and --max-resamples must be positive\n";
        return kExitUsage;
    }
    VerificationReport report;
    try {
        report = run_suite(opt.config, ids);
    } catch (const UnsatisfiableConstraints& e) {
        err << "verify: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResampleBudgetExhausted& e) {
        err << "verify: " << e.what() << "\n";
        return kExitUsage;
    }
    print_table(report, out);
    if (!opt.json_path.empty()) {
        std::ofstream file(opt.json_path);
        if (!file) {
            err << "verify: cannot write " << opt.json_path << "\n";
            return kExitUsage;
        }
        file << dump_report(report);
    }
    return report.all_passed() ? kExitOk : kExitFailure;
}

struct EvalOptions {
    std::string id;
    std::string q, A, C;
    int n = 0;
    std::optional<int> eps;
    std::string num, den, z;
    std::optional<int> bound;
};

int do_eval(const EvalOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        if (opt.id.empty()) {
            if (opt.q.empty() || opt.z.empty() || !opt.bound) {
                err << "eval: give --id, or a raw series via --num/--den/--z/--bound with --q\n";
                return kExitUsage;
            }
            SeriesSpec spec{parse_list(opt.num), parse_list(opt.den), parse_rational(opt.z), *opt.bound};
            const Rational q = parse_rational(opt.q);
            if (spec.bound < 0) throw ParseError("--bound must be nonnegative");
            if (q == 0 || q == 1 || q == -1) throw ConstraintViolated("q must not be 0, 1 or -1");
            out << "VALUE=" << to_string(phi_eval(spec, q)) << "\n";
            return kExitOk;
        }
        if (!is_known_identity(opt.id)) {
            err << "eval: unknown identity id '" << opt.id << "' (see `list`)\n";
            return kExitUsage;
        }
        if (opt.q.empty() || opt.A.empty() || opt.C.empty()) {
            err << "eval: --q, --A and --C are required with --id\n";
            return kExitUsage;
        }
        const IdentityCase& ic = find_identity(opt.id);
        ParamPoint p;
        p.q = parse_rational(opt.q);
        p.A = parse_rational(opt.A);
        p.C = parse_rational(opt.C);
        p.n = opt.n;
        p.eps = opt.eps.value_or(ic.constraints.eps_fixed.value_or(0));
        p.validate();
        ic.constraints.check(p);
        const Rational lhs = ic.lhs(p);
        const Rational rhs = ic.rhs(p);
        const bool equal = lhs == rhs;
        out << "LHS=" << to_string(lhs) << " RHS=" << to_string(rhs) << " " << (equal ? "EQUAL" : "NOT EQUAL")
            << "\n";
        return equal ? kExitOk : kExitFailure;
    } catch (const DegenerateDenominator& e) {
        err << "eval: degenerate point: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const DivisionByZero& e) {
        err << "eval: degenerate point: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const Error& e) {
        err << "eval: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of q-Watson type 4phi3 summation formulas"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "Print the identity catalog");

    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "Check identities at random rational points");
    verify->add_flag("--all", vopt.all, "Verify every catalog identity");
    verify->add_option("--id", vopt.ids, "Identity id (repeatable)");
    verify->add_option("--seed", vopt.config.seed, "Sampler seed");
    verify->add_option("--trials", vopt.config.trials, "Non-degenerate trials per identity");
    verify->add_option("--n-max", vopt.config.n_max, "Largest n")->check(CLI::NonNegativeNumber);
    verify->add_option("--eps-max", vopt.config.eps_max, "Largest eps")->check(CLI::NonNegativeNumber);
    verify->add_option("--height", vopt.config.height, "Height bound for sampled rationals");
    verify->add_option("--max-resamples", vopt.config.max_resamples, "Degenerate redraws allowed per trial");
    verify->add_option("--threads", vopt.config.threads, "Worker threads (0 = all cores)");
    verify->add_option("--json", vopt.json_path, "Write the JSON report here");

    EvalOptions eopt;
    auto* eval = app.add_subcommand("eval", "Evaluate an identity or a raw series at one point");
    eval->add_option("--id", eopt.id, "Identity id");
    eval->add_option("--q", eopt.q, "q as p/r");
    eval->add_option("--A", eopt.A, "A = sqrt(a) as p/r");
    eval->add_option("--C", eopt.C, "C = sqrt(c) as p/r");
    eval->add_option("--n", eopt.n, "n")->check(CLI::NonNegativeNumber);
    eval->add_option("--eps", eopt.eps, "eps")->check(CLI::NonNegativeNumber);
    eval->add_option("--num", eopt.num, "Raw series numerator parameters, comma separated");
    eval->add_option("--den", eopt.den, "Raw series denominator parameters, comma separated");
    eval->add_option("--z", eopt.z, "Raw series argument");
    eval->add_option("--bound", eopt.bound, "Raw series summation bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (*list) {
        print_catalog(out);
        return kExitOk;
    }
    if (*verify) return do_verify(vopt, out, err);
    return do_eval(eopt, out, err);
}

}  // namespace qwatson
