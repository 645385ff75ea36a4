#include "qwatson/report_json.hpp"

#include "qwatson/errors.hpp"

namespace qwatson {

using nlohmann::ordered_json;

namespace {

ordered_json point_to_json(const ParamPoint& p) {
    return {{"q", to_string(p.q)}, {"A", to_string(p.A)}, {"C", to_string(p.C)}, {"n", p.n}, {"eps", p.eps}};
}

ParamPoint point_from_json(const ordered_json& j) {
    ParamPoint p;
    p.q = parse_rational(j.at("q").get<std::string>());
    p.A = parse_rational(j.at("A").get<std::string>());
    p.C = parse_rational(j.at("C").get<std::string>());
    p.n = j.at("n").get<int>();
    p.eps = j.at("eps").get<int>();
    return p;
}

}  // namespace

ordered_json report_to_json(const VerificationReport& report, bool include_timing) {
    ordered_json doc;
    doc["schema"] = kReportSchema;
    doc["catalogVersion"] = report.catalog_version;
    const auto& cfg = report.config;
    doc["config"] = {{"seed", cfg.seed},
                     {"trials", cfg.trials},
                     {"nMax", cfg.n_max},
                     {"epsMax", cfg.eps_max},
                     {"rationalHeight", cfg.height}};
    ordered_json results = ordered_json::array();
    for (const auto& r : report.results) {
        ordered_json failures = ordered_json::array();
        for (const auto& f : r.failures) {
            failures.push_back({{"point", point_to_json(f.point)}, {"lhs", to_string(f.lhs)}, {"rhs", to_string(f.rhs)}});
        }
        ordered_json entry = {{"id", r.id},
                              {"paperRef", r.paper_ref},
                              {"trials", r.trials},
                              {"passes", r.passes},
                              {"failures", failures},
                              {"degeneracies", r.degeneracies}};
        if (include_timing) entry["wallTimeMs"] = r.wall_ms;
        results.push_back(std::move(entry));
    }
    doc["results"] = std::move(results);
    ordered_json probes = ordered_json::array();
    for (const auto& probe : report.probes) {
        ordered_json variants = ordered_json::array();
        for (const auto& v : probe.variants) {
            variants.push_back({{"upper", v.upper}, {"matches", v.matches}, {"trials", v.trials}});
        }
        probes.push_back({{"id", probe.id}, {"variants", variants}, {"matching", probe.matching}});
    }
    doc["variantProbes"] = std::move(probes);
    return doc;
}

VerificationReport report_from_json(const ordered_json& doc) {
    try {
        if (doc.at("schema").get<int>() != kReportSchema) throw ParseError("unsupported report schema");
        VerificationReport report;
        report.catalog_version = doc.at("catalogVersion").get<int>();
        const auto& cfg = doc.at("config");
        report.config.seed = cfg.at("seed").get<std::uint64_t>();
        report.config.trials = cfg.at("trials").get<int>();
        report.config.n_max = cfg.at("nMax").get<int>();
        report.config.eps_max = cfg.at("epsMax").get<int>();
        report.config.height = cfg.at("rationalHeight").get<int>();
        for (const auto& entry : doc.at("results")) {
            IdentityReport r;
            r.id = entry.at("id").get<std::string>();
            r.paper_ref = entry.at("paperRef").get<std::string>();
            r.trials = entry.at("trials").get<int>();
            r.passes = entry.at("passes").get<int>();
            r.degeneracies = entry.at("degeneracies").get<int>();
            r.wall_ms = entry.value("wallTimeMs", 0.0);
            for (const auto& f : entry.at("failures")) {
                r.failures.push_back({point_from_json(f.at("point")), parse_rational(f.at("lhs").get<std::string>()),
                                      parse_rational(f.at("rhs").get<std::string>())});
            }
            report.results.push_back(std::move(r));
        }
        for (const auto& entry : doc.value("variantProbes", ordered_json::array())) {
            VariantProbe probe;
            probe.id = entry.at("id").get<std::string>();
            probe.matching = entry.at("matching").get<std::string>();
            for (const auto& v : entry.at("variants")) {
                probe.variants.push_back(
                    {v.at("upper").get<std::string>(), v.at("matches").get<int>(), v.at("trials").get<int>()});
            }
            report.probes.push_back(std::move(probe));
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
}

std::string dump_report(const VerificationReport& report, bool include_timing) {
    return report_to_json(report, include_timing).dump(2) + "\n";
}

}  // namespace qwatson
