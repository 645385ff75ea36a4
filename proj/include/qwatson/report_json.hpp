#pragma once

#include <string>

#include <json.hpp>

#include "qwatson/verifier.hpp"

namespace qwatson {

inline constexpr int kReportSchema = 1;

/// Serializes a report. Rationals become "p/r" strings. With
/// `include_timing` false the wallTimeMs fields are omitted, which makes
/// the output a pure function of the sample configuration.
nlohmann::ordered_json report_to_json(const VerificationReport& report, bool include_timing = true);

/// Inverse of report_to_json. Throws ParseError on schema mismatch.
VerificationReport report_from_json(const nlohmann::ordered_json& doc);

std::string dump_report(const VerificationReport& report, bool include_timing = true);

}  // namespace qwatson
