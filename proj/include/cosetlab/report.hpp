#pragma once

#include <span>
#include <string>
#include <vector>

#include "cosetlab/census.hpp"
#include "cosetlab/lemmas.hpp"
#include "cosetlab/verifier.hpp"
#include "json.hpp"

namespace cosetlab {

inline constexpr std::string_view kReportFormat = "cosetlab-report-v1";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// Deterministic part of a per-k report; timing and cache status go to the
/// document's "runtime" block instead.
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const Violation& v);
nlohmann::json to_json(const LemmaSuiteResult& r);
nlohmann::json to_json(const Subgroup& h, std::size_t id);

/// Census plus the inequality diagnostics of the same triple.
nlohmann::json census_block(std::span<const std::size_t, 3> ids, const TripleCensus& c,
                            const TripleDiagnostics& d);

/// Copy with the top-level "runtime" block removed; what determinism compares.
nlohmann::json without_runtime(const nlohmann::json& report);

/// Structural check against the published report schema. Empty means valid.
std::vector<std::string> validate_report(const nlohmann::json& report);

}  // namespace cosetlab
