#pragma once

// Verification suites per manifold, batch rows, and tensor dumps.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "infogeo/config.hpp"

namespace infogeo {

// One check at one point (point_index < 0 marks a suite-level check).
struct CheckRow {
  std::string check_id;
  long point_index = -1;
  std::vector<double> coordinates;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct CheckSummary {
  std::string check_id;
  std::string description;
  std::size_t points = 0;
  std::size_t failures = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed() const { return failures == 0; }
};

struct VerificationReport {
  std::string suite;
  RunConfig config;
  std::vector<CheckRow> rows;
  std::vector<CheckSummary> summaries;  // in order of first appearance
  double wall_time_seconds = 0.0;       // not part of rendered reports

  bool passed() const;
};

// Runs every check registered for the configured manifold. Input errors in
// explicit points surface as ConfigError / DomainError.
VerificationReport run_suite(const RunConfig& cfg);

// ω_F, g_F, their diagonal pullbacks and the extracted metric at one point
// (explicit `point`, else the first configured point). For pure states: Re h,
// Im h and the Kähler pair.
nlohmann::ordered_json tensor_dump(const RunConfig& cfg, const nlohmann::json* point = nullptr);

}  // namespace infogeo
