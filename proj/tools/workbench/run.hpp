#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scenario.hpp"

namespace cwb::wb {

enum ExitCode : int {
  kOk = 0,
  kScenarioError = 1,
  kMathError = 2,
  kHorizonInsufficient = 3,
};

struct StepRecord {
  std::string label;
  std::string op;
  json result = json::object();
  json certificates = json::object();
  std::optional<std::string> error;
  long long micros = 0;
};

struct Report {
  int version = kSchemaVersion;
  std::string scenario_hash;
  /// Completed steps, then the failing step if any.
  std::vector<StepRecord> steps;
  int exit_code = kOk;
};

struct RunOptions {
  std::optional<std::size_t> depth;
  std::optional<std::size_t> horizon;
  /// Run independent steps concurrently.
  bool parallel = false;
};

Report run(const Scenario& sc, const RunOptions& opts = {});

struct EmitOptions {
  bool timings = true;
};

/// Canonical JSON (sorted keys, integers only) or a text table per step.
std::string emit(const Report& r, const std::string& format, const EmitOptions& opts = {});
json report_json(const Report& r, const EmitOptions& opts = {});

}  // namespace cwb::wb
