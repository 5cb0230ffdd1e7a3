#pragma once

// The batch check suite behind the command line tool: one run per
// (p, e, c), results keyed by a stable id.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace asmc {

enum class Format { json, markdown };
enum class Status { pass, fail, reported };

std::string to_string(Status s);

struct RunConfig {
  int p = 0;
  int e = 1;
  /// Coefficients of c in the tower generator, low degree first.
  std::vector<std::int64_t> c_spec{1};
  std::uint64_t seed = 42;
  std::size_t samples = 500;
  /// Branch precision; 3q when unset.
  std::optional<int> precision;
  Format format = Format::json;
  /// Check ids or group names; empty selects everything.
  std::vector<std::string> checks;
};

struct CheckResult {
  std::string id;
  Status status = Status::fail;
  nlohmann::json expected;
  nlohmann::json observed;
  /// Formula or statement the check is about.
  std::string anchor;
  /// "exhaustive", "sampled", or empty.
  std::string coverage;
  double elapsed = 0;
};

struct CheckGroup {
  std::string name;
  std::vector<std::string> ids;
};

/// Every group in run order with the ids it emits.
const std::vector<CheckGroup>& check_catalog();

struct Report {
  RunConfig config;
  int p = 0, e = 0;
  std::uint64_t q = 0;
  std::string c;
  /// Sorted by id.
  std::vector<CheckResult> results;
  double total_elapsed = 0;

  std::size_t count(Status s) const;
  /// 0 when nothing failed, 1 otherwise.
  int exit_code() const;
  /// Full document including the timing block.
  nlohmann::json to_json() const;
  /// FNV-1a over the document without timing.
  std::uint64_t determinism_hash() const;
  std::string render() const;
};

/// Throws ConfigError on an invalid p, e, c, sample count or check name.
void validate(const RunConfig& config);

/// Validates, then runs the selected groups in catalog order.
Report run_report(const RunConfig& config);

}  // namespace asmc
