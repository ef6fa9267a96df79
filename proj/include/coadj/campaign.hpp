#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coadj/report.hpp"

namespace coadj {

inline constexpr int kMaxBatchSize = 10;

struct BatchOptions {
  int n = 0;
  RunOptions run;
  int jobs = 1;
  /// JSONL destination. Empty means write the sorted result to stdout.
  std::string path;
  /// Keep lines already in path whose key and selected families match.
  bool resume = false;
};

struct BatchSummary {
  int n = 0;
  int ideals = 0;
  int computed = 0;
  int reused = 0;
  int theorem_failures = 0;
  std::vector<std::string> failing_keys;
  std::vector<Counterexample> counterexamples;
  int exit_code = kExitOk;

  nlohmann::json to_json() const;
};

/// Summary over finished report lines (summary lines are ignored).
BatchSummary summarize(int n, const std::vector<std::string>& lines);

/// Runs every regular ideal of size n through analyze(), appending one JSON
/// line per ideal as results arrive, then rewrites the file sorted by ideal key
/// with a trailing {"summary": ...} line. Throws InputError for n out of range
/// and std::runtime_error on I/O failure.
BatchSummary run_batch(const BatchOptions& options);

}  // namespace coadj
