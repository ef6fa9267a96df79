#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coadj/checks.hpp"
#include "coadj/diagram.hpp"
#include "coadj/poisson.hpp"

namespace coadj {

inline constexpr const char* kSchemaVersion = "v1";

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitCheckFailed = 3,
  kExitCounterexample = 4,
};

struct ReducedReport {
  std::vector<Root> divisors;
  std::string quotient;
  bool invariant = false;
  std::string note;

  friend bool operator==(const ReducedReport&, const ReducedReport&) = default;
};

struct CandidateReport {
  Root xi;
  int case_tag = 0;
  std::vector<int> I;
  std::vector<int> J;
  int lambda_degree = -1;
  std::string poly;
  bool invariant = false;
  std::optional<Root> witness;
  std::string witness_bracket;
  std::optional<std::string> anomaly;
  std::optional<ReducedReport> reduced;

  friend bool operator==(const CandidateReport&, const CandidateReport&) = default;
};

/// A falsifying instance for the invariant-candidate harness.
struct Counterexample {
  std::string kind;  // "not_invariant", "jacobian_rank", "anomaly"
  std::vector<Root> ideal;
  std::optional<Root> xi;
  std::optional<Root> witness_root;
  std::string bracket_poly_string;
  std::uint64_t seed = 0;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct OracleSection {
  OracleReport report;
  bool agrees = false;  // rank and index match the diagram

  friend bool operator==(const OracleSection&, const OracleSection&) = default;
};

struct RunReport {
  std::string schema = kSchemaVersion;
  int n = 0;
  std::vector<Root> ideal;
  std::vector<int> thresholds;
  std::vector<std::string> diagram;  // ASCII rows
  std::vector<StepRecord> steps;
  DiagramStats stats;
  std::vector<int> w;
  long inversions = 0;
  std::vector<Root> reflection_word;
  std::vector<std::string> selected;  // check families that were run
  std::optional<std::vector<CheckResult>> theorem_checks;
  std::optional<OracleSection> oracle;
  std::optional<std::vector<CandidateReport>> candidates;
  std::optional<int> jacobian_rank;
  std::vector<Counterexample> counterexamples;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

struct RunOptions {
  bool theorems = true;
  bool oracle = true;
  bool conjecture = true;
  int trials = kDefaultTrials;
  Residue prime = kMersenne61;
  std::uint64_t seed = kDefaultSeed;
};

/// Runs the selected check families on one ideal. Never throws for failing
/// checks; failures land in the report.
RunReport analyze(const RegularIdeal& ideal, const RunOptions& options = {});

/// 3 if a theorem check or the oracle disagrees, else 4 if a counterexample
/// was recorded, else 0.
int exit_code(const RunReport& report);

/// Stable key for sorting and resuming: "n=7;c=5,5,8,8,8,8".
std::string ideal_key(int n, const std::vector<int>& thresholds);

/// Parses "5,1;6,1;7,1;7,2" (empty string = no roots). Throws InputError.
std::vector<Root> parse_root_list(const std::string& text);

void to_json(nlohmann::json& j, const Root& r);
void from_json(const nlohmann::json& j, Root& r);
void to_json(nlohmann::json& j, const RunReport& r);
void from_json(const nlohmann::json& j, RunReport& r);
void to_json(nlohmann::json& j, const Counterexample& c);
void from_json(const nlohmann::json& j, Counterexample& c);

struct IdealInput {
  int n = 0;
  std::vector<Root> roots;
};

/// {"n": 7, "ideal": [[5,1],[6,1],[7,1],[7,2]]}. Throws InputError.
IdealInput parse_ideal_json(const std::string& text);

/// Strict unless allow_closure, in which case the set is closed up first.
RegularIdeal make_ideal(const IdealInput& input, bool allow_closure);

}  // namespace coadj
