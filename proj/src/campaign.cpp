#include "coadj/campaign.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace coadj {

using nlohmann::json;

nlohmann::json BatchSummary::to_json() const {
  // Only content that a fresh and a resumed run agree on.
  return {{"summary",
           {{"n", n},
            {"ideals", ideals},
            {"theorem_failures", theorem_failures},
            {"failing_keys", failing_keys},
            {"counterexamples", counterexamples},
            {"exit_code", exit_code}}}};
}

BatchSummary summarize(int n, const std::vector<std::string>& lines) {
  BatchSummary s;
  s.n = n;
  for (const auto& line : lines) {
    const json j = json::parse(line);
    if (j.contains("summary")) continue;
    const auto report = j.get<RunReport>();
    ++s.ideals;
    const int code = exit_code(report);
    if (code == kExitCheckFailed) {
      ++s.theorem_failures;
      s.failing_keys.push_back(ideal_key(report.n, report.thresholds));
    }
    s.counterexamples.insert(s.counterexamples.end(), report.counterexamples.begin(), report.counterexamples.end());
  }
  if (s.theorem_failures > 0)
    s.exit_code = kExitCheckFailed;
  else if (!s.counterexamples.empty())
    s.exit_code = kExitCounterexample;
  return s;
}

namespace {

std::vector<std::string> selection(const RunOptions& o) {
  std::vector<std::string> out;
  if (o.theorems) out.push_back("theorems");
  if (o.oracle) out.push_back("oracle");
  if (o.conjecture) out.push_back("conjecture");
  return out;
}

void write_atomically(const std::filesystem::path& path, const std::vector<std::string>& lines) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    for (const auto& line : lines) out << line << '\n';
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

BatchSummary run_batch(const BatchOptions& options) {
  if (options.n < 1 || options.n > kMaxBatchSize)
    throw InputError("batch size n must lie in [1, " + std::to_string(kMaxBatchSize) + "]");
  const auto ideals = enumerate_regular_ideals(options.n);
  const auto wanted = selection(options.run);

  std::map<std::vector<int>, std::string> done;
  if (options.resume && !options.path.empty() && std::filesystem::exists(options.path)) {
    std::ifstream in(options.path);
    for (std::string line; std::getline(in, line);) {
      // A line cut short by an interrupted run fails to parse and is recomputed.
      const json j = json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.is_object() || j.contains("summary")) continue;
      try {
        const auto report = j.get<RunReport>();
        if (report.n == options.n && report.selected == wanted) done.emplace(report.thresholds, line);
      } catch (const std::exception&) {
        continue;
      }
    }
  }

  std::vector<const RegularIdeal*> todo;
  for (const auto& m : ideals)
    if (!done.count(m.thresholds())) todo.push_back(&m);

  std::ofstream sink;
  if (!options.path.empty()) {
    std::vector<std::string> kept;
    for (const auto& [key, line] : done) kept.push_back(line);
    write_atomically(options.path, kept);
    sink.open(options.path, std::ios::app);
    if (!sink) throw std::runtime_error("cannot append to " + options.path);
  }

  const int reused = static_cast<int>(done.size());
  std::mutex writer;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) {
      try {
        const RunReport report = analyze(*todo[i], options.run);
        std::string line = json(report).dump();
        std::lock_guard lock(writer);
        if (sink.is_open()) sink << line << '\n' << std::flush;
        done.emplace(todo[i]->thresholds(), std::move(line));
      } catch (...) {
        std::lock_guard lock(writer);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int j = 0; j < std::max(1, options.jobs); ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  sink.close();

  std::vector<std::string> lines;
  for (const auto& [key, line] : done) lines.push_back(line);
  BatchSummary summary = summarize(options.n, lines);
  summary.computed = static_cast<int>(todo.size());
  summary.reused = reused;
  lines.push_back(summary.to_json().dump());

  if (options.path.empty()) {
    for (const auto& line : lines) std::cout << line << '\n';
  } else {
    write_atomically(options.path, lines);
  }
  return summary;
}

}  // namespace coadj
