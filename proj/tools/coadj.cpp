// coadj: diagram, permutation, and invariant-candidate reports for factor
// algebras of the unitriangular Lie algebra.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coadj/campaign.hpp"
#include "coadj/diagram.hpp"
#include "coadj/report.hpp"

namespace {

struct RunArgs {
  std::string input;
  int n = 0;
  std::string ideal;
  bool closure = false;
  std::string out;
  std::string diagram_out;
  bool ascii = false;
  bool unicode = false;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw coadj::InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int do_run(const RunArgs& args, const coadj::RunOptions& options) {
  coadj::IdealInput input;
  if (!args.input.empty()) {
    input = coadj::parse_ideal_json(slurp(args.input));
  } else {
    if (args.n < 1) throw coadj::InputError("give an input file or --n");
    input.n = args.n;
    input.roots = coadj::parse_root_list(args.ideal);
  }
  const auto ideal = coadj::make_ideal(input, args.closure);
  const auto report = coadj::analyze(ideal, options);

  emit(args.out, nlohmann::json(report).dump(2) + "\n", std::cout);
  emit(args.diagram_out, coadj::Diagram(ideal).render(args.ascii), std::cerr);
  return coadj::exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbol diagrams, associated permutations and invariant candidates for ut(n)/m"};
  app.require_subcommand(1);

  coadj::RunOptions options;
  auto add_oracle_flags = [&](CLI::App* cmd) {
    cmd->add_option("--seed", options.seed, "Random seed for the oracles");
    cmd->add_option("--prime", options.prime, "Prime modulus for the oracles (> 2^40)");
    cmd->add_option("--trials", options.trials, "Random points per oracle")->check(CLI::PositiveNumber);
  };

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Analyze one ideal and print a JSON report");
  run->add_option("input", run_args.input, "JSON input file ({\"n\":..,\"ideal\":[[r,c],..]}), '-' for stdin");
  run->add_option("--n", run_args.n, "Matrix size");
  run->add_option("--ideal", run_args.ideal, "Ideal roots as \"r,c;r,c;...\"");
  run->add_flag("--closure", run_args.closure, "Close the given roots up to a regular ideal instead of rejecting");
  run->add_option("--out", run_args.out, "Write the JSON report here instead of stdout");
  run->add_option("--diagram-out", run_args.diagram_out, "Write the diagram here instead of stderr");
  auto* ascii = run->add_flag("--ascii", run_args.ascii, "Render the diagram with x + - *");
  run->add_flag("--unicode", run_args.unicode, "Render the diagram with Unicode symbols (default)")->excludes(ascii);
  add_oracle_flags(run);

  coadj::BatchOptions batch_options;
  bool theorems = false, oracle = false, conjecture = false;
  std::string resume_path;
  auto* batch = app.add_subcommand("batch", "Run every regular ideal of size n; one JSON line per ideal");
  batch->add_option("--n", batch_options.n, "Matrix size")->required();
  batch->add_flag("--theorems", theorems, "Structural checks on diagram and permutation");
  batch->add_flag("--oracle", oracle, "Random-point rank oracle against the diagram counts");
  batch->add_flag("--conjecture", conjecture, "Invariance and independence of the minor candidates");
  batch->add_option("--jobs", batch_options.jobs, "Worker threads")->check(CLI::PositiveNumber);
  auto* out_opt = batch->add_option("--out", batch_options.path, "JSONL results file (fresh run)");
  batch->add_option("--resume", resume_path, "JSONL results file to continue")->excludes(out_opt);
  add_oracle_flags(batch);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : coadj::kExitInputError;
  }

  try {
    if (*run) return do_run(run_args, options);

    if (!theorems && !oracle && !conjecture) theorems = oracle = conjecture = true;
    options.theorems = theorems;
    options.oracle = oracle;
    options.conjecture = conjecture;
    batch_options.run = options;
    if (!resume_path.empty()) {
      batch_options.path = resume_path;
      batch_options.resume = true;
    }
    const auto summary = coadj::run_batch(batch_options);
    std::cerr << "ideals " << summary.ideals << " (computed " << summary.computed << ", reused " << summary.reused
              << "), theorem failures " << summary.theorem_failures << ", counterexamples "
              << summary.counterexamples.size() << "\n";
    return summary.exit_code;
  } catch (const coadj::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return coadj::kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
