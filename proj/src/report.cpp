#include "coadj/report.hpp"

#include <sstream>

#include "coadj/invariants.hpp"
#include "coadj/permutation.hpp"

namespace coadj {

using nlohmann::json;

namespace {

constexpr const char* kReducedNote =
    "highest lambda-coefficient is divisible by earlier candidates; the quotient is reported alongside the raw coefficient";

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

RunReport analyze(const RegularIdeal& ideal, const RunOptions& options) {
  RunReport r;
  r.n = ideal.n();
  r.ideal = ideal.roots();
  r.thresholds = ideal.thresholds();

  const Diagram d(ideal);
  r.diagram = split_lines(d.render(true));
  r.steps = d.steps();
  r.stats = d.stats();
  r.w = build_w(ideal).one_line();
  r.inversions = inversions(Permutation::from_one_line(r.w));
  r.reflection_word = d.crosses();

  if (options.theorems) {
    r.selected.push_back("theorems");
    r.theorem_checks = theorem_checks(d);
  }
  if (options.oracle) {
    r.selected.push_back("oracle");
    OracleSection o;
    o.report = generic_rank_oracle(ideal, options.trials, options.prime, options.seed);
    o.agrees = o.report.generic_rank == r.stats.max_orbit_dim && o.report.index_estimate == r.stats.index;
    r.oracle = o;
  }
  if (options.conjecture) {
    r.selected.push_back("conjecture");
    const BracketTable table(ideal);
    const auto candidates = all_candidates(d);
    std::vector<CandidateReport> out;
    std::vector<SparsePoly> polys;
    auto record = [&](std::string kind, std::optional<Root> xi, std::optional<Root> witness, std::string poly) {
      r.counterexamples.push_back({std::move(kind), r.ideal, xi, witness, std::move(poly), options.seed});
    };
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const auto& c = candidates[i];
      CandidateReport cr;
      cr.xi = c.xi;
      cr.case_tag = c.case_tag;
      cr.I = c.I;
      cr.J = c.J;
      cr.lambda_degree = c.lambda_degree;
      cr.poly = to_string(c.p);
      cr.anomaly = c.anomaly;
      if (c.anomaly) {
        record("anomaly", c.xi, std::nullopt, *c.anomaly);
        out.push_back(std::move(cr));
        continue;
      }
      polys.push_back(c.p);
      const auto inv = is_invariant(c.p, table);
      cr.invariant = inv.invariant;
      if (!inv.invariant) {
        cr.witness = inv.witness;
        cr.witness_bracket = to_string(inv.bracket);
        record("not_invariant", c.xi, inv.witness, cr.witness_bracket);
      }
      if (const auto red = reduce_by_earlier(candidates, i)) {
        ReducedReport rr;
        rr.divisors = red->divisors;
        rr.quotient = to_string(red->quotient);
        const auto qinv = is_invariant(red->quotient, table);
        rr.invariant = qinv.invariant;
        rr.note = kReducedNote;
        if (!qinv.invariant) record("reduced_not_invariant", c.xi, qinv.witness, to_string(qinv.bracket));
        cr.reduced = std::move(rr);
      }
      out.push_back(std::move(cr));
    }
    r.candidates = std::move(out);
    r.jacobian_rank = jacobian_rank(polys, options.trials, options.prime, options.seed);
    if (*r.jacobian_rank != r.stats.index)
      record("jacobian_rank", std::nullopt, std::nullopt,
             "rank " + std::to_string(*r.jacobian_rank) + " < index " + std::to_string(r.stats.index));
  }
  return r;
}

int exit_code(const RunReport& report) {
  if (report.theorem_checks && !all_passed(*report.theorem_checks)) return kExitCheckFailed;
  if (report.oracle && !report.oracle->agrees) return kExitCheckFailed;
  if (!report.counterexamples.empty()) return kExitCounterexample;
  return kExitOk;
}

std::string ideal_key(int n, const std::vector<int>& thresholds) {
  std::string key = "n=" + std::to_string(n) + ";c=";
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (i) key += ',';
    key += std::to_string(thresholds[i]);
  }
  return key;
}

std::vector<Root> parse_root_list(const std::string& text) {
  std::vector<Root> out;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ';');) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    Root r;
    char comma = 0;
    std::istringstream is(item);
    if (!(is >> r.row >> comma >> r.col) || comma != ',' || !(is >> std::ws).eof())
      throw InputError("malformed root \"" + item + "\"; expected row,col");
    out.push_back(r);
  }
  return out;
}

// ------------------------------------------------------------------ JSON

void to_json(json& j, const Root& r) { j = json::array({r.row, r.col}); }

void from_json(const json& j, Root& r) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw InputError("root must be a [row, col] pair");
  r = {j[0].get<int>(), j[1].get<int>()};
}

namespace {

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <class T>
void get_optional(const json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key) && !j.at(key).is_null())
    v = j.at(key).get<T>();
  else
    v.reset();
}

}  // namespace

void to_json(json& j, const StepRecord& s) {
  j = {{"index", s.index}, {"cross", s.cross}, {"plus", s.plus}, {"minus", s.minus}, {"remaining", s.remaining}};
}
void from_json(const json& j, StepRecord& s) {
  j.at("index").get_to(s.index);
  j.at("cross").get_to(s.cross);
  j.at("plus").get_to(s.plus);
  j.at("minus").get_to(s.minus);
  j.at("remaining").get_to(s.remaining);
}

void to_json(json& j, const DiagramStats& s) {
  j = {{"index", s.index}, {"dim", s.dim}, {"max_orbit_dim", s.max_orbit_dim}};
}
void from_json(const json& j, DiagramStats& s) {
  j.at("index").get_to(s.index);
  j.at("dim").get_to(s.dim);
  j.at("max_orbit_dim").get_to(s.max_orbit_dim);
}

void to_json(json& j, const CheckResult& c) { j = {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}}; }
void from_json(const json& j, CheckResult& c) {
  j.at("name").get_to(c.name);
  j.at("passed").get_to(c.passed);
  j.at("detail").get_to(c.detail);
}

void to_json(json& j, const OracleSection& o) {
  j = {{"rank", o.report.generic_rank}, {"index_estimate", o.report.index_estimate},
       {"dim", o.report.dim},           {"trials", o.report.trials},
       {"prime", o.report.prime},       {"seed", o.report.seed},
       {"agrees", o.agrees}};
}
void from_json(const json& j, OracleSection& o) {
  j.at("rank").get_to(o.report.generic_rank);
  j.at("index_estimate").get_to(o.report.index_estimate);
  j.at("dim").get_to(o.report.dim);
  j.at("trials").get_to(o.report.trials);
  j.at("prime").get_to(o.report.prime);
  j.at("seed").get_to(o.report.seed);
  j.at("agrees").get_to(o.agrees);
}

void to_json(json& j, const ReducedReport& r) {
  j = {{"divisors", r.divisors}, {"quotient", r.quotient}, {"invariant", r.invariant}, {"note", r.note}};
}
void from_json(const json& j, ReducedReport& r) {
  j.at("divisors").get_to(r.divisors);
  j.at("quotient").get_to(r.quotient);
  j.at("invariant").get_to(r.invariant);
  j.at("note").get_to(r.note);
}

void to_json(json& j, const CandidateReport& c) {
  j = {{"xi", c.xi},       {"case", c.case_tag}, {"I", c.I}, {"J", c.J}, {"lambda_degree", c.lambda_degree},
       {"poly", c.poly},   {"invariant", c.invariant}};
  put_optional(j, "witness", c.witness);
  if (c.witness) j["witness_bracket"] = c.witness_bracket;
  put_optional(j, "anomaly", c.anomaly);
  put_optional(j, "reduced", c.reduced);
}
void from_json(const json& j, CandidateReport& c) {
  j.at("xi").get_to(c.xi);
  j.at("case").get_to(c.case_tag);
  j.at("I").get_to(c.I);
  j.at("J").get_to(c.J);
  j.at("lambda_degree").get_to(c.lambda_degree);
  j.at("poly").get_to(c.poly);
  j.at("invariant").get_to(c.invariant);
  get_optional(j, "witness", c.witness);
  c.witness_bracket = j.value("witness_bracket", std::string{});
  get_optional(j, "anomaly", c.anomaly);
  get_optional(j, "reduced", c.reduced);
}

void to_json(json& j, const Counterexample& c) {
  j = {{"kind", c.kind},
       {"ideal", c.ideal},
       {"xi", c.xi ? json(*c.xi) : json(nullptr)},
       {"witness_root", c.witness_root ? json(*c.witness_root) : json(nullptr)},
       {"bracket_poly_string", c.bracket_poly_string},
       {"seed", c.seed}};
}
void from_json(const json& j, Counterexample& c) {
  j.at("kind").get_to(c.kind);
  j.at("ideal").get_to(c.ideal);
  get_optional(j, "xi", c.xi);
  get_optional(j, "witness_root", c.witness_root);
  j.at("bracket_poly_string").get_to(c.bracket_poly_string);
  j.at("seed").get_to(c.seed);
}

void to_json(json& j, const RunReport& r) {
  j = json::object();
  j["schema"] = r.schema;
  j["key"] = ideal_key(r.n, r.thresholds);
  j["input"] = {{"n", r.n}, {"ideal", r.ideal}, {"thresholds", r.thresholds}};
  j["diagram"] = {{"rows", r.diagram}, {"steps", r.steps}};
  j["stats"] = r.stats;
  j["permutation"] = {{"one_line", r.w}, {"inversions", r.inversions}, {"reflection_word", r.reflection_word}};
  j["selected"] = r.selected;
  put_optional(j, "theorem_checks", r.theorem_checks);
  put_optional(j, "oracle", r.oracle);
  put_optional(j, "candidates", r.candidates);
  put_optional(j, "jacobian_rank", r.jacobian_rank);
  j["counterexamples"] = r.counterexamples;
}

void from_json(const json& j, RunReport& r) {
  j.at("schema").get_to(r.schema);
  if (r.schema != kSchemaVersion) throw InputError("unsupported report schema " + r.schema);
  const auto& in = j.at("input");
  in.at("n").get_to(r.n);
  in.at("ideal").get_to(r.ideal);
  in.at("thresholds").get_to(r.thresholds);
  j.at("diagram").at("rows").get_to(r.diagram);
  j.at("diagram").at("steps").get_to(r.steps);
  j.at("stats").get_to(r.stats);
  const auto& perm = j.at("permutation");
  perm.at("one_line").get_to(r.w);
  perm.at("inversions").get_to(r.inversions);
  perm.at("reflection_word").get_to(r.reflection_word);
  j.at("selected").get_to(r.selected);
  get_optional(j, "theorem_checks", r.theorem_checks);
  get_optional(j, "oracle", r.oracle);
  get_optional(j, "candidates", r.candidates);
  get_optional(j, "jacobian_rank", r.jacobian_rank);
  j.at("counterexamples").get_to(r.counterexamples);
}

IdealInput parse_ideal_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON input: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
    throw InputError("input must be an object with an integer \"n\"");
  IdealInput out;
  out.n = j.at("n").get<int>();
  if (j.contains("ideal")) {
    if (!j.at("ideal").is_array()) throw InputError("\"ideal\" must be an array of [row, col] pairs");
    out.roots = j.at("ideal").get<std::vector<Root>>();
  }
  return out;
}

RegularIdeal make_ideal(const IdealInput& input, bool allow_closure) {
  if (allow_closure) return closure(input.roots, input.n);
  return RegularIdeal::from_roots(input.n, input.roots);
}

}  // namespace coadj
