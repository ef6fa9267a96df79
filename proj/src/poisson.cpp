#include "coadj/poisson.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace coadj {

namespace {

void require_live(const Root& r, const RegularIdeal& ideal) {
  require_positive(r, ideal.n());
  if (ideal.contains(r)) throw InputError("root " + to_string(r) + " lies in the ideal");
}

std::mt19937_64 trial_rng(std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

}  // namespace

std::optional<SignedRoot> bracket_basis(const Root& a, const Root& b, const RegularIdeal& ideal) {
  require_live(a, ideal);
  require_live(b, ideal);
  std::optional<SignedRoot> out;
  if (a.col == b.row)
    out = SignedRoot{1, {a.row, b.col}};
  else if (b.col == a.row)
    out = SignedRoot{-1, {b.row, a.col}};
  if (out && ideal.contains(out->root)) out.reset();
  return out;
}

BracketTable::BracketTable(const RegularIdeal& ideal)
    : ideal_(ideal), live_(ideal.live_roots()), position_(static_cast<std::size_t>(ideal.n() * ideal.n()), -1) {
  const int n = ideal.n();
  for (std::size_t i = 0; i < live_.size(); ++i)
    position_[static_cast<std::size_t>((live_[i].row - 1) * n + live_[i].col - 1)] = static_cast<int>(i);
  table_.resize(live_.size() * live_.size());
  for (std::size_t a = 0; a < live_.size(); ++a)
    for (std::size_t b = 0; b < live_.size(); ++b)
      if (const auto r = bracket_basis(live_[a], live_[b], ideal_))
        table_[a * live_.size() + b] = {r->sign, index_of(r->root)};
}

std::size_t BracketTable::index_of(const Root& r) const {
  require_live(r, ideal_);
  return static_cast<std::size_t>(position_[static_cast<std::size_t>((r.row - 1) * ideal_.n() + r.col - 1)]);
}

namespace {

// Partial derivatives of p keyed by live-root position.
std::map<std::size_t, SparsePoly> gradient(const SparsePoly& p, const BracketTable& table) {
  std::map<std::size_t, SparsePoly> out;
  for (const auto& v : p.variables()) {
    if (v.is_lambda) throw InputError("Poisson bracket of a polynomial involving lambda");
    out.emplace(table.index_of(v.root), partial_derivative(p, v));
  }
  return out;
}

SparsePoly bracket_with_gradients(const std::map<std::size_t, SparsePoly>& dp,
                                  const std::map<std::size_t, SparsePoly>& dq, const BracketTable& table) {
  SparsePoly out;
  for (const auto& [a, pa] : dp)
    for (const auto& [b, qb] : dq) {
      const auto& e = table.entry(a, b);
      if (e.sign == 0) continue;
      const Monomial target(Variable::y(table.live()[e.target]));
      out.add_scaled(pa * qb, e.sign, target);
    }
  return out;
}

}  // namespace

SparsePoly poisson_bracket(const SparsePoly& p, const SparsePoly& q, const BracketTable& table) {
  return bracket_with_gradients(gradient(p, table), gradient(q, table), table);
}

SparsePoly poisson_bracket(const SparsePoly& p, const SparsePoly& q, const RegularIdeal& ideal) {
  return poisson_bracket(p, q, BracketTable(ideal));
}

InvarianceResult is_invariant(const SparsePoly& p, const BracketTable& table) {
  const auto dp = gradient(p, table);
  for (std::size_t eta = 0; eta < table.dim(); ++eta) {
    const std::map<std::size_t, SparsePoly> dq{{eta, SparsePoly(1)}};
    SparsePoly b = bracket_with_gradients(dp, dq, table);
    if (!b.is_zero()) return {false, table.live()[eta], std::move(b)};
  }
  return {};
}

InvarianceResult is_invariant(const SparsePoly& p, const RegularIdeal& ideal) {
  return is_invariant(p, BracketTable(ideal));
}

OracleReport generic_rank_oracle(const RegularIdeal& ideal, int trials, Residue prime, std::uint64_t seed) {
  if (prime <= (Residue{1} << 40) || prime >= (Residue{1} << 62))
    throw InputError("oracle prime must lie in (2^40, 2^62)");
  if (trials < 1) throw InputError("oracle needs at least one trial");

  const BracketTable table(ideal);
  const std::size_t dim = table.dim();
  OracleReport report;
  report.dim = static_cast<int>(dim);
  report.trials = trials;
  report.prime = prime;
  report.seed = seed;

  std::uniform_int_distribution<Residue> draw(0, prime - 1);
  for (int trial = 0; trial < trials; ++trial) {
    auto rng = trial_rng(seed, trial);
    std::vector<Residue> point(dim);
    for (auto& v : point) v = draw(rng);
    ModMatrix b(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        const auto& e = table.entry(i, j);
        if (e.sign > 0)
          b(i, j) = point[e.target];
        else if (e.sign < 0)
          b(i, j) = sub_mod(0, point[e.target], prime);
      }
    report.generic_rank = std::max(report.generic_rank, static_cast<int>(rank_mod_p(std::move(b), prime)));
  }
  report.index_estimate = report.dim - report.generic_rank;
  return report;
}

int jacobian_rank(const std::vector<SparsePoly>& polys, int trials, Residue prime, std::uint64_t seed) {
  if (trials < 1) throw InputError("jacobian rank needs at least one trial");
  std::set<Variable> vars;
  for (const auto& p : polys) {
    const auto vs = p.variables();
    vars.insert(vs.begin(), vs.end());
  }
  if (vars.count(Variable::lambda())) throw InputError("jacobian of a polynomial involving lambda");
  if (polys.empty() || vars.empty()) return 0;

  std::vector<Variable> columns(vars.begin(), vars.end());
  std::vector<std::vector<SparsePoly>> partials(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (const auto& v : columns) partials[i].push_back(partial_derivative(polys[i], v));

  std::uniform_int_distribution<Residue> draw(0, prime - 1);
  int best = 0;
  for (int trial = 0; trial < trials; ++trial) {
    auto rng = trial_rng(seed, trial);
    Assignment at;
    for (const auto& v : columns) at[v] = draw(rng);
    ModMatrix jac(polys.size(), columns.size());
    for (std::size_t i = 0; i < polys.size(); ++i)
      for (std::size_t j = 0; j < columns.size(); ++j) jac(i, j) = evaluate_mod_p(partials[i][j], at, prime);
    best = std::max(best, static_cast<int>(rank_mod_p(std::move(jac), prime)));
  }
  return best;
}

}  // namespace coadj
