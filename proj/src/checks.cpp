#include "coadj/checks.hpp"

#include <algorithm>
#include <set>

#include "coadj/invariants.hpp"
#include "coadj/permutation.hpp"

namespace coadj {

namespace {

CheckResult pass(std::string name) { return {std::move(name), true, {}}; }
CheckResult fail(std::string name, std::string detail) { return {std::move(name), false, std::move(detail)}; }

// First missing sum inside the set, if any.
std::optional<ClosureViolation> first_open_sum(const std::vector<Root>& roots) {
  const std::set<Root> members(roots.begin(), roots.end());
  for (const auto& a : roots)
    for (const auto& b : roots)
      if (const auto s = root_sum(a, b); s && !members.count(*s)) return ClosureViolation{a, b, *s};
  return std::nullopt;
}

std::string describe(const ClosureViolation& v) {
  return to_string(v.lhs) + "+" + to_string(v.rhs) + "=" + to_string(v.sum) + " missing";
}

}  // namespace

CheckResult check_diagram_structure(const Diagram& d) {
  const std::string name = "diagram_structure";
  const auto& ideal = d.ideal();
  std::size_t plus = 0, minus = 0, cross = 0;
  for (const auto& r : positive_roots(d.n())) {
    const Symbol s = d.at(r);
    if (s == Symbol::Empty) return fail(name, to_string(r) + " left empty");
    if ((s == Symbol::Bullet) != ideal.contains(r)) return fail(name, to_string(r) + " bullet/ideal mismatch");
    plus += s == Symbol::Plus;
    minus += s == Symbol::Minus;
    cross += s == Symbol::Cross;
  }
  if (plus != minus) return fail(name, "unequal numbers of + and -");
  if (cross != d.steps().size()) return fail(name, "cross count differs from step count");
  if (plus + minus + cross != static_cast<std::size_t>(ideal.dim())) return fail(name, "symbols do not cover the live roots");

  std::vector<Root> before = ideal.live_roots();
  for (std::size_t i = 0; i < d.steps().size(); ++i) {
    const auto& step = d.steps()[i];
    if (i > 0 && !succeeds(d.steps()[i - 1].cross, step.cross))
      return fail(name, "crosses not decreasing at step " + std::to_string(step.index));
    if (step.plus.size() != step.minus.size()) return fail(name, "unpaired symbols at step " + std::to_string(step.index));
    const int k = step.cross.row, t = step.cross.col;
    for (std::size_t p = 0; p < step.plus.size(); ++p) {
      const int a = step.plus[p].row;
      if (step.plus[p] != Root{a, t} || step.minus[p] != Root{k, a} || a <= t || a >= k)
        return fail(name, "mismatched pair at step " + std::to_string(step.index));
    }
    std::set<Root> placed(step.plus.begin(), step.plus.end());
    placed.insert(step.minus.begin(), step.minus.end());
    placed.insert(step.cross);
    std::vector<Root> expect;
    for (const auto& r : before)
      if (!placed.count(r)) expect.push_back(r);
    if (expect != step.remaining) return fail(name, "remaining set inconsistent at step " + std::to_string(step.index));
    before = step.remaining;
  }
  if (!before.empty()) return fail(name, "roots remain after the last step");
  return pass(name);
}

CheckResult check_step_subalgebras(const Diagram& d) {
  const std::string name = "step_subalgebras";
  const auto members = d.ideal().roots();
  for (int i = 0; i <= static_cast<int>(d.steps().size()); ++i) {
    auto a = d.remaining_after(i);
    a.insert(a.end(), members.begin(), members.end());
    if (const auto v = first_open_sum(a)) return fail(name, "step " + std::to_string(i) + ": " + describe(*v));
  }
  return pass(name);
}

CheckResult check_minus_subalgebras(const Diagram& d) {
  const std::string name = "minus_subalgebras";
  for (int i = 1; i <= static_cast<int>(d.steps().size()); ++i)
    if (const auto v = first_open_sum(d.d_minus(i))) return fail(name, "step " + std::to_string(i) + ": " + describe(*v));
  return pass(name);
}

CheckResult check_minus_subalgebras_below_cross(const Diagram& d) {
  const std::string name = "minus_subalgebras_below_cross";
  for (int i = 1; i <= static_cast<int>(d.steps().size()); ++i) {
    const Root xi = d.steps()[static_cast<std::size_t>(i - 1)].cross;
    const auto dm = d.d_minus(i);
    const std::set<Root> members(dm.begin(), dm.end());
    for (const auto& a : dm)
      for (const auto& b : dm)
        if (const auto s = root_sum(a, b); s && succeeds(xi, *s) && !members.count(*s))
          return fail(name, "step " + std::to_string(i) + ": " + describe({a, b, *s}));
  }
  return pass(name);
}

CheckResult check_length_equals_dim(const Diagram& d) {
  const std::string name = "length_equals_dim";
  const long len = inversions(build_w(d.ideal()));
  if (len != d.ideal().dim())
    return fail(name, "inversions " + std::to_string(len) + " != dim " + std::to_string(d.ideal().dim()));
  return pass(name);
}

CheckResult check_reflection_factorization(const Diagram& d) {
  const std::string name = "reflection_factorization";
  const auto crosses = d.crosses();
  const auto partial = partial_products(d.n(), crosses);
  if (partial.back() != build_w(d.ideal())) return fail(name, "product of reflections differs from w");
  for (int t = 0; t <= d.n(); ++t) {
    const auto upto = std::count_if(crosses.begin(), crosses.end(), [t](const Root& r) { return r.col <= t; });
    if (column_prefix_product(d, t) != partial[static_cast<std::size_t>(upto)])
      return fail(name, "w^[" + std::to_string(t) + "] differs from the matching partial product");
  }
  return pass(name);
}

CheckResult check_step_signs(const Diagram& d) {
  const std::string name = "step_signs";
  const auto partial = partial_products(d.n(), d.crosses());
  const auto live = d.ideal().live_roots();
  for (int i = 1; i <= static_cast<int>(d.steps().size()); ++i) {
    const Root xi = d.steps()[static_cast<std::size_t>(i - 1)].cross;
    const auto b = d.remaining_after(i);
    const auto dm = d.d_minus(i);
    const auto dp = d.d_plus(i);
    const std::string at = "step " + std::to_string(i) + ", ";

    std::vector<Root> below;
    std::copy_if(live.begin(), live.end(), std::back_inserter(below), [&](const Root& r) { return succeeds(xi, r); });
    std::vector<Root> parts = b;
    parts.insert(parts.end(), dm.begin(), dm.end());
    parts.insert(parts.end(), dp.begin(), dp.end());
    std::sort(parts.begin(), parts.end(), DiagramOrder{});
    if (parts != below) return fail(name, at + "B, D-, D+ do not partition the live roots below the cross");

    for (const auto& eta : b)
      for (int j = 0; j <= i; ++j)
        if (root_sign(partial[static_cast<std::size_t>(j)], eta) != Sign::Positive)
          return fail(name, at + to_string(eta) + " empty but negative under w_" + std::to_string(j));
    for (const auto* set : {&dm, &dp})
      for (const auto& eta : *set)
        if (root_sign(partial[static_cast<std::size_t>(i)], eta) != Sign::Negative)
          return fail(name, at + to_string(eta) + " filled but positive under w_" + std::to_string(i));
  }
  return pass(name);
}

CheckResult check_column_signs(const Diagram& d) {
  const std::string name = "column_signs";
  const auto& ideal = d.ideal();
  for (int t = 1; t < d.n(); ++t) {
    int last_live = t;
    for (int c = d.n(); c > t; --c)
      if (!ideal.contains({c, t})) {
        last_live = c;
        break;
      }
    const Permutation w = column_prefix_product(d, t);
    for (int b = t + 1; b <= d.n(); ++b) {
      const Sign want = b > last_live ? Sign::Positive : Sign::Negative;
      if (root_sign(w, {b, t}) != want)
        return fail(name, "column " + std::to_string(t) + ": wrong sign at " + to_string(Root{b, t}));
    }
  }
  return pass(name);
}

CheckResult check_sign_classification(const Diagram& d) {
  const std::string name = "sign_classification";
  for (const auto& eta : positive_roots(d.n())) {
    const SignClass got = classify_by_signs(d, eta);
    if (got == SignClass::Inconsistent) return fail(name, to_string(eta) + " satisfies two sign criteria");
    if (got != symbol_class(d.at(eta))) return fail(name, to_string(eta) + " misclassified");
  }
  return pass(name);
}

CheckResult check_index_sets(const Diagram& d) {
  const std::string name = "index_sets";
  for (const auto& xi : d.crosses()) {
    const auto sets = index_sets(d, xi);
    if (sets.I.size() != sets.J.size()) return fail(name, to_string(xi) + ": |I| != |J|");
    if (sets.case_tag == 1 && sets.w_xi(xi.col) != xi.row)
      return fail(name, to_string(xi) + ": case 1 with w_xi(t) != k");
  }
  return pass(name);
}

CheckResult check_orbit_parity(const Diagram& d) {
  const auto s = d.stats();
  if ((s.dim - s.index) % 2 != 0) return fail("orbit_parity", "dim - index is odd");
  return pass("orbit_parity");
}

std::vector<CheckResult> theorem_checks(const Diagram& d) {
  return {check_diagram_structure(d),
          check_step_subalgebras(d),
          check_minus_subalgebras(d),
          check_minus_subalgebras_below_cross(d),
          check_length_equals_dim(d),
          check_reflection_factorization(d),
          check_step_signs(d),
          check_column_signs(d),
          check_sign_classification(d),
          check_index_sets(d),
          check_orbit_parity(d)};
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

}  // namespace coadj
