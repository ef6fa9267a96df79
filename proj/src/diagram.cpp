#include "coadj/diagram.hpp"

#include <algorithm>

namespace coadj {

char ascii_glyph(Symbol s) noexcept {
  switch (s) {
    case Symbol::Cross: return 'x';
    case Symbol::Plus: return '+';
    case Symbol::Minus: return '-';
    case Symbol::Bullet: return '*';
    case Symbol::Empty: break;
  }
  return '.';
}

const char* unicode_glyph(Symbol s) noexcept {
  switch (s) {
    case Symbol::Cross: return "⊗";
    case Symbol::Plus: return "+";
    case Symbol::Minus: return "-";
    case Symbol::Bullet: return "•";
    case Symbol::Empty: break;
  }
  return ".";
}

Diagram::Diagram(const RegularIdeal& ideal)
    : ideal_(ideal), grid_(static_cast<std::size_t>(ideal.n() * ideal.n()), Symbol::Empty) {
  const auto order = positive_roots(n());
  for (const auto& r : order)
    if (ideal_.contains(r)) grid_[cell(r)] = Symbol::Bullet;

  auto empty = [&](const Root& r) { return grid_[cell(r)] == Symbol::Empty; };

  // Crosses are placed in diagram order, so the scan for the next empty
  // root never needs to restart.
  auto next = order.begin();
  for (int index = 1;; ++index) {
    next = std::find_if(next, order.end(), empty);
    if (next == order.end()) break;

    StepRecord step;
    step.index = index;
    step.cross = *next;
    grid_[cell(step.cross)] = Symbol::Cross;
    const int k = step.cross.row;
    const int t = step.cross.col;
    for (int a = t + 1; a < k; ++a) {
      const Root upper{k, a};
      const Root lower{a, t};
      if (!empty(upper) || !empty(lower)) continue;
      grid_[cell(upper)] = Symbol::Minus;
      grid_[cell(lower)] = Symbol::Plus;
      step.minus.push_back(upper);
      step.plus.push_back(lower);
    }
    std::copy_if(order.begin(), order.end(), std::back_inserter(step.remaining), empty);
    steps_.push_back(std::move(step));
  }
}

Symbol Diagram::at(const Root& r) const {
  require_positive(r, n());
  return grid_[cell(r)];
}

std::vector<Root> Diagram::crosses() const {
  std::vector<Root> out;
  out.reserve(steps_.size());
  for (const auto& s : steps_) out.push_back(s.cross);
  return out;
}

std::vector<Root> Diagram::with_symbol(Symbol s) const {
  std::vector<Root> out;
  for (const auto& r : positive_roots(n()))
    if (grid_[cell(r)] == s) out.push_back(r);
  return out;
}

void Diagram::require_step(int step, int lo) const {
  if (step < lo || step > static_cast<int>(steps_.size()))
    throw InputError("step " + std::to_string(step) + " out of range [" + std::to_string(lo) + ", " +
                     std::to_string(steps_.size()) + "]");
}

std::vector<Root> Diagram::remaining_after(int step) const {
  require_step(step, 0);
  if (step == 0) return ideal_.live_roots();
  return steps_[static_cast<std::size_t>(step - 1)].remaining;
}

std::vector<Root> Diagram::d_set(int step, bool minus) const {
  require_step(step, 1);
  const Root xi = steps_[static_cast<std::size_t>(step - 1)].cross;
  std::vector<Root> out;
  for (int j = 0; j < step; ++j) {
    const auto& placed = minus ? steps_[static_cast<std::size_t>(j)].minus : steps_[static_cast<std::size_t>(j)].plus;
    for (const auto& r : placed)
      if (succeeds(xi, r)) out.push_back(r);
  }
  std::sort(out.begin(), out.end(), DiagramOrder{});
  return out;
}

std::vector<Root> Diagram::d_minus(int step) const { return d_set(step, true); }
std::vector<Root> Diagram::d_plus(int step) const { return d_set(step, false); }

DiagramStats Diagram::stats() const {
  DiagramStats s;
  s.index = static_cast<int>(steps_.size());
  for (const auto& step : steps_) s.max_orbit_dim += static_cast<int>(step.plus.size() + step.minus.size());
  s.dim = ideal_.dim();
  return s;
}

std::string Diagram::render(bool ascii) const {
  std::string out;
  for (int row = 1; row <= n(); ++row) {
    for (int col = 1; col <= n(); ++col) {
      if (col >= row) {
        out += ' ';
        continue;
      }
      const Symbol s = grid_[cell({row, col})];
      if (ascii)
        out += ascii_glyph(s);
      else
        out += unicode_glyph(s);
    }
    out += '\n';
  }
  return out;
}

}  // namespace coadj
