#pragma once

#include <string>
#include <vector>

#include "coadj/ideal.hpp"

namespace coadj {

enum class Symbol { Empty, Cross, Plus, Minus, Bullet };

char ascii_glyph(Symbol s) noexcept;
/// UTF-8 glyph: "⊗", "+", "-", "•", or "." for Empty.
const char* unicode_glyph(Symbol s) noexcept;

/// What one step of the filling procedure did.
struct StepRecord {
  int index = 0;  // 1-based
  Root cross;
  std::vector<Root> plus;       // C_i^+, in placement order
  std::vector<Root> minus;      // C_i^-, in placement order
  std::vector<Root> remaining;  // still empty after this step, greatest-first

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

struct DiagramStats {
  int index = 0;
  int dim = 0;
  int max_orbit_dim = 0;

  friend bool operator==(const DiagramStats&, const DiagramStats&) = default;
};

/// The symbol diagram of the factor algebra n/m for a regular ideal m.
///
/// Step 0 marks the ideal with bullets. Each later step puts a cross on the
/// greatest empty root (k,t) and, scanning t < a < k upward, a "-" at (k,a) and
/// a "+" at (a,t) whenever both cells are still empty. Filling stops when no
/// empty positive root remains.
class Diagram {
 public:
  explicit Diagram(const RegularIdeal& ideal);

  int n() const noexcept { return ideal_.n(); }
  const RegularIdeal& ideal() const noexcept { return ideal_; }
  const std::vector<StepRecord>& steps() const noexcept { return steps_; }

  Symbol at(const Root& r) const;

  /// The crosses xi_1 > xi_2 > ... > xi_s.
  std::vector<Root> crosses() const;
  std::vector<Root> with_symbol(Symbol s) const;

  /// Roots still empty after step i (i = 0 gives every live root).
  std::vector<Root> remaining_after(int step) const;

  /// Roots below xi_i (diagram order) carrying "-" (resp. "+") once step i is done.
  std::vector<Root> d_minus(int step) const;
  std::vector<Root> d_plus(int step) const;

  DiagramStats stats() const;

  /// n lines, row 1 first; cells on or above the diagonal are spaces.
  std::string render(bool ascii = true) const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.ideal_ == b.ideal_ && a.grid_ == b.grid_ && a.steps_ == b.steps_;
  }

 private:
  std::size_t cell(const Root& r) const noexcept {
    return static_cast<std::size_t>((r.row - 1) * n() + (r.col - 1));
  }
  void require_step(int step, int lo) const;
  std::vector<Root> d_set(int step, bool minus) const;

  RegularIdeal ideal_;
  std::vector<Symbol> grid_;
  std::vector<StepRecord> steps_;
};

inline Diagram build_diagram(const RegularIdeal& ideal) { return Diagram(ideal); }
inline DiagramStats stats(const Diagram& d) { return d.stats(); }

}  // namespace coadj
