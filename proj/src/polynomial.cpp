#include "coadj/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

namespace coadj {

std::string to_string(const Variable& v) {
  if (v.is_lambda) return "lambda";
  if (v.root.row < 10 && v.root.col < 10 && v.root.row > 0 && v.root.col > 0)
    return "y" + std::to_string(v.root.row) + std::to_string(v.root.col);
  return "y_" + std::to_string(v.root.row) + "_" + std::to_string(v.root.col);
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(const Variable& v, int exp) {
  if (exp > 0) factors_.emplace_back(v, exp);
}

int Monomial::degree(const Variable& v) const noexcept {
  for (const auto& [var, e] : factors_)
    if (var == v) return e;
  return 0;
}

int Monomial::total_degree() const noexcept {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::without(const Variable& v) const { return with_exponent(v, 0); }

Monomial Monomial::with_exponent(const Variable& v, int exp) const {
  Monomial out;
  bool placed = exp <= 0;
  for (const auto& f : factors_) {
    if (f.first == v) continue;
    if (!placed && v > f.first) {
      out.factors_.emplace_back(v, exp);
      placed = true;
    }
    out.factors_.push_back(f);
  }
  if (!placed) out.factors_.emplace_back(v, exp);
  return out;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (const auto& [v, e] : factors_)
    if (other.degree(v) < e) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out;
  for (const auto& [v, e] : other.factors_) {
    const int rest = e - degree(v);
    if (rest > 0) out.factors_.emplace_back(v, rest);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first == j->first) {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    } else if (i->first > j->first) {
      out.factors_.push_back(*i++);
    } else {
      out.factors_.push_back(*j++);
    }
  }
  out.factors_.insert(out.factors_.end(), i, a.factors_.end());
  out.factors_.insert(out.factors_.end(), j, b.factors_.end());
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  const std::size_t n = std::min(a.factors_.size(), b.factors_.size());
  for (std::size_t k = 0; k < n; ++k) {
    const auto& [va, ea] = a.factors_[k];
    const auto& [vb, eb] = b.factors_[k];
    // The side holding the larger variable has it with positive exponent, the
    // other side with exponent zero.
    if (auto c = va <=> vb; c != 0) return c;
    if (auto c = ea <=> eb; c != 0) return c;
  }
  return a.factors_.size() <=> b.factors_.size();
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += to_string(v);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

// -------------------------------------------------------------- SparsePoly

SparsePoly::SparsePoly(long c) : SparsePoly(Integer(c)) {}

SparsePoly::SparsePoly(const Integer& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

SparsePoly::SparsePoly(const Monomial& m, Integer c) {
  if (c != 0) terms_.emplace(m, std::move(c));
}

const Integer& SparsePoly::coefficient(const Monomial& m) const {
  static const Integer zero = 0;
  const auto it = terms_.find(m);
  return it == terms_.end() ? zero : it->second;
}

std::set<Variable> SparsePoly::variables() const {
  std::set<Variable> out;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) out.insert(f.first);
  return out;
}

bool SparsePoly::contains(const Variable& v) const { return degree(v) > 0; }

int SparsePoly::degree(const Variable& v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(v));
  return d;
}

void SparsePoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly& SparsePoly::add_scaled(const SparsePoly& o, const Integer& c, const Monomial& m) {
  if (c == 0) return *this;
  for (const auto& [om, oc] : o.terms_) add_term(m.is_one() ? om : m * om, c * oc);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out;
  for (const auto& [m, c] : a.terms_) out.add_scaled(b, c, m);
  return out;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) { return *this = *this * o; }

SparsePoly operator-(const SparsePoly& a) {
  SparsePoly out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string to_string(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (m.is_one()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += to_string(m);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  SparsePoly parse() {
    SparsePoly out;
    skip();
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = get() == '-';
    for (;;) {
      SparsePoly term = parse_term();
      if (negative)
        out -= term;
      else
        out += term;
      skip();
      if (pos_ == s_.size()) break;
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
    }
    return out;
  }

 private:
  SparsePoly parse_term() {
    Integer coeff = 1;
    Monomial mono;
    bool any = false;
    for (;;) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= Integer(digits());
      } else if (peek() == 'l' || peek() == 'y') {
        const Variable v = parse_variable();
        int exp = 1;
        skip();
        if (peek() == '^') {
          get();
          skip();
          exp = std::stoi(digits());
        }
        mono = mono * Monomial(v, exp);
      } else {
        fail("expected a coefficient or variable");
      }
      any = true;
      skip();
      if (peek() != '*') break;
      get();
    }
    if (!any) fail("empty term");
    return SparsePoly(mono, coeff);
  }

  Variable parse_variable() {
    if (s_.substr(pos_, 6) == "lambda") {
      pos_ += 6;
      return Variable::lambda();
    }
    get();  // 'y'
    if (peek() == '_') {
      get();
      const int row = std::stoi(digits());
      if (get() != '_') fail("expected '_' in variable name");
      const int col = std::stoi(digits());
      return Variable::y(row, col);
    }
    const std::string d = digits();
    if (d.size() != 2) fail("short variable names take exactly two digits");
    return Variable::y(d[0] - '0', d[1] - '0');
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

SparsePoly partial_derivative(const SparsePoly& p, const Variable& v) {
  SparsePoly out;
  for (const auto& [m, c] : p.terms()) {
    const int e = m.degree(v);
    if (e == 0) continue;
    out += SparsePoly(m.with_exponent(v, e - 1), c * e);
  }
  return out;
}

std::vector<SparsePoly> lambda_coefficients(const SparsePoly& p) {
  const Variable lam = Variable::lambda();
  std::vector<SparsePoly> out(static_cast<std::size_t>(p.is_zero() ? 0 : p.degree(lam) + 1));
  for (const auto& [m, c] : p.terms()) out[static_cast<std::size_t>(m.degree(lam))] += SparsePoly(m.without(lam), c);
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

std::optional<SparsePoly> divide_exact(const SparsePoly& p, const SparsePoly& d) {
  if (d.is_zero()) throw InputError("division by the zero polynomial");
  const auto& [lead_m, lead_c] = *d.terms().begin();
  SparsePoly quotient;
  SparsePoly rest = p;
  while (!rest.is_zero()) {
    const auto& [m, c] = *rest.terms().begin();
    if (!lead_m.divides(m) || c % lead_c != 0) return std::nullopt;
    const SparsePoly step(lead_m.quotient_of(m), c / lead_c);
    quotient += step;
    rest -= step * d;
  }
  return quotient;
}

Residue evaluate_mod_p(const SparsePoly& p, const Assignment& at, Residue prime) {
  Residue total = 0;
  for (const auto& [m, c] : p.terms()) {
    Residue term = reduce_mod(c, prime);
    for (const auto& [v, e] : m.factors()) {
      const auto it = at.find(v);
      if (it == at.end()) throw InputError("no value assigned to " + to_string(v));
      term = mul_mod(term, pow_mod(it->second % prime, static_cast<std::uint64_t>(e), prime), prime);
    }
    total = add_mod(total, term, prime);
  }
  return total;
}

// ---------------------------------------------------------- SymbolicMatrix

const SparsePoly& SymbolicMatrix::at(std::size_t r, std::size_t c) const {
  static const SparsePoly zero;
  if (r >= rows_ || c >= cols_) throw InputError("matrix index out of range");
  const auto it = entries_.find({r, c});
  return it == entries_.end() ? zero : it->second;
}

void SymbolicMatrix::set(std::size_t r, std::size_t c, SparsePoly p) {
  if (r >= rows_ || c >= cols_) throw InputError("matrix index out of range");
  if (p.is_zero())
    entries_.erase({r, c});
  else
    entries_[{r, c}] = std::move(p);
}

SymbolicMatrix SymbolicMatrix::submatrix(const std::vector<std::size_t>& rows,
                                         const std::vector<std::size_t>& cols) const {
  SymbolicMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.set(i, j, at(rows[i], cols[j]));
  return out;
}

ModMatrix SymbolicMatrix::evaluate_mod_p(const Assignment& at, Residue prime) const {
  ModMatrix out(rows_, cols_);
  for (const auto& [rc, p] : entries_) out(rc.first, rc.second) = coadj::evaluate_mod_p(p, at, prime);
  return out;
}

SparsePoly determinant(const SymbolicMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t k = m.rows();
  if (k > 24) throw InputError("determinant limited to 24 x 24");
  if (k == 0) return SparsePoly(1);

  using Mask = std::uint32_t;
  // memo[mask] = determinant of rows (k - popcount(mask))..k-1 over columns in mask.
  std::vector<std::optional<SparsePoly>> memo(std::size_t{1} << k);
  memo[0] = SparsePoly(1);

  auto solve = [&](auto&& self, Mask mask) -> const SparsePoly& {
    auto& slot = memo[mask];
    if (slot) return *slot;
    const std::size_t row = k - static_cast<std::size_t>(std::popcount(mask));
    SparsePoly acc;
    int position = 0;
    for (std::size_t col = 0; col < k; ++col) {
      const Mask bit = Mask{1} << col;
      if (!(mask & bit)) continue;
      const SparsePoly& entry = m.at(row, col);
      if (!entry.is_zero()) {
        const SparsePoly& minor = self(self, mask ^ bit);
        if (!minor.is_zero()) {
          const SparsePoly product = entry * minor;
          if (position % 2 == 0)
            acc += product;
          else
            acc -= product;
        }
      }
      ++position;
    }
    slot = std::move(acc);
    return *slot;
  };
  return solve(solve, static_cast<Mask>((std::size_t{1} << k) - 1));
}

}  // namespace coadj
