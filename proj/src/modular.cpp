#include "coadj/modular.hpp"

#include <stdexcept>
#include <utility>

namespace coadj {

Residue pow_mod(Residue base, std::uint64_t exp, Residue p) noexcept {
  Residue result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

Residue inv_mod(Residue a, Residue p) noexcept { return pow_mod(a, p - 2, p); }

Residue reduce_mod(const boost::multiprecision::cpp_int& v, Residue p) {
  boost::multiprecision::cpp_int r = v % p;
  if (r < 0) r += p;
  return r.convert_to<Residue>();
}

namespace {

// Forward elimination in place; returns the rank and the sign of the row swaps.
std::pair<std::size_t, bool> eliminate(ModMatrix& m, Residue p) {
  std::size_t rank = 0;
  bool odd_swaps = false;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank, c));
      odd_swaps = !odd_swaps;
    }
    const Residue inv = inv_mod(m(rank, col), p);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      const Residue f = mul_mod(m(r, col), inv, p);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = sub_mod(m(r, c), mul_mod(f, m(rank, c), p), p);
    }
    ++rank;
  }
  return {rank, odd_swaps};
}

}  // namespace

std::size_t rank_mod_p(ModMatrix m, Residue p) { return eliminate(m, p).first; }

Residue determinant_mod_p(ModMatrix m, Residue p) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const auto [rank, odd_swaps] = eliminate(m, p);
  if (rank < m.rows()) return 0;
  Residue det = 1 % p;
  for (std::size_t i = 0; i < m.rows(); ++i) det = mul_mod(det, m(i, i), p);
  return odd_swaps ? sub_mod(0, det, p) : det;
}

}  // namespace coadj
