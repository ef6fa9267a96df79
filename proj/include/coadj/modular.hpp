#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace coadj {

using Residue = std::uint64_t;

/// 2^61 - 1, the default field for random-point oracles.
inline constexpr Residue kMersenne61 = (Residue{1} << 61) - 1;

inline Residue add_mod(Residue a, Residue b, Residue p) noexcept {
  const Residue s = a + b;  // a, b < p < 2^63
  return s >= p ? s - p : s;
}

inline Residue sub_mod(Residue a, Residue b, Residue p) noexcept { return a >= b ? a - b : a + (p - b); }

inline Residue mul_mod(Residue a, Residue b, Residue p) noexcept {
  return static_cast<Residue>(static_cast<unsigned __int128>(a) * b % p);
}

Residue pow_mod(Residue base, std::uint64_t exp, Residue p) noexcept;

/// Inverse of a nonzero residue modulo a prime.
Residue inv_mod(Residue a, Residue p) noexcept;

Residue reduce_mod(const boost::multiprecision::cpp_int& v, Residue p);

/// Dense row-major matrix over Z/p.
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Residue> data_;
};

/// Rank by Gaussian elimination; p must be prime.
std::size_t rank_mod_p(ModMatrix m, Residue p);

/// Determinant of a square matrix; p must be prime.
Residue determinant_mod_p(ModMatrix m, Residue p);

}  // namespace coadj
