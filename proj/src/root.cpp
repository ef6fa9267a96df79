#include "coadj/root.hpp"

namespace coadj {

std::string to_string(const Root& r) {
  return "(" + std::to_string(r.row) + "," + std::to_string(r.col) + ")";
}

std::vector<Root> positive_roots(int n) {
  std::vector<Root> out;
  if (n < 2) return out;
  out.reserve(static_cast<std::size_t>(num_positive_roots(n)));
  for (int col = 1; col < n; ++col)
    for (int row = n; row > col; --row) out.push_back({row, col});
  return out;
}

void require_positive(const Root& r, int n) {
  if (!r.fits(n) || !r.positive())
    throw InputError("root " + to_string(r) + " is not a positive root for n=" + std::to_string(n));
}

}  // namespace coadj
