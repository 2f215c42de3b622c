#include "hurwitz/fp_linalg.hpp"

#include <utility>

namespace hurwitz::linalg {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

std::vector<std::size_t> FpMatrix::reduce() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && at(sel, col) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < cols_; ++c) std::swap(at(sel, c), at(row, c));
    }
    const std::uint64_t inv = inverse_mod(at(row, col), p_);
    for (std::size_t c = col; c < cols_; ++c) at(row, c) = static_cast<std::uint32_t>(at(row, c) * inv % p_);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || at(r, col) == 0) continue;
      const std::uint64_t factor = at(r, col);
      for (std::size_t c = col; c < cols_; ++c) {
        at(r, c) = static_cast<std::uint32_t>((at(r, c) + (p_ - factor) * at(row, c)) % p_);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<std::uint32_t>> nullspace(FpMatrix m) {
  const auto pivots = m.reduce();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (m.prime() - m.at(r, free)) % m.prime();
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(FpMatrix m) { return m.reduce().size(); }

}  // namespace hurwitz::linalg
