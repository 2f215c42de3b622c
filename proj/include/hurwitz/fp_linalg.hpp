#pragma once

#include <cstdint>
#include <vector>

namespace hurwitz::linalg {

/// Dense matrix over the prime field F_p.
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p) : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t prime() const { return p_; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Reduced row echelon form in place; returns the pivot column of each
  /// nonzero row.
  std::vector<std::size_t> reduce();

 private:
  std::size_t rows_, cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> data_;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

/// A basis of { x : M x = 0 }, one vector per free column, in column order.
std::vector<std::vector<std::uint32_t>> nullspace(FpMatrix m);

std::size_t rank(FpMatrix m);

}  // namespace hurwitz::linalg
