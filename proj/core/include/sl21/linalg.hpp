#pragma once

#include <cstddef>
#include <vector>

#include "sl21/rational.hpp"

namespace sl21 {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

using RationalVector = std::vector<Rational>;

/// Fraction-free (Bareiss) echelon form of an integer matrix obtained by clearing
/// row denominators. Pivot rows are chosen by smallest absolute pivot value.
struct Echelon {
  std::vector<std::vector<Integer>> rows;  // only the nonzero echelon rows
  std::vector<std::size_t> pivot_cols;
  std::size_t cols = 0;
};

Echelon bareiss_echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Basis of {x : m x = 0}. One vector per free column; the free coordinate is 1 and
/// the other free coordinates are 0.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Reduced row echelon form, zero rows dropped.
std::vector<RationalVector> rref(const RationalMatrix& m);

Rational determinant(const RationalMatrix& m);

}  // namespace sl21
