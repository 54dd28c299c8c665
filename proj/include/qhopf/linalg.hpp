// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "qhopf/scalar.hpp"

namespace qhopf {

using Vec = std::vector<Scalar>;

// Dense exact matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  Vec row(int r) const;
  Vec col(int c) const;
  void append_row(const Vec& v);

  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> a_;
};

struct Echelon {
  Matrix reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

Echelon rref(Matrix m);
int rank(const Matrix& m);
// basis of {x : m x = 0}
std::vector<Vec> nullspace(const Matrix& m);
// some x with m x = b, if one exists
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace qhopf
