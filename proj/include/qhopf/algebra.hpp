// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qhopf/linmap.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf {

class FinAlgebra;
using AlgebraRef = std::shared_ptr<const FinAlgebra>;

// Finite-dimensional algebra given by structure constants m(i,j,k) = coefficient
// of e_k in e_i e_j. Associativity is not assumed.
class FinAlgebra {
 public:
  FinAlgebra(Tensor mult, Tensor unit);
  static AlgebraRef make(Tensor mult, Tensor unit);
  // group algebra of the cyclic group of order n, basis g^0..g^{n-1}
  static AlgebraRef cyclic_group(int n, std::uint64_t p = 0);
  static AlgebraRef ground(std::uint64_t p = 0);

  int dim() const { return dim_; }
  const Tensor& structure() const { return mult_; }
  const Tensor& unit() const { return unit_; }
  const std::vector<std::pair<int, Scalar>>& product(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * dim_ + j];
  }
  Tensor mul(const Tensor& x, const Tensor& y) const;
  Tensor basis(int i) const { return Tensor::basis({dim_}, {i}); }
  // matrix of y -> x y
  Matrix left_matrix(const Tensor& x) const;
  Matrix right_matrix(const Tensor& x) const;

  AlgebraRef op() const;
  AlgebraRef to_field(std::uint64_t p) const;
  // basis e_i (x) f_j has index i * dim(b) + j
  static AlgebraRef tensor(const FinAlgebra& a, const FinAlgebra& b);

  friend bool operator==(const FinAlgebra& a, const FinAlgebra& b) {
    return a.mult_ == b.mult_ && a.unit_ == b.unit_;
  }

 private:
  int dim_;
  Tensor mult_;
  Tensor unit_;
  std::vector<std::vector<std::pair<int, Scalar>>> table_;
};

bool same_algebra(const AlgebraRef& a, const AlgebraRef& b);

using Legs = std::vector<AlgebraRef>;

Dims dims_of(const Legs& legs);
Tensor unit_of(const Legs& legs);
// product in the tensor product of the leg algebras
Tensor multiply(const Legs& legs, const Tensor& x, const Tensor& y);
Matrix left_matrix(const Legs& legs, const Tensor& x);
// two-sided inverse; throws NotInvertible
Tensor invert_element(const Legs& legs, const Tensor& x);
bool is_invertible(const Legs& legs, const Tensor& x);
// place the legs of x at the given positions of an arity-n tensor, units elsewhere
Tensor embed_legs(const Tensor& x, const std::vector<int>& positions, const Legs& ambient);
// apply f to the legs [first, first + arity(source)); its target legs take their place
Tensor apply_linear_map(const LinMap& f, const Tensor& x, int first);
// swap two legs
Tensor switch_legs(const Tensor& x, int a, int b);

}  // namespace qhopf
