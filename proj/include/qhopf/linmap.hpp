// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "qhopf/linalg.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf {

// Linear map between tensor spaces, stored as the images of the source basis.
class LinMap {
 public:
  LinMap() = default;
  LinMap(Dims source, Dims target);
  static LinMap identity(const Dims& d);
  static LinMap from_function(const Dims& source, const Dims& target, const std::function<Tensor(const Index&)>& f);
  static LinMap from_matrix(const Dims& source, const Dims& target, const Matrix& m);
  // functional sending each basis vector to the given scalar
  static LinMap functional(const Vec& values);
  // map from the ground field picking out an element
  static LinMap point(const Tensor& t);

  const Dims& source() const { return src_; }
  const Dims& target() const { return tgt_; }
  const Tensor& column(Tensor::Key k) const { return cols_.at(k); }
  Tensor& column(Tensor::Key k) { return cols_.at(k); }
  Tensor image(const Index& idx) const;
  std::size_t source_volume() const { return cols_.size(); }

  Tensor operator()(const Tensor& x) const;
  // this after first
  LinMap after(const LinMap& first) const;
  // f (x) g acting on concatenated legs
  LinMap kron(const LinMap& o) const;
  Matrix matrix() const;
  LinMap to_field(std::uint64_t p) const;

  friend bool operator==(const LinMap& a, const LinMap& b);
  friend bool operator!=(const LinMap& a, const LinMap& b) { return !(a == b); }
  friend LinMap operator+(const LinMap& a, const LinMap& b);
  friend LinMap operator-(const LinMap& a, const LinMap& b);
  friend LinMap operator*(const Scalar& s, LinMap a);

 private:
  Dims src_, tgt_;
  std::vector<Tensor> cols_;
};

}  // namespace qhopf
