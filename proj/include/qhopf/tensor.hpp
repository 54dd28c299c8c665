// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qhopf/scalar.hpp"

namespace qhopf {

using Index = std::vector<int>;
using Dims = std::vector<int>;

// Sparse exact tensor. Entries are keyed by the row-major flattening of the
// multi-index, so iteration order is lexicographic in the multi-index.
class Tensor {
 public:
  using Key = std::uint64_t;

  Tensor() = default;  // arity 0, value 0
  explicit Tensor(Dims dims);
  static Tensor scalar(const Scalar& s);
  static Tensor basis(Dims dims, const Index& idx, const Scalar& c = Scalar(1));
  static Tensor vec(const std::vector<Scalar>& v);

  const Dims& dims() const { return dims_; }
  std::size_t arity() const { return dims_.size(); }
  Key volume() const { return volume_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Key encode(const Index& idx) const;
  Index decode(Key k) const;
  void decode(Key k, Index& out) const;

  Scalar get(const Index& idx) const;
  Scalar get_key(Key k) const;
  void add(const Index& idx, const Scalar& v) { add_key(encode(idx), v); }
  void add_key(Key k, const Scalar& v);
  void set(const Index& idx, const Scalar& v);
  const std::map<Key, Scalar>& entries() const { return entries_; }

  template <class F>
  void for_each(F&& f) const {
    Index idx(dims_.size());
    for (const auto& [k, v] : entries_) {
      decode(k, idx);
      f(static_cast<const Index&>(idx), v);
    }
  }

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Scalar& s);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Scalar& s) { return a *= s; }
  friend Tensor operator*(const Scalar& s, Tensor a) { return a *= s; }
  friend bool operator==(const Tensor& a, const Tensor& b);
  friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

  // result leg k is leg perm[k] of this tensor
  Tensor permuted(const std::vector<int>& perm) const;
  // legs of this tensor followed by the legs of o
  Tensor outer(const Tensor& o) const;
  Tensor reshaped(Dims dims) const;
  Tensor to_field(std::uint64_t p) const;
  // modulus shared by the entries, 0 when all rational or empty
  std::uint64_t modulus() const;

  std::string str() const;

 private:
  Dims dims_;
  std::vector<Key> strides_;
  Key volume_ = 1;
  std::map<Key, Scalar> entries_;
};

Tensor::Key volume_of(const Dims& d);

}  // namespace qhopf
