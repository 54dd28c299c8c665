// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhopf/tensor.hpp"

#include <sstream>

#include "qhopf/error.hpp"

namespace qhopf {

Tensor::Key volume_of(const Dims& d) {
  Tensor::Key v = 1;
  for (int n : d) {
    if (n <= 0) throw Error(ErrorKind::ShapeMismatch, "non-positive leg dimension");
    if (v > (Tensor::Key(1) << 62) / static_cast<Tensor::Key>(n))
      throw Error(ErrorKind::ShapeMismatch, "tensor volume overflow");
    v *= static_cast<Tensor::Key>(n);
  }
  return v;
}

Tensor::Tensor(Dims dims) : dims_(std::move(dims)) {
  volume_ = volume_of(dims_);
  strides_.assign(dims_.size(), 1);
  for (int i = static_cast<int>(dims_.size()) - 2; i >= 0; --i)
    strides_[i] = strides_[i + 1] * static_cast<Key>(dims_[i + 1]);
}

Tensor Tensor::scalar(const Scalar& s) {
  Tensor t;
  t.add_key(0, s);
  return t;
}

Tensor Tensor::basis(Dims dims, const Index& idx, const Scalar& c) {
  Tensor t(std::move(dims));
  t.add(idx, c);
  return t;
}

Tensor Tensor::vec(const std::vector<Scalar>& v) {
  Tensor t({static_cast<int>(v.size())});
  for (std::size_t i = 0; i < v.size(); ++i) t.add_key(i, v[i]);
  return t;
}

Tensor::Key Tensor::encode(const Index& idx) const {
  if (idx.size() != dims_.size()) throw Error(ErrorKind::ShapeMismatch, "index arity");
  Key k = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= dims_[i]) throw Error(ErrorKind::ShapeMismatch, "index out of range");
    k += strides_[i] * static_cast<Key>(idx[i]);
  }
  return k;
}

void Tensor::decode(Key k, Index& out) const {
  out.resize(dims_.size());
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    out[i] = static_cast<int>(k / strides_[i]);
    k %= strides_[i];
  }
}

Index Tensor::decode(Key k) const {
  Index out;
  decode(k, out);
  return out;
}

Scalar Tensor::get(const Index& idx) const { return get_key(encode(idx)); }

Scalar Tensor::get_key(Key k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? Scalar() : it->second;
}

void Tensor::add_key(Key k, const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(k, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

void Tensor::set(const Index& idx, const Scalar& v) {
  Key k = encode(idx);
  if (v.is_zero())
    entries_.erase(k);
  else
    entries_[k] = v;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (o.dims_ != dims_) throw Error(ErrorKind::ShapeMismatch, "tensor sum");
  for (const auto& [k, v] : o.entries_) add_key(k, v);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (o.dims_ != dims_) throw Error(ErrorKind::ShapeMismatch, "tensor difference");
  for (const auto& [k, v] : o.entries_) add_key(k, -v);
  return *this;
}

Tensor& Tensor::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [k, v] : entries_) v *= s;
  return *this;
}

bool operator==(const Tensor& a, const Tensor& b) {
  if (a.dims_ != b.dims_ || a.entries_.size() != b.entries_.size()) return false;
  auto ia = a.entries_.begin();
  auto ib = b.entries_.begin();
  for (; ia != a.entries_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

Tensor Tensor::permuted(const std::vector<int>& perm) const {
  if (perm.size() != dims_.size()) throw Error(ErrorKind::ShapeMismatch, "permutation arity");
  Dims d(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) d[i] = dims_.at(perm[i]);
  Tensor out(d);
  Index idx, nidx(perm.size());
  for (const auto& [k, v] : entries_) {
    decode(k, idx);
    for (std::size_t i = 0; i < perm.size(); ++i) nidx[i] = idx[perm[i]];
    out.entries_.emplace(out.encode(nidx), v);
  }
  return out;
}

Tensor Tensor::outer(const Tensor& o) const {
  Dims d = dims_;
  d.insert(d.end(), o.dims_.begin(), o.dims_.end());
  Tensor out(d);
  for (const auto& [ka, va] : entries_)
    for (const auto& [kb, vb] : o.entries_) out.entries_.emplace(ka * o.volume_ + kb, va * vb);
  return out;
}

Tensor Tensor::reshaped(Dims dims) const {
  Tensor out(std::move(dims));
  if (out.volume_ != volume_) throw Error(ErrorKind::ShapeMismatch, "reshape volume");
  out.entries_ = entries_;
  return out;
}

Tensor Tensor::to_field(std::uint64_t p) const {
  Tensor out(dims_);
  for (const auto& [k, v] : entries_) out.add_key(k, v.to_field(p));
  return out;
}

std::uint64_t Tensor::modulus() const {
  for (const auto& [k, v] : entries_)
    if (v.modulus()) return v.modulus();
  return 0;
}

std::string Tensor::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for_each([&](const Index& idx, const Scalar& v) {
    if (!first) os << ", ";
    first = false;
    os << "(";
    for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
    os << "):" << v;
  });
  os << "}";
  return os.str();
}

}  // namespace qhopf
