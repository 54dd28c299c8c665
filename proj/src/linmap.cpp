// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhopf/linmap.hpp"

#include "qhopf/error.hpp"

namespace qhopf {

LinMap::LinMap(Dims source, Dims target) : src_(std::move(source)), tgt_(std::move(target)) {
  cols_.assign(volume_of(src_), Tensor(tgt_));
}

LinMap LinMap::identity(const Dims& d) {
  LinMap m(d, d);
  for (Tensor::Key k = 0; k < m.cols_.size(); ++k) m.cols_[k].add_key(k, Scalar(1));
  return m;
}

LinMap LinMap::from_function(const Dims& source, const Dims& target, const std::function<Tensor(const Index&)>& f) {
  LinMap m(source, target);
  Tensor probe(source);
  for (Tensor::Key k = 0; k < m.cols_.size(); ++k) {
    Tensor img = f(probe.decode(k));
    if (img.dims() != target) throw Error(ErrorKind::ShapeMismatch, "map image shape");
    m.cols_[k] = std::move(img);
  }
  return m;
}

LinMap LinMap::from_matrix(const Dims& source, const Dims& target, const Matrix& mat) {
  LinMap m(source, target);
  if (mat.cols() != static_cast<int>(m.cols_.size()) || static_cast<Tensor::Key>(mat.rows()) != volume_of(target))
    throw Error(ErrorKind::ShapeMismatch, "matrix shape");
  for (int c = 0; c < mat.cols(); ++c)
    for (int r = 0; r < mat.rows(); ++r) m.cols_[c].add_key(r, mat.at(r, c));
  return m;
}

LinMap LinMap::functional(const Vec& values) {
  LinMap m({static_cast<int>(values.size())}, {});
  for (std::size_t i = 0; i < values.size(); ++i) m.cols_[i].add_key(0, values[i]);
  return m;
}

LinMap LinMap::point(const Tensor& t) {
  LinMap m({}, t.dims());
  m.cols_[0] = t;
  return m;
}

Tensor LinMap::image(const Index& idx) const {
  Tensor probe(src_);
  return cols_.at(probe.encode(idx));
}

Tensor LinMap::operator()(const Tensor& x) const {
  if (x.dims() != src_) throw Error(ErrorKind::ShapeMismatch, "map argument shape");
  Tensor out(tgt_);
  for (const auto& [k, v] : x.entries())
    for (const auto& [j, w] : cols_[k].entries()) out.add_key(j, v * w);
  return out;
}

LinMap LinMap::after(const LinMap& first) const {
  if (first.tgt_ != src_) throw Error(ErrorKind::ShapeMismatch, "composition");
  LinMap m(first.src_, tgt_);
  for (Tensor::Key k = 0; k < m.cols_.size(); ++k) m.cols_[k] = (*this)(first.cols_[k]);
  return m;
}

LinMap LinMap::kron(const LinMap& o) const {
  Dims s = src_, t = tgt_;
  s.insert(s.end(), o.src_.begin(), o.src_.end());
  t.insert(t.end(), o.tgt_.begin(), o.tgt_.end());
  LinMap m(s, t);
  for (Tensor::Key a = 0; a < cols_.size(); ++a)
    for (Tensor::Key b = 0; b < o.cols_.size(); ++b) m.cols_[a * o.cols_.size() + b] = cols_[a].outer(o.cols_[b]);
  return m;
}

Matrix LinMap::matrix() const {
  Matrix mat(static_cast<int>(volume_of(tgt_)), static_cast<int>(cols_.size()));
  for (std::size_t c = 0; c < cols_.size(); ++c)
    for (const auto& [r, v] : cols_[c].entries()) mat.at(static_cast<int>(r), static_cast<int>(c)) = v;
  return mat;
}

LinMap LinMap::to_field(std::uint64_t p) const {
  LinMap m = *this;
  for (auto& c : m.cols_) c = c.to_field(p);
  return m;
}

bool operator==(const LinMap& a, const LinMap& b) {
  return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.cols_ == b.cols_;
}

LinMap operator+(const LinMap& a, const LinMap& b) {
  if (a.src_ != b.src_ || a.tgt_ != b.tgt_) throw Error(ErrorKind::ShapeMismatch, "map sum");
  LinMap m = a;
  for (std::size_t i = 0; i < m.cols_.size(); ++i) m.cols_[i] += b.cols_[i];
  return m;
}

LinMap operator-(const LinMap& a, const LinMap& b) { return a + Scalar(-1) * b; }

LinMap operator*(const Scalar& s, LinMap a) {
  for (auto& c : a.cols_) c *= s;
  return a;
}

}  // namespace qhopf
