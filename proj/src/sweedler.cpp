// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhopf/sweedler.hpp"

#include <algorithm>

#include "qhopf/error.hpp"

namespace qhopf {

namespace {

Dims leg_dims(const std::vector<Leg>& legs) {
  Dims d;
  for (const auto& l : legs) d.push_back(l.dim);
  return d;
}

}  // namespace

Sweedler::Sweedler(Tensor t, std::vector<Leg> legs) : t_(std::move(t)), legs_(std::move(legs)) {
  if (t_.dims() != leg_dims(legs_)) throw Error(ErrorKind::ShapeMismatch, "leg dimensions do not match tensor");
  for (std::size_t i = 0; i < legs_.size(); ++i)
    for (std::size_t j = i + 1; j < legs_.size(); ++j)
      if (legs_[i].name == legs_[j].name) throw Error(ErrorKind::Internal, "duplicate leg " + legs_[i].name);
}

Sweedler Sweedler::element(const AlgebraRef& a, const Tensor& v, const std::string& name) {
  return Sweedler(v, {Leg(name, a)});
}

Sweedler Sweedler::unit(const AlgebraRef& a, const std::string& name) { return element(a, a->unit(), name); }

Sweedler Sweedler::basis(const AlgebraRef& a, int i, const std::string& name) {
  return element(a, a->basis(i), name);
}

int Sweedler::position(const std::string& name) const {
  for (std::size_t i = 0; i < legs_.size(); ++i)
    if (legs_[i].name == name) return static_cast<int>(i);
  throw Error(ErrorKind::Internal, "no leg named " + name);
}

Sweedler operator*(const Sweedler& a, const Sweedler& b) {
  std::vector<Leg> legs = a.legs_;
  legs.insert(legs.end(), b.legs_.begin(), b.legs_.end());
  return Sweedler(a.t_.outer(b.t_), std::move(legs));
}

Sweedler Sweedler::mul(const std::vector<std::string>& factors, const std::string& out) const {
  if (factors.empty()) throw Error(ErrorKind::Internal, "empty product");
  std::vector<int> pos;
  for (const auto& f : factors) pos.push_back(position(f));
  const AlgebraRef& alg = legs_[pos[0]].algebra;
  if (!alg) throw Error(ErrorKind::Internal, "leg " + factors[0] + " has no algebra");
  for (int p : pos)
    if (legs_[p].dim != alg->dim()) throw Error(ErrorKind::ShapeMismatch, "product of legs of different dimension");
  std::vector<bool> used(legs_.size(), false);
  for (int p : pos) {
    if (used[p]) throw Error(ErrorKind::Internal, "leg repeated in product");
    used[p] = true;
  }
  std::vector<int> rest;
  std::vector<Leg> nlegs;
  for (std::size_t i = 0; i < legs_.size(); ++i)
    if (!used[i]) {
      rest.push_back(static_cast<int>(i));
      nlegs.push_back(legs_[i]);
    }
  nlegs.emplace_back(out, alg);
  Tensor nt(leg_dims(nlegs));
  Index idx;
  auto d = static_cast<Tensor::Key>(alg->dim());
  std::vector<std::pair<int, Scalar>> acc, next;
  for (const auto& [k, v] : t_.entries()) {
    t_.decode(k, idx);
    Tensor::Key base = 0;
    for (int r : rest) base = base * static_cast<Tensor::Key>(legs_[r].dim) + idx[r];
    acc.assign(1, {idx[pos[0]], v});
    for (std::size_t f = 1; f < pos.size() && !acc.empty(); ++f) {
      next.clear();
      for (const auto& [i, c] : acc)
        for (const auto& [m, w] : alg->product(i, idx[pos[f]])) next.emplace_back(m, c * w);
      acc.swap(next);
    }
    for (const auto& [i, c] : acc) nt.add_key(base * d + i, c);
  }
  return Sweedler(std::move(nt), std::move(nlegs));
}

Sweedler Sweedler::map(const std::vector<std::string>& src, const LinMap& f, const std::vector<Leg>& out) const {
  std::vector<int> pos;
  for (const auto& s : src) pos.push_back(position(s));
  Dims sd;
  for (int p : pos) sd.push_back(legs_[p].dim);
  if (sd != f.source()) throw Error(ErrorKind::ShapeMismatch, "map source legs");
  if (leg_dims(out) != f.target()) throw Error(ErrorKind::ShapeMismatch, "map target legs");
  std::vector<bool> used(legs_.size(), false);
  for (int p : pos) used[p] = true;
  std::vector<int> rest;
  std::vector<Leg> nlegs;
  for (std::size_t i = 0; i < legs_.size(); ++i)
    if (!used[i]) {
      rest.push_back(static_cast<int>(i));
      nlegs.push_back(legs_[i]);
    }
  nlegs.insert(nlegs.end(), out.begin(), out.end());
  Tensor nt(leg_dims(nlegs));
  Tensor::Key tv = volume_of(f.target());
  Index idx;
  for (const auto& [k, v] : t_.entries()) {
    t_.decode(k, idx);
    Tensor::Key base = 0, s = 0;
    for (int r : rest) base = base * static_cast<Tensor::Key>(legs_[r].dim) + idx[r];
    for (int p : pos) s = s * static_cast<Tensor::Key>(legs_[p].dim) + idx[p];
    for (const auto& [j, w] : f.column(s).entries()) nt.add_key(base * tv + j, v * w);
  }
  return Sweedler(std::move(nt), std::move(nlegs));
}

Sweedler Sweedler::apply(const std::string& leg, const LinMap& f) const {
  int p = position(leg);
  Leg l = legs_[p];
  std::vector<std::string> order;
  for (const auto& x : legs_) order.push_back(x.name);
  Sweedler r = map(leg, f, {l});
  Tensor t = r.take(order);
  return Sweedler(std::move(t), legs_);
}

Sweedler Sweedler::rename(const std::string& from, const std::string& to) const {
  Sweedler r = *this;
  r.legs_[position(from)].name = to;
  return Sweedler(r.t_, r.legs_);
}

Sweedler Sweedler::retype(const std::string& leg, const AlgebraRef& a) const {
  Sweedler r = *this;
  Leg& l = r.legs_[position(leg)];
  if (a->dim() != l.dim) throw Error(ErrorKind::ShapeMismatch, "retype dimension");
  l.algebra = a;
  return r;
}

LinMap reshape_map(const Dims& from, const Dims& to) {
  Tensor::Key n = volume_of(from);
  if (n != volume_of(to)) throw Error(ErrorKind::ShapeMismatch, "reshape volume");
  LinMap m(from, to);
  for (Tensor::Key k = 0; k < n; ++k) m.column(k).add_key(k, Scalar(1));
  return m;
}

Sweedler Sweedler::fuse(const std::vector<std::string>& src, const Leg& out) const {
  Dims sd;
  for (const auto& s : src) sd.push_back(legs_[position(s)].dim);
  return map(src, reshape_map(sd, {out.dim}), {out});
}

Sweedler Sweedler::split(const std::string& src, const std::vector<Leg>& out) const {
  return map(src, reshape_map({legs_[position(src)].dim}, leg_dims(out)), out);
}

Tensor Sweedler::take(const std::vector<std::string>& order) const {
  if (order.size() != legs_.size()) throw Error(ErrorKind::Internal, "take: leg count mismatch");
  std::vector<int> perm;
  for (const auto& n : order) perm.push_back(position(n));
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) throw Error(ErrorKind::Internal, "take: repeated leg");
  return t_.permuted(perm);
}

}  // namespace qhopf
