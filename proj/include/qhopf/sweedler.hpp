// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "qhopf/algebra.hpp"

namespace qhopf {

struct Leg {
  std::string name;
  AlgebraRef algebra;  // null for legs that only carry a vector space
  int dim = 0;         // used when algebra is null

  Leg(std::string n, AlgebraRef a) : name(std::move(n)), algebra(std::move(a)), dim(algebra->dim()) {}
  Leg(std::string n, int d) : name(std::move(n)), dim(d) {}
};

// Tensor with named legs. Formulas written in Sweedler notation become short
// chains: take tensor products of the ingredients, apply maps to legs, then
// multiply legs together in the order they appear.
class Sweedler {
 public:
  Sweedler() = default;
  Sweedler(Tensor t, std::vector<Leg> legs);
  static Sweedler element(const AlgebraRef& a, const Tensor& v, const std::string& name);
  static Sweedler unit(const AlgebraRef& a, const std::string& name);
  static Sweedler basis(const AlgebraRef& a, int i, const std::string& name);

  const Tensor& tensor() const { return t_; }
  const std::vector<Leg>& legs() const { return legs_; }

  friend Sweedler operator*(const Sweedler& a, const Sweedler& b);
  Sweedler& operator*=(const Scalar& s) {
    t_ *= s;
    return *this;
  }
  // product of the named legs, left to right, computed in the first leg's algebra
  Sweedler mul(const std::vector<std::string>& factors, const std::string& out) const;
  Sweedler map(const std::vector<std::string>& src, const LinMap& f, const std::vector<Leg>& out) const;
  Sweedler map(const std::string& src, const LinMap& f, const std::vector<Leg>& out) const {
    return map(std::vector<std::string>{src}, f, out);
  }
  // apply an endomorphism of a leg algebra without renaming
  Sweedler apply(const std::string& leg, const LinMap& f) const;
  Sweedler rename(const std::string& from, const std::string& to) const;
  Sweedler retype(const std::string& leg, const AlgebraRef& a) const;
  // merge legs into one leg of the given algebra; the first leg is most significant
  Sweedler fuse(const std::vector<std::string>& src, const Leg& out) const;
  Sweedler split(const std::string& src, const std::vector<Leg>& out) const;
  // tensor with legs in the given order; the names must cover all legs
  Tensor take(const std::vector<std::string>& order) const;

 private:
  int position(const std::string& name) const;

  Tensor t_ = Tensor::scalar(Scalar(1));
  std::vector<Leg> legs_;
};

LinMap reshape_map(const Dims& from, const Dims& to);

}  // namespace qhopf
