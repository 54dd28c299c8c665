// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhopf/algebra.hpp"

#include <numeric>
#include <optional>

#include "qhopf/error.hpp"

namespace qhopf {

FinAlgebra::FinAlgebra(Tensor mult, Tensor unit) : mult_(std::move(mult)), unit_(std::move(unit)) {
  if (mult_.arity() != 3 || unit_.arity() != 1) throw Error(ErrorKind::ShapeMismatch, "algebra data arity");
  dim_ = unit_.dims()[0];
  if (mult_.dims() != Dims{dim_, dim_, dim_}) throw Error(ErrorKind::ShapeMismatch, "structure constants shape");
  table_.assign(static_cast<std::size_t>(dim_) * dim_, {});
  mult_.for_each([&](const Index& idx, const Scalar& v) {
    table_[static_cast<std::size_t>(idx[0]) * dim_ + idx[1]].emplace_back(idx[2], v);
  });
}

AlgebraRef FinAlgebra::make(Tensor mult, Tensor unit) {
  return std::make_shared<const FinAlgebra>(std::move(mult), std::move(unit));
}

AlgebraRef FinAlgebra::cyclic_group(int n, std::uint64_t p) {
  Tensor m({n, n, n});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.add({i, j, (i + j) % n}, Scalar::residue(1, p));
  return make(m, Tensor::basis({n}, {0}, Scalar::residue(1, p)));
}

AlgebraRef FinAlgebra::ground(std::uint64_t p) { return cyclic_group(1, p); }

Tensor FinAlgebra::mul(const Tensor& x, const Tensor& y) const {
  if (x.dims() != Dims{dim_} || y.dims() != Dims{dim_}) throw Error(ErrorKind::ShapeMismatch, "algebra product");
  Tensor out({dim_});
  for (const auto& [i, a] : x.entries())
    for (const auto& [j, b] : y.entries())
      for (const auto& [k, c] : product(static_cast<int>(i), static_cast<int>(j))) out.add_key(k, a * b * c);
  return out;
}

Matrix FinAlgebra::left_matrix(const Tensor& x) const {
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Tensor col = mul(x, basis(j));
    for (const auto& [k, v] : col.entries()) m.at(static_cast<int>(k), j) = v;
  }
  return m;
}

Matrix FinAlgebra::right_matrix(const Tensor& x) const {
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Tensor col = mul(basis(j), x);
    for (const auto& [k, v] : col.entries()) m.at(static_cast<int>(k), j) = v;
  }
  return m;
}

AlgebraRef FinAlgebra::op() const { return make(mult_.permuted({1, 0, 2}), unit_); }

AlgebraRef FinAlgebra::to_field(std::uint64_t p) const { return make(mult_.to_field(p), unit_.to_field(p)); }

AlgebraRef FinAlgebra::tensor(const FinAlgebra& a, const FinAlgebra& b) {
  int n = a.dim_ * b.dim_;
  Tensor m({n, n, n});
  for (int i1 = 0; i1 < a.dim_; ++i1)
    for (int j1 = 0; j1 < a.dim_; ++j1)
      for (const auto& [k1, c1] : a.product(i1, j1))
        for (int i2 = 0; i2 < b.dim_; ++i2)
          for (int j2 = 0; j2 < b.dim_; ++j2)
            for (const auto& [k2, c2] : b.product(i2, j2))
              m.add({i1 * b.dim_ + i2, j1 * b.dim_ + j2, k1 * b.dim_ + k2}, c1 * c2);
  return make(m, a.unit_.outer(b.unit_).reshaped({n}));
}

bool same_algebra(const AlgebraRef& a, const AlgebraRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Dims dims_of(const Legs& legs) {
  Dims d;
  for (const auto& l : legs) d.push_back(l->dim());
  return d;
}

Tensor unit_of(const Legs& legs) {
  Tensor t = Tensor::scalar(Scalar(1));
  for (const auto& l : legs) t = t.outer(l->unit());
  return t;
}

Tensor multiply(const Legs& legs, const Tensor& x, const Tensor& y) {
  Dims d = dims_of(legs);
  if (x.dims() != d || y.dims() != d) throw Error(ErrorKind::ShapeMismatch, "tensor-power product");
  Tensor out(d);
  if (x.is_zero() || y.is_zero()) return out;
  std::size_t n = legs.size();
  auto unpack = [&](const Tensor& t) {
    std::vector<int> idx;
    std::vector<const Scalar*> val;
    idx.reserve(t.nnz() * n);
    Index i;
    for (const auto& [k, v] : t.entries()) {
      t.decode(k, i);
      idx.insert(idx.end(), i.begin(), i.end());
      val.push_back(&v);
    }
    return std::make_pair(std::move(idx), std::move(val));
  };
  auto [xi, xv] = unpack(x);
  auto [yi, yv] = unpack(y);
  Tensor::Key vol = out.volume();
  bool dense = vol <= (Tensor::Key{1} << 22);
  std::vector<Scalar> acc_dense;
  std::vector<char> touched;
  if (dense) {
    acc_dense.resize(vol);
    touched.assign(vol, 0);
  }
  std::vector<std::pair<Tensor::Key, Scalar>> acc, next;
  for (std::size_t a = 0; a < xv.size(); ++a) {
    const int* ia = &xi[a * n];
    for (std::size_t b = 0; b < yv.size(); ++b) {
      const int* ib = &yi[b * n];
      acc.assign(1, {0, *xv[a] * *yv[b]});
      for (std::size_t l = 0; l < n && !acc.empty(); ++l) {
        const auto& prod = legs[l]->product(ia[l], ib[l]);
        auto dl = static_cast<Tensor::Key>(d[l]);
        if (prod.size() == 1) {
          const auto& [m, w] = prod[0];
          bool one = w.is_one();
          for (auto& [k, c] : acc) {
            k = k * dl + m;
            if (!one) c *= w;
          }
          continue;
        }
        next.clear();
        for (const auto& [k, c] : acc)
          for (const auto& [m, w] : prod) next.emplace_back(k * dl + m, c * w);
        acc.swap(next);
      }
      if (dense) {
        for (auto& [k, c] : acc) {
          if (touched[k]) acc_dense[k] += c;
          else {
            acc_dense[k] = std::move(c);
            touched[k] = 1;
          }
        }
      } else {
        for (const auto& [k, c] : acc) out.add_key(k, c);
      }
    }
  }
  if (dense)
    for (Tensor::Key k = 0; k < vol; ++k)
      if (touched[k] && !acc_dense[k].is_zero()) out.add_key(k, acc_dense[k]);
  return out;
}

Matrix left_matrix(const Legs& legs, const Tensor& x) {
  Dims d = dims_of(legs);
  Tensor::Key n = volume_of(d);
  Matrix m(static_cast<int>(n), static_cast<int>(n));
  for (Tensor::Key j = 0; j < n; ++j) {
    Tensor e(d);
    e.add_key(j, Scalar(1));
    Tensor col = multiply(legs, x, e);
    for (const auto& [k, v] : col.entries()) m.at(static_cast<int>(k), static_cast<int>(j)) = v;
  }
  return m;
}

namespace {

// x^-1 as a polynomial in x, read off from the first linear dependency among
// 1, x, x^2, ...; a zero constant term means x is a zero divisor
std::optional<Tensor> try_invert(const Legs& legs, const Tensor& x) {
  Dims d = dims_of(legs);
  if (x.dims() != d) throw Error(ErrorKind::ShapeMismatch, "element shape");
  struct Row {
    Tensor v;
    Tensor::Key pivot;
    Vec combo;
  };
  std::vector<Row> rows;
  std::vector<Tensor> powers{unit_of(legs)};
  for (;;) {
    std::size_t k = powers.size() - 1;
    Tensor r = powers.back();
    Vec combo(k + 1);
    combo[k] = Scalar(1);
    for (const Row& b : rows) {
      Scalar c = r.get_key(b.pivot);
      if (c.is_zero()) continue;
      Tensor t = b.v;
      t *= c;
      r -= t;
      for (std::size_t i = 0; i < b.combo.size(); ++i) combo[i] -= c * b.combo[i];
    }
    if (r.is_zero()) {
      if (combo[0].is_zero()) return std::nullopt;
      Tensor u(d);
      for (std::size_t i = 1; i <= k; ++i) {
        if (combo[i].is_zero()) continue;
        Tensor t = powers[i - 1];
        t *= combo[i];
        u += t;
      }
      u *= -combo[0].inverse();
      Tensor one = unit_of(legs);
      if (multiply(legs, u, x) != one || multiply(legs, x, u) != one) return std::nullopt;
      return u;
    }
    auto [pk, pv] = *r.entries().begin();
    Scalar inv = pv.inverse();
    r *= inv;
    for (Scalar& c : combo) c *= inv;
    rows.push_back({std::move(r), pk, std::move(combo)});
    powers.push_back(multiply(legs, x, powers.back()));
  }
}

}  // namespace

Tensor invert_element(const Legs& legs, const Tensor& x) {
  auto u = try_invert(legs, x);
  if (!u) throw Error(ErrorKind::NotInvertible, "element has no two-sided inverse");
  return *u;
}

bool is_invertible(const Legs& legs, const Tensor& x) { return try_invert(legs, x).has_value(); }

Tensor embed_legs(const Tensor& x, const std::vector<int>& positions, const Legs& ambient) {
  if (positions.size() != x.arity()) throw Error(ErrorKind::ShapeMismatch, "embed positions");
  std::vector<int> slot(ambient.size(), -1);
  for (std::size_t i = 0; i < positions.size(); ++i) slot.at(positions[i]) = static_cast<int>(i);
  Tensor out(dims_of(ambient));
  Index ix, iout(ambient.size());
  std::vector<std::pair<int, Scalar>> units;
  for (const auto& [kx, vx] : x.entries()) {
    x.decode(kx, ix);
    std::vector<std::pair<Tensor::Key, Scalar>> acc{{0, vx}}, next;
    for (std::size_t l = 0; l < ambient.size(); ++l) {
      next.clear();
      auto dl = static_cast<Tensor::Key>(ambient[l]->dim());
      if (slot[l] >= 0) {
        for (const auto& [k, c] : acc) next.emplace_back(k * dl + ix[slot[l]], c);
      } else {
        for (const auto& [k, c] : acc)
          for (const auto& [u, w] : ambient[l]->unit().entries()) next.emplace_back(k * dl + u, c * w);
      }
      acc.swap(next);
    }
    for (const auto& [k, c] : acc) out.add_key(k, c);
  }
  return out;
}

Tensor apply_linear_map(const LinMap& f, const Tensor& x, int first) {
  int ns = static_cast<int>(f.source().size());
  Dims d = x.dims();
  for (int i = 0; i < ns; ++i)
    if (d.at(first + i) != f.source()[i]) throw Error(ErrorKind::ShapeMismatch, "map leg dimensions");
  Dims nd(d.begin(), d.begin() + first);
  nd.insert(nd.end(), f.target().begin(), f.target().end());
  nd.insert(nd.end(), d.begin() + first + ns, d.end());
  Tensor::Key mid = volume_of(f.source()), after = 1, tv = volume_of(f.target());
  for (std::size_t i = first + ns; i < d.size(); ++i) after *= d[i];
  Tensor out(nd);
  for (const auto& [k, v] : x.entries()) {
    Tensor::Key a = k / (mid * after), m = (k / after) % mid, c = k % after;
    for (const auto& [t, w] : f.column(m).entries()) out.add_key((a * tv + t) * after + c, v * w);
  }
  return out;
}

Tensor switch_legs(const Tensor& x, int a, int b) {
  std::vector<int> perm(x.arity());
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm.at(a), perm.at(b));
  return x.permuted(perm);
}

}  // namespace qhopf
