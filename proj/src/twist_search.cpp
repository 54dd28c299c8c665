// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

// Search for a twist witness V relating two comodule algebra structures.
// The intertwining and normalization conditions are linear in V; the
// reassociator condition is quadratic. Linear equations are eliminated
// repeatedly, univariate quadratics are solved exactly, and otherwise the
// search branches over a few small values.

#include <algorithm>

#include "qhopf/comodule_algebra.hpp"
#include "qhopf/error.hpp"
#include "qhopf/linalg.hpp"

namespace qhopf {

namespace {

struct Quadric {
  Scalar c;
  Vec lin;
  Matrix quad;
};

struct Affine {
  Vec p;     // t = p + R s
  Matrix r;  // d x k
};

bool zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool zero_mat(const Matrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) return false;
  return true;
}

Quadric substitute(const Quadric& q, const Affine& a) {
  int d = a.r.rows(), k = a.r.cols();
  Quadric out{q.c, Vec(k), Matrix(k, k)};
  Vec qp(d), qtp(d);
  for (int i = 0; i < d; ++i) {
    if (a.p[i].is_zero()) continue;
    out.c += q.lin[i] * a.p[i];
    for (int j = 0; j < d; ++j) {
      if (q.quad.at(i, j).is_zero()) continue;
      qtp[j] += q.quad.at(i, j) * a.p[i];
    }
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (!q.quad.at(i, j).is_zero() && !a.p[j].is_zero()) qp[i] += q.quad.at(i, j) * a.p[j];
  for (int i = 0; i < d; ++i) out.c += a.p[i] * qp[i];
  Vec g(d);
  for (int i = 0; i < d; ++i) g[i] = q.lin[i] + qp[i] + qtp[i];
  for (int s = 0; s < k; ++s)
    for (int i = 0; i < d; ++i)
      if (!a.r.at(i, s).is_zero() && !g[i].is_zero()) out.lin[s] += a.r.at(i, s) * g[i];
  if (!zero_mat(q.quad)) {
    Matrix qr(d, k);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (q.quad.at(i, j).is_zero()) continue;
        for (int s = 0; s < k; ++s)
          if (!a.r.at(j, s).is_zero()) qr.at(i, s) += q.quad.at(i, j) * a.r.at(j, s);
      }
    for (int i = 0; i < d; ++i)
      for (int s = 0; s < k; ++s) {
        if (a.r.at(i, s).is_zero()) continue;
        for (int u = 0; u < k; ++u)
          if (!qr.at(i, u).is_zero()) out.quad.at(s, u) += a.r.at(i, s) * qr.at(i, u);
      }
  }
  return out;
}

Affine fix(const Affine& a, int var, const Scalar& v) {
  int d = a.r.rows(), k = a.r.cols();
  Affine b{a.p, Matrix(d, k - 1)};
  for (int i = 0; i < d; ++i) {
    b.p[i] += a.r.at(i, var) * v;
    for (int s = 0, t = 0; s < k; ++s)
      if (s != var) b.r.at(i, t++) = a.r.at(i, s);
  }
  return b;
}

std::vector<Scalar> square_roots(const Scalar& x) {
  if (x.is_zero()) return {x};
  if (std::uint64_t p = x.modulus()) {
    if (p == 2) return {x};
    std::vector<Scalar> out;
    for (std::uint64_t r = 1; r <= p / 2; ++r)
      if (Scalar::residue(static_cast<std::int64_t>(r * r % p), p) == x) {
        out.push_back(Scalar::residue(static_cast<std::int64_t>(r), p));
        out.push_back(Scalar::residue(static_cast<std::int64_t>(p - r), p));
        break;
      }
    return out;
  }
  const mpq_class& q = x.rational();
  if (sgn(q) < 0) return {};
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return {};
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  Scalar r(mpq_class(sn, sd));
  return {r, -r};
}

class Search {
 public:
  Search(std::vector<Quadric> eqs, Tensor v0, std::vector<Tensor> dirs, std::function<bool(const Tensor&)> accept)
      : eqs_(std::move(eqs)), v0_(std::move(v0)), dirs_(std::move(dirs)), accept_(std::move(accept)) {}

  std::optional<Tensor> run(Affine a, int depth) {
    if (++nodes_ > kNodeLimit) return std::nullopt;
    for (;;) {
      std::vector<Quadric> red;
      for (const Quadric& q : eqs_) {
        Quadric s = substitute(q, a);
        bool lz = zero_vec(s.lin), qz = zero_mat(s.quad);
        if (lz && qz) {
          if (!s.c.is_zero()) return std::nullopt;
          continue;
        }
        red.push_back(std::move(s));
      }
      int k = a.r.cols();
      Matrix m(0, k);
      Vec rhs;
      for (const Quadric& q : red)
        if (zero_mat(q.quad)) {
          m.append_row(q.lin);
          rhs.push_back(-q.c);
        }
      if (m.rows() == 0) linearize(red, k, m, rhs);
      if (m.rows() > 0) {
        auto x = solve(m, rhs);
        if (!x) return std::nullopt;
        auto null = nullspace(m);
        Affine b{a.p, Matrix(a.r.rows(), static_cast<int>(null.size()))};
        for (int i = 0; i < a.r.rows(); ++i) {
          for (int s = 0; s < k; ++s) b.p[i] += a.r.at(i, s) * (*x)[s];
          for (std::size_t c = 0; c < null.size(); ++c)
            for (int s = 0; s < k; ++s) b.r.at(i, static_cast<int>(c)) += a.r.at(i, s) * null[c][s];
        }
        a = std::move(b);
        continue;
      }
      if (red.empty()) return finish(a);
      for (const Quadric& q : red) {
        int var = univariate(q);
        if (var < 0) continue;
        Scalar qa = q.quad.at(var, var), qb = q.lin[var];
        Scalar disc = qb * qb - Scalar(4) * qa * q.c;
        for (const Scalar& r : square_roots(disc)) {
          Scalar root = (r - qb) / (Scalar(2) * qa);
          if (auto v = run(fix(a, var, root), depth)) return v;
        }
        return std::nullopt;
      }
      if (depth == 0) return std::nullopt;
      int var = busiest(red, k);
      for (const Scalar& v : branch_values(a)) {
        if (auto r = run(fix(a, var, v), depth - 1)) return r;
      }
      return std::nullopt;
    }
  }

 private:
  static constexpr long kNodeLimit = 5000;

  // combinations of the equations in which every quadratic monomial cancels
  static void linearize(const std::vector<Quadric>& red, int k, Matrix& m, Vec& rhs) {
    int nm = k * (k + 1) / 2;
    Matrix big(static_cast<int>(red.size()), nm + k + 1);
    for (std::size_t e = 0; e < red.size(); ++e) {
      int r = static_cast<int>(e), col = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j, ++col) {
          Scalar v = red[e].quad.at(i, j);
          if (j != i) v += red[e].quad.at(j, i);
          big.at(r, col) = v;
        }
      for (int i = 0; i < k; ++i) big.at(r, nm + i) = red[e].lin[i];
      big.at(r, nm + k) = red[e].c;
    }
    Echelon ech = rref(big);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      if (ech.pivots[r] < nm) continue;
      Vec row(k);
      for (int i = 0; i < k; ++i) row[i] = ech.reduced.at(static_cast<int>(r), nm + i);
      m.append_row(row);
      rhs.push_back(-ech.reduced.at(static_cast<int>(r), nm + k));
    }
  }

  static int univariate(const Quadric& q) {
    int var = -1;
    int k = static_cast<int>(q.lin.size());
    for (int i = 0; i < k; ++i) {
      bool used = !q.lin[i].is_zero();
      for (int j = 0; j < k && !used; ++j) used = !q.quad.at(i, j).is_zero() || !q.quad.at(j, i).is_zero();
      if (!used) continue;
      if (var >= 0) return -1;
      var = i;
    }
    if (var < 0) return -1;
    for (int j = 0; j < k; ++j)
      if (j != var && (!q.quad.at(var, j).is_zero() || !q.quad.at(j, var).is_zero())) return -1;
    if (q.quad.at(var, var).is_zero()) return -1;
    return var;
  }

  static int busiest(const std::vector<Quadric>& red, int k) {
    std::vector<int> count(k);
    for (const Quadric& q : red)
      for (int i = 0; i < k; ++i) {
        bool used = !q.lin[i].is_zero();
        for (int j = 0; j < k && !used; ++j) used = !q.quad.at(i, j).is_zero() || !q.quad.at(j, i).is_zero();
        count[i] += used;
      }
    return static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  }

  std::vector<Scalar> branch_values(const Affine&) const {
    std::vector<Scalar> out{Scalar(0), Scalar(1), Scalar(-1), Scalar::ratio(1, 2), Scalar::ratio(-1, 2),
                            Scalar(2), Scalar(-2), Scalar::ratio(1, 4), Scalar::ratio(-1, 4),
                            Scalar::ratio(3, 4), Scalar::ratio(-3, 4)};
    if (std::uint64_t p = v0_.modulus())
      for (Scalar& s : out) s = s.to_field(p);
    return out;
  }

  Tensor build(const Affine& a, const Vec& s) const {
    Tensor v = v0_;
    for (int i = 0; i < a.r.rows(); ++i) {
      Scalar t = a.p[i];
      for (int j = 0; j < a.r.cols(); ++j) t += a.r.at(i, j) * s[j];
      if (!t.is_zero()) {
        Tensor d = dirs_[i];
        d *= t;
        v += d;
      }
    }
    return v;
  }

  // every point of the remaining affine space solves the equations; look for an invertible one
  std::optional<Tensor> finish(const Affine& a) {
    int k = a.r.cols();
    std::vector<Vec> tries{Vec(k, Scalar(0))};
    for (int j = 0; j < k; ++j) {
      Vec e(k, Scalar(0));
      e[j] = Scalar(1);
      tries.push_back(e);
    }
    for (int round = 1; round <= 8; ++round) {
      Vec e(k);
      for (int j = 0; j < k; ++j) e[j] = Scalar((round * 7 + j * 13) % 5 - 2);
      tries.push_back(e);
    }
    for (const Vec& s : tries) {
      Tensor v = build(a, s);
      if (accept_(v)) return v;
    }
    return std::nullopt;
  }

  std::vector<Quadric> eqs_;
  Tensor v0_;
  std::vector<Tensor> dirs_;
  std::function<bool(const Tensor&)> accept_;
  long nodes_ = 0;
};

}  // namespace

std::optional<Tensor> find_twist_witness(const ComoduleAlgebra& from, const ComoduleAlgebra& to) {
  require_same_base(*from.base, *to.base);
  if (from.side != to.side || !same_algebra(from.algebra, to.algebra))
    throw Error(ErrorKind::VariantMismatch, "witness search needs two coactions of the same side on the same algebra");
  if (from.side == Side::left) {
    auto l = find_twist_witness(comodule_variant(from, ComoduleVariant::cop), comodule_variant(to, ComoduleVariant::cop));
    if (!l) return std::nullopt;
    return switch_legs(*l, 0, 1);
  }
  const QuasiBialgebra& h = *from.base;
  const auto& A = from.algebra;
  Legs C = from.coaction_legs(), P = from.phi_legs();
  Dims cd = dims_of(C);
  Tensor::Key n = volume_of(cd);
  int na = A->dim();
  std::uint64_t p = from.phi.modulus() ? from.phi.modulus() : to.phi.modulus();
  auto basis = [&](Tensor::Key k) {
    Tensor e(cd);
    e.add_key(k, p ? Scalar::residue(1, p) : Scalar(1));
    return e;
  };
  // linear part: V rho_from(a) - rho_to(a) V = 0 and (id (x) eps)(V) = 1
  Matrix m(0, static_cast<int>(n));
  Vec rhs;
  {
    std::vector<Vec> cols;
    for (Tensor::Key k = 0; k < n; ++k) {
      Tensor e = basis(k);
      Vec col;
      for (int a = 0; a < na; ++a) {
        Tensor u = A->basis(a);
        Tensor d = multiply(C, e, from.coaction(u));
        d -= multiply(C, to.coaction(u), e);
        for (Tensor::Key j = 0; j < n; ++j) col.push_back(d.get_key(j));
      }
      Tensor c = apply_linear_map(h.counit, e, 1);
      for (int j = 0; j < na; ++j) col.push_back(c.get_key(j));
      cols.push_back(std::move(col));
    }
    int rows = static_cast<int>(cols[0].size());
    for (int r = 0; r < rows; ++r) {
      Vec row(n);
      for (Tensor::Key k = 0; k < n; ++k) row[k] = cols[k][r];
      m.append_row(row);
      rhs.push_back(r >= rows - na ? A->unit().get_key(r - (rows - na)) : Scalar(0));
    }
  }
  auto x = solve(m, rhs);
  if (!x) return std::nullopt;
  auto null = nullspace(m);
  Tensor v0(cd);
  for (Tensor::Key k = 0; k < n; ++k)
    if (!(*x)[k].is_zero()) v0.add_key(k, (*x)[k]);
  std::vector<Tensor> dirs;
  for (const Vec& b : null) {
    Tensor t(cd);
    for (Tensor::Key k = 0; k < n; ++k)
      if (!b[k].is_zero()) t.add_key(k, b[k]);
    dirs.push_back(std::move(t));
  }
  int d = static_cast<int>(dirs.size());
  // quadratic part: Phi_to (V (x) 1)(rho_from (x) id)(V) - (id (x) Delta)(V) Phi_from = 0
  auto bil = [&](const Tensor& v, const Tensor& w) {
    return product(P, {to.phi, embed_legs(v, {0, 1}, P), apply_linear_map(from.coaction, w, 0)});
  };
  auto lin = [&](const Tensor& v) { return multiply(P, apply_linear_map(h.comult, v, 1), from.phi); };
  Dims pd = dims_of(P);
  Tensor::Key ne = volume_of(pd);
  std::vector<Quadric> eqs(ne, Quadric{Scalar(0), Vec(d), Matrix(d, d)});
  Tensor c0 = bil(v0, v0);
  c0 -= lin(v0);
  for (const auto& [k, v] : c0.entries()) eqs[k].c = v;
  for (int i = 0; i < d; ++i) {
    Tensor l = bil(dirs[i], v0);
    l += bil(v0, dirs[i]);
    l -= lin(dirs[i]);
    for (const auto& [k, v] : l.entries()) eqs[k].lin[i] = v;
    for (int j = 0; j < d; ++j) {
      Tensor q = bil(dirs[i], dirs[j]);
      for (const auto& [k, v] : q.entries()) eqs[k].quad.at(i, j) = v;
    }
  }
  eqs.erase(std::remove_if(eqs.begin(), eqs.end(),
                           [](const Quadric& q) { return q.c.is_zero() && zero_vec(q.lin) && zero_mat(q.quad); }),
            eqs.end());
  auto accept = [&](const Tensor& v) {
    if (!is_invertible(C, v)) return false;
    return verify_twist_witness(from, to, v).ok();
  };
  Affine start{Vec(d, Scalar(0)), Matrix::identity(d)};
  return Search(std::move(eqs), v0, dirs, accept).run(std::move(start), d);
}

ComoduleAlgebra to_field(const ComoduleAlgebra& x, std::uint64_t p) {
  ComoduleAlgebra t = x;
  t.base = to_field(x.base, p);
  t.algebra = x.algebra->to_field(p);
  t.coaction = x.coaction.to_field(p);
  t.phi = x.phi.to_field(p);
  t.phi_inv = x.phi_inv.to_field(p);
  return t;
}

BicomoduleAlgebra to_field(const BicomoduleAlgebra& a, std::uint64_t p) {
  BicomoduleAlgebra t = a;
  t.base = to_field(a.base, p);
  t.algebra = a.algebra->to_field(p);
  t.lambda = a.lambda.to_field(p);
  t.rho = a.rho.to_field(p);
  for (Tensor* x : {&t.phi_lambda, &t.phi_lambda_inv, &t.phi_rho, &t.phi_rho_inv, &t.phi_lr, &t.phi_lr_inv})
    *x = x->to_field(p);
  return t;
}

}  // namespace qhopf
