// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhopf/coring.hpp"

#include "qhopf/error.hpp"
#include "qhopf/sweedler.hpp"

namespace qhopf {

namespace {

using V = std::vector<std::string>;

Tensor e(int n, int i) { return Tensor::basis({n}, {i}); }

Sweedler lact(const Sweedler& s, const ModuleCoalgebra& c, const std::string& h, const std::string& x, const std::string& out) {
  return s.map(V{h, x}, *c.left_action, {Leg(out, c.dim)});
}

Sweedler ract(const Sweedler& s, const ModuleCoalgebra& c, const std::string& x, const std::string& h, const std::string& out) {
  return s.map(V{x, h}, *c.right_action, {Leg(out, c.dim)});
}

Scalar counit_at(const ModuleCoalgebra& c, int i) { return c.counit.image({i}).get_key(0); }

// 1 (x) w or w (x) 1 in the carrier
Tensor unit_fiber(const Coring& x, int wi) {
  const auto& R = x.ring;
  if (x.free_left) return R->unit().outer(e(x.fiber, wi)).reshaped({x.dim()});
  return e(x.fiber, wi).outer(R->unit()).reshaped({x.dim()});
}

// r.t and t.r for t in the normal form of X (x)_R X
Tensor left_on_pair(const Coring& x, const Tensor& r, const Tensor& t) {
  int X = x.dim(), w = x.fiber;
  if (x.free_left) return apply_linear_map(x.left_action, r.outer(t), 0);
  Tensor out({w, X});
  t.for_each([&](const Index& i, const Scalar& v) {
    out += x.tensor2(x.left_action(r.outer(unit_fiber(x, i[0]))), e(X, i[1])) * v;
  });
  return out;
}

Tensor right_on_pair(const Coring& x, const Tensor& t, const Tensor& r) {
  int X = x.dim(), w = x.fiber;
  if (!x.free_left) return apply_linear_map(x.right_action, t.outer(r), 1);
  Tensor out({X, w});
  const auto& R = x.ring;
  t.for_each([&](const Index& i, const Scalar& v) {
    Tensor one_w = R->unit().outer(e(w, i[1])).reshaped({X});
    out += x.tensor2(e(X, i[0]), x.right_action(one_w.outer(r))) * v;
  });
  return out;
}

}  // namespace

QuotientSpace::QuotientSpace(int ambient, const std::vector<Vec>& relations) : ambient_(ambient) {
  if (relations.empty()) return;
  Matrix m(0, ambient);
  for (const auto& r : relations) m.append_row(r);
  Echelon ech = rref(m);
  pivots_ = ech.pivots;
  for (std::size_t i = 0; i < pivots_.size(); ++i) rows_.push_back(ech.reduced.row(static_cast<int>(i)));
}

Vec QuotientSpace::reduce(Vec v) const {
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar c = v[pivots_[i]];
    if (c.is_zero()) continue;
    for (int j = 0; j < ambient_; ++j) v[j] -= c * rows_[i][j];
  }
  return v;
}

bool QuotientSpace::is_zero(const Vec& v) const {
  for (const auto& x : reduce(v))
    if (!x.is_zero()) return false;
  return true;
}

const char* to_string(CoringKind k) {
  switch (k) {
    case CoringKind::bc: return "bc";
    case CoringKind::ca: return "ca";
    case CoringKind::yd: return "yd";
  }
  return "?";
}

Tensor Coring::tensor2(const Tensor& x, const Tensor& y) const {
  int X = dim(), nr = ring->dim(), w = fiber;
  if (free_left) {
    // x (x)_R (r (x) w) = x.r (x) w
    Tensor out({X, w});
    y.for_each([&](const Index& i, const Scalar& v) {
      out += right_action(x.outer(e(nr, i[0] / w))).outer(e(w, i[0] % w)) * v;
    });
    return out;
  }
  // (w (x) r) (x)_R y = w (x) r.y
  Tensor out({w, X});
  x.for_each([&](const Index& i, const Scalar& v) {
    out += e(w, i[0] / nr).outer(left_action(e(nr, i[0] % nr).outer(y))) * v;
  });
  return out;
}

Coring build_coring_bc(const ComoduleAlgebra& b, const ModuleCoalgebra& c) {
  require_same_base(*b.base, *c.base);
  if (b.side != Side::left || c.side == ModuleSide::left)
    throw Error(ErrorKind::VariantMismatch, "expected a left comodule algebra and a right module coalgebra");
  const auto& H = b.base->algebra;
  const auto& B = b.algebra;
  int n = c.dim, db = B->dim(), X = db * n;
  Coring x;
  x.kind = CoringKind::bc;
  x.ring = B;
  x.fiber = n;
  x.free_left = true;
  x.left_action = LinMap::from_function({db, X}, {X}, [&](const Index& i) {
    return B->mul(B->basis(i[0]), B->basis(i[1] / n)).outer(e(n, i[1] % n)).reshaped({X});
  });
  // (b (x) c).b' = b b'[0] (x) c.b'[-1]
  x.right_action = LinMap::from_function({X, db}, {X}, [&](const Index& i) {
    Sweedler s = Sweedler::basis(B, i[0] / n, "b") * Sweedler(e(n, i[0] % n), {Leg("c", n)}) *
                 Sweedler(b.coaction(B->basis(i[1])), {{"bm", H}, {"b0", B}});
    return ract(s.mul({"b", "b0"}, "u"), c, "c", "bm", "v").take({"u", "v"}).reshaped({X});
  });
  // (b x3 (x) c2.x2) (x)_B (1 (x) c1.x1)
  x.comult = LinMap::from_function({X}, {X, n}, [&](const Index& i) {
    Sweedler s = Sweedler::basis(B, i[0] / n, "b") * Sweedler(c.comult(e(n, i[0] % n)), {Leg("c1", n), Leg("c2", n)}) *
                 Sweedler(b.phi_inv, {{"x1", H}, {"x2", H}, {"x3", B}});
    s = ract(ract(s.mul({"b", "x3"}, "u"), c, "c2", "x2", "v"), c, "c1", "x1", "w");
    return s.take({"u", "v", "w"}).reshaped({X, n});
  });
  x.counit = LinMap::from_function({X}, {db}, [&](const Index& i) { return B->basis(i[0] / n) * counit_at(c, i[0] % n); });
  return x;
}

Coring build_coring_ca(const ComoduleAlgebra& a, const ModuleCoalgebra& c) {
  require_same_base(*a.base, *c.base);
  if (a.side != Side::right || c.side == ModuleSide::right)
    throw Error(ErrorKind::VariantMismatch, "expected a right comodule algebra and a left module coalgebra");
  const auto& H = a.base->algebra;
  const auto& A = a.algebra;
  int n = c.dim, da = A->dim(), X = n * da;
  Coring x;
  x.kind = CoringKind::ca;
  x.ring = A;
  x.fiber = n;
  x.free_left = false;
  // a.(c (x) a') = a<1>.c (x) a<0> a'
  x.left_action = LinMap::from_function({da, X}, {X}, [&](const Index& i) {
    Sweedler s = Sweedler(a.coaction(A->basis(i[0])), {{"a0", A}, {"a1", H}}) * Sweedler(e(n, i[1] / da), {Leg("c", n)}) *
                 Sweedler::basis(A, i[1] % da, "u");
    return lact(s.mul({"a0", "u"}, "y"), c, "a1", "c", "z").take({"z", "y"}).reshaped({X});
  });
  x.right_action = LinMap::from_function({X, da}, {X}, [&](const Index& i) {
    return e(n, i[0] / da).outer(A->mul(A->basis(i[0] % da), A->basis(i[1]))).reshaped({X});
  });
  // (x3.c2 (x) 1) (x)_A (x2.c1 (x) x1 a)
  x.comult = LinMap::from_function({X}, {n, X}, [&](const Index& i) {
    Sweedler s = Sweedler(c.comult(e(n, i[0] / da)), {Leg("c1", n), Leg("c2", n)}) * Sweedler::basis(A, i[0] % da, "u") *
                 Sweedler(a.phi_inv, {{"x1", A}, {"x2", H}, {"x3", H}});
    s = lact(lact(s.mul({"x1", "u"}, "y"), c, "x3", "c2", "w"), c, "x2", "c1", "v");
    return s.take({"w", "v", "y"}).reshaped({n, X});
  });
  x.counit = LinMap::from_function({X}, {da}, [&](const Index& i) { return A->basis(i[0] % da) * counit_at(c, i[0] / da); });
  return x;
}

Coring build_coring_yd(const BicomoduleAlgebra& a, const ModuleCoalgebra& c) {
  require_same_base(*a.base, *c.base);
  if (c.side != ModuleSide::bi) throw Error(ErrorKind::VariantMismatch, "expected a bimodule coalgebra");
  const QuasiHopfAlgebra& h = require_antipode(*a.base);
  const auto& H = h.algebra;
  const auto& A = a.algebra;
  const LinMap& Si = h.S_inv();
  DrinfeldTwist dt = drinfeld_twist(h);
  int n = c.dim, da = A->dim(), X = n * da;
  Coring x;
  x.kind = CoringKind::yd;
  x.ring = A;
  x.fiber = n;
  x.free_left = false;
  // u.(c (x) u') = u[0]<1>.c.S^{-1}(u[-1]) (x) u[0]<0> u'
  x.left_action = LinMap::from_function({da, X}, {X}, [&](const Index& i) {
    Sweedler s = Sweedler(a.lambda(A->basis(i[0])), {{"um", H}, {"u0", A}})
                     .map("u0", a.rho, {{"v0", A}, {"v1", H}})
                     .apply("um", Si) *
                 Sweedler(e(n, i[1] / da), {Leg("c", n)}) * Sweedler::basis(A, i[1] % da, "w");
    s = ract(lact(s.mul({"v0", "w"}, "y"), c, "v1", "c", "p"), c, "p", "um", "z");
    return s.take({"z", "y"}).reshaped({X});
  });
  x.right_action = LinMap::from_function({X, da}, {X}, [&](const Index& i) {
    return e(n, i[0] / da).outer(A->mul(A->basis(i[0] % da), A->basis(i[1]))).reshaped({X});
  });
  Sweedler k = (Sweedler(a.phi_lr_inv, {{"t1", H}, {"t2", A}, {"t3", H}}) * Sweedler(a.phi_rho_inv, {{"r1", A}, {"r2", H}, {"r3", H}}))
                   .map("t2", a.rho, {{"t20", A}, {"t21", H}})
                   .mul({"t20", "r1"}, "tr")
                   .mul({"t21", "r2"}, "q1")
                   .mul({"t3", "r3"}, "q2");
  k = (k * Sweedler(a.phi_lambda, {{"L1", H}, {"L2", H}, {"L3", A}}))
          .map("L3", a.rho, {{"y0", A}, {"y1", H}})
          .map("y1", h.comult, {{"y11", H}, {"y12", H}})
          .mul({"tr", "y0"}, "z0")
          .mul({"q1", "y11"}, "h1")
          .mul({"q2", "y12"}, "h2");
  k = (k * sw(dt.f_inv, H, {"g1", "g2"})).mul({"t1", "L2", "g2"}, "k1").mul({"L1", "g1"}, "k2").apply("k1", Si).apply("k2", Si);
  x.comult = LinMap::from_function({X}, {n, X}, [&](const Index& i) {
    Sweedler s = (Sweedler(c.comult(e(n, i[0] / da)), {Leg("c1", n), Leg("c2", n)}) * Sweedler::basis(A, i[0] % da, "u") * k)
                     .mul({"z0", "u"}, "z");
    s = ract(lact(s, c, "h1", "c1", "p1"), c, "p1", "k1", "o1");
    s = ract(lact(s, c, "h2", "c2", "p2"), c, "p2", "k2", "o2");
    return s.take({"o2", "o1", "z"}).reshaped({n, X});
  });
  x.counit = LinMap::from_function({X}, {da}, [&](const Index& i) { return A->basis(i[0] % da) * counit_at(c, i[0] / da); });
  return x;
}

CheckReport verify_coring(const Coring& x) {
  CheckReport r;
  const auto& R = x.ring;
  int X = x.dim(), nr = R->dim(), w = x.fiber;
  auto ex = [&](int i) { return e(X, i); };
  auto la = [&](const Tensor& s, const Tensor& y) { return x.left_action(s.outer(y)); };
  auto ra = [&](const Tensor& y, const Tensor& s) { return x.right_action(y.outer(s)); };
  r.for_all("bimodule.left.unit", {X}, [&](const Index& i) { return CheckReport::Sides{la(R->unit(), ex(i[0])), ex(i[0])}; });
  r.for_all("bimodule.right.unit", {X}, [&](const Index& i) { return CheckReport::Sides{ra(ex(i[0]), R->unit()), ex(i[0])}; });
  r.for_all("bimodule.left.assoc", {nr, nr, X}, [&](const Index& i) {
    Tensor s = R->basis(i[0]), t = R->basis(i[1]);
    return CheckReport::Sides{la(R->mul(s, t), ex(i[2])), la(s, la(t, ex(i[2])))};
  });
  r.for_all("bimodule.right.assoc", {X, nr, nr}, [&](const Index& i) {
    Tensor s = R->basis(i[1]), t = R->basis(i[2]);
    return CheckReport::Sides{ra(ex(i[0]), R->mul(s, t)), ra(ra(ex(i[0]), s), t)};
  });
  r.for_all("bimodule.commute", {nr, X, nr}, [&](const Index& i) {
    Tensor s = R->basis(i[0]), t = R->basis(i[2]);
    return CheckReport::Sides{ra(la(s, ex(i[1])), t), la(s, ra(ex(i[1]), t))};
  });
  r.for_all("free", {nr, w}, [&](const Index& i) {
    Tensor s = R->basis(i[0]);
    if (x.free_left) return CheckReport::Sides{la(s, unit_fiber(x, i[1])), s.outer(e(w, i[1])).reshaped({X})};
    return CheckReport::Sides{ra(unit_fiber(x, i[1]), s), e(w, i[1]).outer(s).reshaped({X})};
  });
  // x (x)_R y in normal form against the quotient by x.r (x) y - x (x) r.y
  {
    std::vector<Vec> rels;
    Matrix nf(0, X * X);
    for (int i = 0; i < X; ++i)
      for (int k = 0; k < nr; ++k)
        for (int j = 0; j < X; ++j) {
          Tensor rel = ra(ex(i), R->basis(k)).outer(ex(j));
          rel -= ex(i).outer(la(R->basis(k), ex(j)));
          Vec v(static_cast<std::size_t>(X) * X);
          Tensor flat = rel.reshaped({X * X});
          for (const auto& [key, val] : flat.entries()) v[key] = val;
          rels.push_back(v);
        }
    QuotientSpace q(X * X, rels);
    Matrix m(X * w, X * X);
    bool kills = true;
    for (int i = 0; i < X; ++i)
      for (int j = 0; j < X; ++j) {
        Tensor flat = x.tensor2(ex(i), ex(j)).reshaped({X * w});
        for (const auto& [key, val] : flat.entries()) m.at(static_cast<int>(key), i * X + j) = val;
      }
    for (const auto& v : rels) {
      Vec img = m * v;
      for (const auto& s : img) kills = kills && s.is_zero();
    }
    r.expect("normal_form.dimension", q.dim() == X * w);
    r.expect("normal_form.relations", kills);
    r.expect("normal_form.onto", rank(m) == X * w);
  }
  r.for_all("comult.left", {nr, X}, [&](const Index& i) {
    Tensor s = R->basis(i[0]);
    return CheckReport::Sides{x.comult(la(s, ex(i[1]))), left_on_pair(x, s, x.comult(ex(i[1])))};
  });
  r.for_all("comult.right", {X, nr}, [&](const Index& i) {
    Tensor s = R->basis(i[1]);
    return CheckReport::Sides{x.comult(ra(ex(i[0]), s)), right_on_pair(x, x.comult(ex(i[0])), s)};
  });
  r.for_all("counit.left", {nr, X}, [&](const Index& i) {
    Tensor s = R->basis(i[0]);
    return CheckReport::Sides{x.counit(la(s, ex(i[1]))), R->mul(s, x.counit(ex(i[1])))};
  });
  r.for_all("counit.right", {X, nr}, [&](const Index& i) {
    Tensor s = R->basis(i[1]);
    return CheckReport::Sides{x.counit(ra(ex(i[0]), s)), R->mul(x.counit(ex(i[0])), s)};
  });
  r.for_all("counit.law.left", {X}, [&](const Index& i) {
    Tensor out({X});
    x.comult(ex(i[0])).for_each([&](const Index& j, const Scalar& v) {
      // eps(x') (1 (x) w) or eps(w (x) 1) x'
      if (x.free_left) out += la(x.counit(ex(j[0])), unit_fiber(x, j[1])) * v;
      else out += la(x.counit(unit_fiber(x, j[0])), ex(j[1])) * v;
    });
    return CheckReport::Sides{out, ex(i[0])};
  });
  r.for_all("counit.law.right", {X}, [&](const Index& i) {
    Tensor out({X});
    x.comult(ex(i[0])).for_each([&](const Index& j, const Scalar& v) {
      if (x.free_left) out += ra(ex(j[0]), x.counit(unit_fiber(x, j[1]))) * v;
      else out += ra(unit_fiber(x, j[0]), x.counit(ex(j[1]))) * v;
    });
    return CheckReport::Sides{out, ex(i[0])};
  });
  r.for_all("coassoc", {X}, [&](const Index& i) {
    Tensor d = x.comult(ex(i[0]));
    if (x.free_left) {
      Tensor lhs = apply_linear_map(x.comult, d, 0);
      Tensor rhs({X, w, w});
      d.for_each([&](const Index& j, const Scalar& v) {
        // x' (x)_R Delta(1 (x) w) = x'.r (x) w1 (x) w2
        x.comult(unit_fiber(x, j[1])).for_each([&](const Index& k, const Scalar& u) {
          int ri = k[0] / w, w1 = k[0] % w;
          rhs += ra(ex(j[0]), R->basis(ri)).outer(e(w, w1)).outer(e(w, k[1])) * (v * u);
        });
      });
      return CheckReport::Sides{lhs, rhs};
    }
    Tensor lhs = apply_linear_map(x.comult, d, 1);
    Tensor rhs({w, w, X});
    d.for_each([&](const Index& j, const Scalar& v) {
      // Delta(w (x) 1) (x)_R x' = w1 (x) w2 (x) r.x'
      x.comult(unit_fiber(x, j[0])).for_each([&](const Index& k, const Scalar& u) {
        int w2 = k[1] / nr, ri = k[1] % nr;
        rhs += e(w, k[0]).outer(e(w, w2)).outer(la(R->basis(ri), ex(j[1]))) * (v * u);
      });
    });
    return CheckReport::Sides{rhs, lhs};
  });
  return r;
}

CheckReport verify_coring_comodule(const CoringComodule& m, const Coring& x) {
  if (!x.free_left) throw Error(ErrorKind::VariantMismatch, "right comodules are supported over corings free on the left");
  const FiniteModule& M = m.module;
  if (M.action_side != Side::right || !same_algebra(M.algebra, x.ring))
    throw Error(ErrorKind::MixedBase, "expected a right module over the base ring");
  const auto& R = x.ring;
  int d = M.dim, w = x.fiber, nr = R->dim();
  if (m.coaction.source() != Dims{d} || m.coaction.target() != Dims{d, w}) throw Error(ErrorKind::ShapeMismatch, "coaction shape");
  CheckReport r;
  r.merge(verify_module(M));
  auto em = [&](int i) { return e(d, i); };
  r.for_all("comodule.counit", {d}, [&](const Index& i) {
    Tensor out({d});
    m.coaction(em(i[0])).for_each([&](const Index& j, const Scalar& v) {
      out += M.act(x.counit(unit_fiber(x, j[1])), em(j[0])) * v;
    });
    return CheckReport::Sides{out, em(i[0])};
  });
  r.for_all("comodule.coassoc", {d}, [&](const Index& i) {
    Tensor p = m.coaction(em(i[0]));
    Tensor rhs({d, w, w});
    p.for_each([&](const Index& j, const Scalar& v) {
      x.comult(unit_fiber(x, j[1])).for_each([&](const Index& k, const Scalar& u) {
        rhs += M.act(R->basis(k[0] / w), em(j[0])).outer(e(w, k[0] % w)).outer(e(w, k[1])) * (v * u);
      });
    });
    return CheckReport::Sides{apply_linear_map(m.coaction, p, 0), rhs};
  });
  r.for_all("comodule.linear", {d, nr}, [&](const Index& i) {
    Tensor s = R->basis(i[1]);
    Tensor rhs({d, w});
    m.coaction(em(i[0])).for_each([&](const Index& j, const Scalar& v) {
      x.right_action(unit_fiber(x, j[1]).outer(s)).for_each([&](const Index& k, const Scalar& u) {
        rhs += M.act(R->basis(k[0] / w), em(j[0])).outer(e(w, k[0] % w)) * (v * u);
      });
    });
    return CheckReport::Sides{m.coaction(M.act(s, em(i[0]))), rhs};
  });
  return r;
}

CoringComodule doihopf_to_coring_comodule(const FiniteModule& m, const DoiHopfContext& ctx) {
  if (ctx.variant != DoiHopfVariant::right_left) throw Error(ErrorKind::VariantMismatch, "expected a right-left context");
  if (!m.coaction || m.coaction_side != Side::left) throw Error(ErrorKind::VariantMismatch, "expected a left coaction");
  CoringComodule out;
  out.module = m;
  out.module.coaction.reset();
  const LinMap& l = *m.coaction;
  // m{0} (x)_B (1 (x) m{-1})
  out.coaction = LinMap(l.source(), {l.target()[1], l.target()[0]});
  for (Tensor::Key k = 0; k < l.source_volume(); ++k) out.coaction.column(k) = switch_legs(l.column(k), 0, 1);
  return out;
}

FiniteModule coring_comodule_to_doihopf(const CoringComodule& m, const DoiHopfContext& ctx) {
  if (ctx.variant != DoiHopfVariant::right_left) throw Error(ErrorKind::VariantMismatch, "expected a right-left context");
  FiniteModule out = m.module;
  const LinMap& p = m.coaction;
  LinMap l(p.source(), {p.target()[1], p.target()[0]});
  for (Tensor::Key k = 0; k < p.source_volume(); ++k) l.column(k) = switch_legs(p.column(k), 0, 1);
  out.coaction = l;
  out.coaction_side = Side::left;
  return out;
}

}  // namespace qhopf
