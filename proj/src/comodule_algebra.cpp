// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhopf/comodule_algebra.hpp"

#include "qhopf/error.hpp"

namespace qhopf {

Legs ComoduleAlgebra::coaction_legs() const {
  return side == Side::right ? Legs{algebra, base->algebra} : Legs{base->algebra, algebra};
}

Legs ComoduleAlgebra::phi_legs() const {
  return side == Side::right ? Legs{algebra, base->algebra, base->algebra} : Legs{base->algebra, base->algebra, algebra};
}

ComoduleAlgebra make_comodule_algebra(Side side, BialgebraRef base, AlgebraRef algebra, LinMap coaction, Tensor phi) {
  ComoduleAlgebra x;
  x.side = side;
  x.base = std::move(base);
  x.algebra = std::move(algebra);
  Dims cd = dims_of(x.coaction_legs());
  if (coaction.source() != Dims{x.algebra->dim()} || coaction.target() != cd)
    throw Error(ErrorKind::ShapeMismatch, "coaction shape");
  if (phi.dims() != dims_of(x.phi_legs())) throw Error(ErrorKind::ShapeMismatch, "comodule reassociator shape");
  x.coaction = std::move(coaction);
  x.phi_inv = invert_element(x.phi_legs(), phi);
  x.phi = std::move(phi);
  return x;
}

ComoduleAlgebra regular_comodule_algebra(const BialgebraRef& h, Side side) {
  ComoduleAlgebra x;
  x.side = side;
  x.base = h;
  x.algebra = h->algebra;
  x.coaction = h->comult;
  x.phi = h->phi;
  x.phi_inv = h->phi_inv;
  return x;
}

bool same_base(const QuasiBialgebra& a, const QuasiBialgebra& b) {
  if (&a == &b) return true;
  return same_algebra(a.algebra, b.algebra) && a.comult == b.comult && a.counit == b.counit && a.phi == b.phi;
}

void require_same_base(const QuasiBialgebra& a, const QuasiBialgebra& b) {
  if (!same_base(a, b)) throw Error(ErrorKind::MixedBase, "structures live over different quasi-bialgebras");
}

BialgebraRef base_variant(const BialgebraRef& b, Variant v) {
  if (auto h = std::dynamic_pointer_cast<const QuasiHopfAlgebra>(b)) return std::make_shared<QuasiHopfAlgebra>(variant(*h, v));
  return std::make_shared<QuasiBialgebra>(variant(*b, v));
}

BialgebraRef to_field(const BialgebraRef& b, std::uint64_t p) {
  if (auto h = std::dynamic_pointer_cast<const QuasiHopfAlgebra>(b)) return std::make_shared<QuasiHopfAlgebra>(to_field(*h, p));
  auto t = std::make_shared<QuasiBialgebra>(*b);
  t->algebra = b->algebra->to_field(p);
  t->comult = b->comult.to_field(p);
  t->counit = b->counit.to_field(p);
  t->phi = b->phi.to_field(p);
  t->phi_inv = b->phi_inv.to_field(p);
  return t;
}

CheckReport verify_comodule_algebra(const ComoduleAlgebra& x) {
  const QuasiBialgebra& h = *x.base;
  const auto& A = x.algebra;
  int n = A->dim();
  Legs C = x.coaction_legs(), P = x.phi_legs();
  bool right = x.side == Side::right;
  std::string s = right ? "rca" : "lca";
  CheckReport r = verify_algebra(*A, "A.");
  r.for_all("coaction.mult", {n, n}, [&](const Index& i) {
    Tensor a = A->basis(i[0]), b = A->basis(i[1]);
    return CheckReport::Sides{x.coaction(A->mul(a, b)), multiply(C, x.coaction(a), x.coaction(b))};
  });
  r.compare("coaction.unit", x.coaction(A->unit()), unit_of(C));
  r.compare("phi.inverse", stack({multiply(P, x.phi, x.phi_inv), multiply(P, x.phi_inv, x.phi)}),
            stack({unit_of(P), unit_of(P)}));
  if (right) {
    r.for_all(s + "1", {n}, [&](const Index& i) {
      Tensor c = x.coaction(A->basis(i[0]));
      return CheckReport::Sides{multiply(P, x.phi, apply_linear_map(x.coaction, c, 0)),
                                multiply(P, apply_linear_map(h.comult, c, 1), x.phi)};
    });
    Legs Q{A, h.algebra, h.algebra, h.algebra};
    Tensor lhs = product(Q, {embed_legs(h.phi, {1, 2, 3}, Q), apply_linear_map(h.comult, x.phi, 1),
                             embed_legs(x.phi, {0, 1, 2}, Q)});
    Tensor rhs = multiply(Q, apply_linear_map(h.comult, x.phi, 2), apply_linear_map(x.coaction, x.phi, 0));
    r.compare(s + "2", lhs, rhs);
    r.for_all(s + "3", {n}, [&](const Index& i) {
      Tensor a = A->basis(i[0]);
      return CheckReport::Sides{apply_linear_map(h.counit, x.coaction(a), 1), a};
    });
    Legs AH{A, h.algebra};
    r.compare(s + "4", stack({apply_linear_map(h.counit, x.phi, 1), apply_linear_map(h.counit, x.phi, 2)}),
              stack({unit_of(AH), unit_of(AH)}));
  } else {
    r.for_all(s + "1", {n}, [&](const Index& i) {
      Tensor c = x.coaction(A->basis(i[0]));
      return CheckReport::Sides{multiply(P, apply_linear_map(x.coaction, c, 1), x.phi),
                                multiply(P, x.phi, apply_linear_map(h.comult, c, 0))};
    });
    Legs Q{h.algebra, h.algebra, h.algebra, A};
    Tensor lhs = product(Q, {embed_legs(x.phi, {1, 2, 3}, Q), apply_linear_map(h.comult, x.phi, 1),
                             embed_legs(h.phi, {0, 1, 2}, Q)});
    Tensor rhs = multiply(Q, apply_linear_map(x.coaction, x.phi, 2), apply_linear_map(h.comult, x.phi, 0));
    r.compare(s + "2", lhs, rhs);
    r.for_all(s + "3", {n}, [&](const Index& i) {
      Tensor a = A->basis(i[0]);
      return CheckReport::Sides{apply_linear_map(h.counit, x.coaction(a), 0), a};
    });
    Legs HA{h.algebra, A};
    r.compare(s + "4", stack({apply_linear_map(h.counit, x.phi, 1), apply_linear_map(h.counit, x.phi, 0)}),
              stack({unit_of(HA), unit_of(HA)}));
  }
  return r;
}

ComoduleAlgebra twist_comodule_algebra(const ComoduleAlgebra& x, const Tensor& v) {
  const QuasiBialgebra& h = *x.base;
  Legs C = x.coaction_legs(), P = x.phi_legs();
  if (v.dims() != dims_of(C)) throw Error(ErrorKind::ShapeMismatch, "twist witness shape");
  bool right = x.side == Side::right;
  if (apply_linear_map(h.counit, v, right ? 1 : 0) != x.algebra->unit())
    throw Error(ErrorKind::WitnessNotNormalized, right ? "(id (x) eps)(V) must be 1" : "(eps (x) id)(U) must be 1");
  Tensor vi = invert_element(C, v);
  ComoduleAlgebra t = x;
  t.coaction = LinMap::from_function({x.algebra->dim()}, dims_of(C), [&](const Index& i) {
    return product(C, {v, x.coaction(x.algebra->basis(i[0])), vi});
  });
  if (right) {
    t.phi = product(P, {apply_linear_map(h.comult, v, 1), x.phi, apply_linear_map(x.coaction, vi, 0),
                        embed_legs(vi, {0, 1}, P)});
    t.phi_inv = product(P, {embed_legs(v, {0, 1}, P), apply_linear_map(x.coaction, v, 0), x.phi_inv,
                            apply_linear_map(h.comult, vi, 1)});
  } else {
    t.phi = product(P, {embed_legs(v, {1, 2}, P), apply_linear_map(x.coaction, v, 1), x.phi,
                        apply_linear_map(h.comult, vi, 0)});
    t.phi_inv = product(P, {apply_linear_map(h.comult, v, 0), x.phi_inv, apply_linear_map(x.coaction, vi, 1),
                            embed_legs(vi, {1, 2}, P)});
  }
  return t;
}

ComoduleAlgebra gauge_twist_comodule_algebra(const ComoduleAlgebra& x, const GaugeTransformation& g) {
  ComoduleAlgebra t = x;
  if (auto hq = std::dynamic_pointer_cast<const QuasiHopfAlgebra>(x.base))
    t.base = std::make_shared<QuasiHopfAlgebra>(gauge_twist(*hq, g));
  else
    t.base = std::make_shared<QuasiBialgebra>(gauge_twist(*x.base, g));
  Legs P = x.phi_legs();
  if (x.side == Side::right) {
    t.phi = multiply(P, embed_legs(g.F, {1, 2}, P), x.phi);
    t.phi_inv = multiply(P, x.phi_inv, embed_legs(g.F_inv, {1, 2}, P));
  } else {
    t.phi = multiply(P, x.phi, embed_legs(g.F_inv, {0, 1}, P));
    t.phi_inv = multiply(P, embed_legs(g.F, {0, 1}, P), x.phi_inv);
  }
  return t;
}

const char* to_string(ComoduleVariant v) {
  switch (v) {
    case ComoduleVariant::cop: return "cop";
    case ComoduleVariant::opcop: return "opcop";
    case ComoduleVariant::op: return "op";
    case ComoduleVariant::to_right_op: return "right-op";
  }
  return "?";
}

ComoduleVariant parse_comodule_variant(const std::string& s) {
  if (s == "cop") return ComoduleVariant::cop;
  if (s == "opcop") return ComoduleVariant::opcop;
  if (s == "op") return ComoduleVariant::op;
  if (s == "right-op") return ComoduleVariant::to_right_op;
  throw Error(ErrorKind::UsageError, "unknown comodule variant '" + s + "'");
}

namespace {

LinMap switch_coaction(const LinMap& c) {
  LinMap m(c.source(), {c.target()[1], c.target()[0]});
  for (Tensor::Key k = 0; k < c.source_volume(); ++k) m.column(k) = switch_legs(c.column(k), 0, 1);
  return m;
}

}  // namespace

ComoduleAlgebra comodule_variant(const ComoduleAlgebra& x, ComoduleVariant v) {
  ComoduleAlgebra t;
  Side other = x.side == Side::right ? Side::left : Side::right;
  switch (v) {
    case ComoduleVariant::cop:
      t.side = other;
      t.base = base_variant(x.base, Variant::cop);
      t.algebra = x.algebra;
      t.coaction = switch_coaction(x.coaction);
      t.phi = x.phi_inv.permuted({2, 1, 0});
      t.phi_inv = x.phi.permuted({2, 1, 0});
      return t;
    case ComoduleVariant::opcop:
      t.side = other;
      t.base = base_variant(x.base, Variant::opcop);
      t.algebra = x.algebra->op();
      t.coaction = switch_coaction(x.coaction);
      t.phi = x.phi.permuted({2, 1, 0});
      t.phi_inv = x.phi_inv.permuted({2, 1, 0});
      return t;
    case ComoduleVariant::op:
      t.side = x.side;
      t.base = base_variant(x.base, Variant::op);
      t.algebra = x.algebra->op();
      t.coaction = x.coaction;
      t.phi = x.phi_inv;
      t.phi_inv = x.phi;
      return t;
    case ComoduleVariant::to_right_op:
      break;
  }
  if (x.side != Side::left)
    throw Error(ErrorKind::VariantMismatch, "the passage to right H^op-comodule algebras starts from a left comodule algebra");
  const QuasiHopfAlgebra& h = require_antipode(*x.base);
  const LinMap& Si = h.S_inv();
  const auto& H = h.algebra;
  const auto& B = x.algebra;
  DrinfeldTwist dt = drinfeld_twist(h);
  t.side = Side::right;
  t.base = base_variant(x.base, Variant::op);
  t.algebra = B;
  t.coaction = LinMap::from_function({B->dim()}, {B->dim(), H->dim()}, [&](const Index& i) {
    return Sweedler(x.coaction(B->basis(i[0])), {{"m", H}, {"z", B}}).apply("m", Si).take({"z", "m"});
  });
  Sweedler xs = Sweedler(x.phi_inv, {{"x1", H}, {"x2", H}, {"x3", B}}) * sw(dt.f, H, {"f1", "f2"});
  t.phi = xs.mul({"f2", "x2"}, "a").mul({"f1", "x1"}, "b").apply("a", Si).apply("b", Si).take({"x3", "a", "b"});
  t.phi_inv = invert_element(t.phi_legs(), t.phi);
  return t;
}

TildeElements tilde_elements(const ComoduleAlgebra& x) {
  const QuasiHopfAlgebra& h = require_antipode(*x.base);
  const auto& H = h.algebra;
  const auto& A = x.algebra;
  const LinMap& S = h.S();
  Sweedler al = Sweedler::element(H, h.alpha, "al"), be = Sweedler::element(H, h.beta, "be");
  TildeElements t;
  if (x.side == Side::left) {
    const LinMap& Si = h.S_inv();
    t.p = (Sweedler(x.phi, {{"X1", H}, {"X2", H}, {"X3", A}}) * be)
              .mul({"X1", "be"}, "s")
              .apply("s", Si)
              .mul({"X2", "s"}, "p1")
              .take({"p1", "X3"});
    t.q = (Sweedler(x.phi_inv, {{"x1", H}, {"x2", H}, {"x3", A}}).apply("x1", S) * al)
              .mul({"x1", "al", "x2"}, "q1")
              .take({"q1", "x3"});
  } else {
    t.p = (Sweedler(x.phi_inv, {{"x1", A}, {"x2", H}, {"x3", H}}).apply("x3", S) * be)
              .mul({"x2", "be", "x3"}, "p2")
              .take({"x1", "p2"});
    const LinMap& Si = h.S_inv();
    t.q = (Sweedler(x.phi, {{"X1", A}, {"X2", H}, {"X3", H}}) * al)
              .mul({"al", "X3"}, "s")
              .apply("s", Si)
              .mul({"s", "X2"}, "q2")
              .take({"X1", "q2"});
  }
  return t;
}

CheckReport verify_tilde_identities(const ComoduleAlgebra& x) {
  const QuasiHopfAlgebra& h = require_antipode(*x.base);
  const auto& H = h.algebra;
  const auto& A = x.algebra;
  const LinMap& S = h.S();
  const LinMap& Si = h.S_inv();
  const LinMap& co = x.coaction;
  TildeElements t = tilde_elements(x);
  CheckReport r;
  int n = A->dim();
  Legs C = x.coaction_legs();
  if (x.side == Side::left) {
    Sweedler p(t.p, {{"p1", H}, {"p2", A}}), q(t.q, {{"q1", H}, {"q2", A}});
    r.for_all("tpql1", {n}, [&](const Index& i) {
      Tensor b = A->basis(i[0]);
      Tensor lhs = (Sweedler(co(b), {{"bm", H}, {"b0", A}}).map("b0", co, {{"c1", H}, {"c0", A}}).apply("bm", Si) * p)
                       .mul({"c1", "p1", "bm"}, "r1")
                       .mul({"c0", "p2"}, "r2")
                       .take({"r1", "r2"});
      return CheckReport::Sides{lhs, multiply(C, t.p, embed_legs(b, {1}, C))};
    });
    r.for_all("tpql1a", {n}, [&](const Index& i) {
      Tensor b = A->basis(i[0]);
      Tensor lhs = (Sweedler(co(b), {{"bm", H}, {"b0", A}}).map("b0", co, {{"c1", H}, {"c0", A}}).apply("bm", S) * q)
                       .mul({"bm", "q1", "c1"}, "r1")
                       .mul({"q2", "c0"}, "r2")
                       .take({"r1", "r2"});
      return CheckReport::Sides{lhs, multiply(C, embed_legs(b, {1}, C), t.q)};
    });
    Tensor l2 = (q.map("q2", co, {{"c1", H}, {"c0", A}}).apply("q1", Si) * p)
                    .mul({"c1", "p1", "q1"}, "r1")
                    .mul({"c0", "p2"}, "r2")
                    .take({"r1", "r2"});
    r.compare("tpql2", l2, unit_of(C));
    Tensor l2a = (p.map("p2", co, {{"c1", H}, {"c0", A}}).apply("p1", S) * q)
                     .mul({"p1", "q1", "c1"}, "r1")
                     .mul({"q2", "c0"}, "r2")
                     .take({"r1", "r2"});
    r.compare("tpql2a", l2a, unit_of(C));
    DrinfeldTwist dt = drinfeld_twist(h);
    Legs P = x.phi_legs();
    Tensor lhs = product(P, {x.phi_inv, apply_linear_map(co, t.p, 1), embed_legs(t.p, {1, 2}, P)});
    Tensor rhs = (Sweedler(x.phi, {{"X1", H}, {"X2", H}, {"X3", A}}) * p * sw(dt.f_inv, H, {"g1", "g2"}))
                     .map("X3", co, {{"c1", H}, {"c0", A}})
                     .mul({"c1", "p1"}, "z1")
                     .mul({"c0", "p2"}, "z2")
                     .map("z1", h.comult, {{"z11", H}, {"z12", H}})
                     .mul({"X2", "g2"}, "s1")
                     .mul({"X1", "g1"}, "s2")
                     .apply("s1", Si)
                     .apply("s2", Si)
                     .mul({"z11", "s1"}, "r1")
                     .mul({"z12", "s2"}, "r2")
                     .take({"r1", "r2", "z2"});
    r.compare("tpl", lhs, rhs);
    lhs = product(P, {embed_legs(t.q, {1, 2}, P), apply_linear_map(co, t.q, 1), x.phi});
    rhs = (Sweedler(x.phi_inv, {{"x1", H}, {"x2", H}, {"x3", A}}) * q * sw(dt.f, H, {"f1", "f2"}))
              .map("x3", co, {{"c1", H}, {"c0", A}})
              .mul({"q1", "c1"}, "z1")
              .mul({"q2", "c0"}, "z2")
              .map("z1", h.comult, {{"z11", H}, {"z12", H}})
              .apply("x1", S)
              .apply("x2", S)
              .mul({"x2", "f1", "z11"}, "r1")
              .mul({"x1", "f2", "z12"}, "r2")
              .take({"r1", "r2", "z2"});
    r.compare("tql", lhs, rhs);
  } else {
    Sweedler p(t.p, {{"p1", A}, {"p2", H}}), q(t.q, {{"q1", A}, {"q2", H}});
    r.for_all("rtp1", {n}, [&](const Index& i) {
      Tensor a = A->basis(i[0]);
      Tensor lhs = (Sweedler(co(a), {{"a0", A}, {"a1", H}}).map("a0", co, {{"c0", A}, {"c1", H}}).apply("a1", S) * p)
                       .mul({"c0", "p1"}, "r1")
                       .mul({"c1", "p2", "a1"}, "r2")
                       .take({"r1", "r2"});
      return CheckReport::Sides{lhs, multiply(C, t.p, embed_legs(a, {0}, C))};
    });
    r.for_all("rtq1", {n}, [&](const Index& i) {
      Tensor a = A->basis(i[0]);
      Tensor lhs = (Sweedler(co(a), {{"a0", A}, {"a1", H}}).map("a0", co, {{"c0", A}, {"c1", H}}).apply("a1", Si) * q)
                       .mul({"q1", "c0"}, "r1")
                       .mul({"a1", "q2", "c1"}, "r2")
                       .take({"r1", "r2"});
      return CheckReport::Sides{lhs, multiply(C, embed_legs(a, {0}, C), t.q)};
    });
    Tensor l2 = (q.map("q1", co, {{"c0", A}, {"c1", H}}).apply("q2", S) * p)
                    .mul({"c0", "p1"}, "r1")
                    .mul({"c1", "p2", "q2"}, "r2")
                    .take({"r1", "r2"});
    r.compare("rtp2", l2, unit_of(C));
    Tensor l2a = (p.map("p1", co, {{"c0", A}, {"c1", H}}).apply("p2", Si) * q)
                     .mul({"q1", "c0"}, "r1")
                     .mul({"p2", "q2", "c1"}, "r2")
                     .take({"r1", "r2"});
    r.compare("rtq2", l2a, unit_of(C));
  }
  return r;
}

ComoduleAlgebra BicomoduleAlgebra::left() const {
  ComoduleAlgebra x;
  x.side = Side::left;
  x.base = base;
  x.algebra = algebra;
  x.coaction = lambda;
  x.phi = phi_lambda;
  x.phi_inv = phi_lambda_inv;
  return x;
}

ComoduleAlgebra BicomoduleAlgebra::right() const {
  ComoduleAlgebra x;
  x.side = Side::right;
  x.base = base;
  x.algebra = algebra;
  x.coaction = rho;
  x.phi = phi_rho;
  x.phi_inv = phi_rho_inv;
  return x;
}

BicomoduleAlgebra make_bicomodule_algebra(const ComoduleAlgebra& left, const ComoduleAlgebra& right, Tensor phi_lr) {
  if (left.side != Side::left || right.side != Side::right) throw Error(ErrorKind::VariantMismatch, "expected a left and a right coaction");
  require_same_base(*left.base, *right.base);
  if (!same_algebra(left.algebra, right.algebra)) throw Error(ErrorKind::MixedBase, "coactions on different algebras");
  BicomoduleAlgebra a;
  a.base = left.base;
  a.algebra = left.algebra;
  a.lambda = left.coaction;
  a.rho = right.coaction;
  a.phi_lambda = left.phi;
  a.phi_lambda_inv = left.phi_inv;
  a.phi_rho = right.phi;
  a.phi_rho_inv = right.phi_inv;
  Legs L{a.base->algebra, a.algebra, a.base->algebra};
  if (phi_lr.dims() != dims_of(L)) throw Error(ErrorKind::ShapeMismatch, "Phi_lambda,rho shape");
  a.phi_lr_inv = invert_element(L, phi_lr);
  a.phi_lr = std::move(phi_lr);
  return a;
}

BicomoduleAlgebra regular_bicomodule_algebra(const BialgebraRef& h) {
  BicomoduleAlgebra a;
  a.base = h;
  a.algebra = h->algebra;
  a.lambda = a.rho = h->comult;
  a.phi_lambda = a.phi_rho = a.phi_lr = h->phi;
  a.phi_lambda_inv = a.phi_rho_inv = a.phi_lr_inv = h->phi_inv;
  return a;
}

CheckReport verify_bicomodule_algebra(const BicomoduleAlgebra& a) {
  CheckReport r;
  r.merge(verify_comodule_algebra(a.left()), "left.");
  r.merge(verify_comodule_algebra(a.right()), "right.");
  const QuasiBialgebra& h = *a.base;
  const auto& H = h.algebra;
  const auto& A = a.algebra;
  Legs L{H, A, H};
  r.compare("philr.inverse", stack({multiply(L, a.phi_lr, a.phi_lr_inv), multiply(L, a.phi_lr_inv, a.phi_lr)}),
            stack({unit_of(L), unit_of(L)}));
  r.for_all("bca1", {A->dim()}, [&](const Index& i) {
    Tensor u = A->basis(i[0]);
    return CheckReport::Sides{multiply(L, a.phi_lr, apply_linear_map(a.lambda, a.rho(u), 0)),
                              multiply(L, apply_linear_map(a.rho, a.lambda(u), 1), a.phi_lr)};
  });
  Legs Q2{H, H, A, H};
  Tensor lhs = product(Q2, {embed_legs(a.phi_lr, {1, 2, 3}, Q2), apply_linear_map(a.lambda, a.phi_lr, 1),
                            embed_legs(a.phi_lambda, {0, 1, 2}, Q2)});
  Tensor rhs = multiply(Q2, apply_linear_map(a.rho, a.phi_lambda, 2), apply_linear_map(h.comult, a.phi_lr, 0));
  r.compare("bca2", lhs, rhs);
  Legs Q3{H, A, H, H};
  lhs = product(Q3, {embed_legs(a.phi_rho, {1, 2, 3}, Q3), apply_linear_map(a.rho, a.phi_lr, 1),
                     embed_legs(a.phi_lr, {0, 1, 2}, Q3)});
  rhs = multiply(Q3, apply_linear_map(h.comult, a.phi_lr, 2), apply_linear_map(a.lambda, a.phi_rho, 0));
  r.compare("bca3", lhs, rhs);
  r.compare("philr.counit", apply_linear_map(h.counit, a.phi_lr, 2), unit_of({H, A}));
  r.compare("philr.counit.left", apply_linear_map(h.counit, a.phi_lr, 0), unit_of({A, H}));
  return r;
}

BicomoduleAlgebra bicomodule_variant(const BicomoduleAlgebra& a, Variant v) {
  BicomoduleAlgebra t;
  t.base = base_variant(a.base, v);
  t.algebra = v == Variant::cop ? a.algebra : a.algebra->op();
  auto sw_map = [](const LinMap& c) {
    LinMap m(c.source(), {c.target()[1], c.target()[0]});
    for (Tensor::Key k = 0; k < c.source_volume(); ++k) m.column(k) = switch_legs(c.column(k), 0, 1);
    return m;
  };
  auto rev = [](const Tensor& x) { return x.permuted({2, 1, 0}); };
  switch (v) {
    case Variant::cop:
      t.lambda = sw_map(a.rho);
      t.rho = sw_map(a.lambda);
      t.phi_lambda = rev(a.phi_rho_inv);
      t.phi_lambda_inv = rev(a.phi_rho);
      t.phi_rho = rev(a.phi_lambda_inv);
      t.phi_rho_inv = rev(a.phi_lambda);
      t.phi_lr = rev(a.phi_lr_inv);
      t.phi_lr_inv = rev(a.phi_lr);
      break;
    case Variant::opcop:
      t.lambda = sw_map(a.rho);
      t.rho = sw_map(a.lambda);
      t.phi_lambda = rev(a.phi_rho);
      t.phi_lambda_inv = rev(a.phi_rho_inv);
      t.phi_rho = rev(a.phi_lambda);
      t.phi_rho_inv = rev(a.phi_lambda_inv);
      t.phi_lr = rev(a.phi_lr);
      t.phi_lr_inv = rev(a.phi_lr_inv);
      break;
    case Variant::op:
      t.lambda = a.lambda;
      t.rho = a.rho;
      t.phi_lambda = a.phi_lambda_inv;
      t.phi_lambda_inv = a.phi_lambda;
      t.phi_rho = a.phi_rho_inv;
      t.phi_rho_inv = a.phi_rho;
      t.phi_lr = a.phi_lr_inv;
      t.phi_lr_inv = a.phi_lr;
      break;
  }
  return t;
}

CoactionPair bicomodule_to_left_HHop(const BicomoduleAlgebra& a) {
  const QuasiHopfAlgebra& h = require_antipode(*a.base);
  const LinMap& Si = h.S_inv();
  const auto& H = h.algebra;
  const auto& A = a.algebra;
  auto K = std::make_shared<QuasiHopfAlgebra>(tensor_product(h, variant(h, Variant::op)));
  const auto& KA = K->algebra;
  DrinfeldTwist dt = drinfeld_twist(h);
  int n = A->dim();
  CoactionPair out;
  out.base = K;
  LinMap l1 = LinMap::from_function({n}, {KA->dim(), n}, [&](const Index& i) {
    return Sweedler(a.rho(A->basis(i[0])), {{"u0", A}, {"u1", H}})
        .map("u0", a.lambda, {{"m", H}, {"z", A}})
        .apply("u1", Si)
        .fuse({"m", "u1"}, {"k", KA})
        .take({"k", "z"});
  });
  LinMap l2 = LinMap::from_function({n}, {KA->dim(), n}, [&](const Index& i) {
    return Sweedler(a.lambda(A->basis(i[0])), {{"m", H}, {"u0", A}})
        .map("u0", a.rho, {{"z", A}, {"r", H}})
        .apply("r", Si)
        .fuse({"m", "r"}, {"k", KA})
        .take({"k", "z"});
  });
  Sweedler s1 = (Sweedler(a.phi_lr, {{"T1", H}, {"T2", A}, {"T3", H}}).map("T2", a.lambda, {{"T2m", H}, {"T20", A}}) *
                 Sweedler(a.phi_lambda, {{"X1", H}, {"X2", H}, {"X3", A}}))
                    .mul({"T1", "X1"}, "c1")
                    .mul({"T2m", "X2"}, "c2")
                    .mul({"T20", "X3"}, "c0");
  s1 = (s1 * Sweedler(a.phi_rho_inv, {{"x1", A}, {"x2", H}, {"x3", H}})
                 .map("x1", a.lambda, {{"x1m", H}, {"x10", A}})
                 .map("x1m", h.comult, {{"x1m1", H}, {"x1m2", H}}))
           .mul({"c1", "x1m1"}, "a1")
           .mul({"c2", "x1m2"}, "a2")
           .mul({"c0", "x10"}, "z")
           .mul({"T3", "x2"}, "d2");
  Tensor p1 = (s1 * sw(dt.f_inv, H, {"g1", "g2"}))
                  .mul({"x3", "g2"}, "b1")
                  .mul({"d2", "g1"}, "b2")
                  .apply("b1", Si)
                  .apply("b2", Si)
                  .fuse({"a1", "b1"}, {"k1", KA})
                  .fuse({"a2", "b2"}, {"k2", KA})
                  .take({"k1", "k2", "z"});
  Sweedler s2 = (Sweedler(a.phi_lambda, {{"Y1", H}, {"Y2", H}, {"Y3", A}})
                     .map("Y3", a.rho, {{"Y30", A}, {"Y31", H}})
                     .map("Y31", h.comult, {{"Y311", H}, {"Y312", H}}) *
                 Sweedler(a.phi_rho_inv, {{"y1", A}, {"y2", H}, {"y3", H}}))
                    .mul({"y3", "Y312"}, "c1")
                    .mul({"y2", "Y311"}, "c2")
                    .mul({"y1", "Y30"}, "c0");
  s2 = (s2 * Sweedler(a.phi_lr_inv, {{"t1", H}, {"t2", A}, {"t3", H}}).map("t2", a.rho, {{"t20", A}, {"t21", H}}))
           .mul({"t3", "c1"}, "d1")
           .mul({"t21", "c2"}, "d2")
           .mul({"t20", "c0"}, "z")
           .mul({"t1", "Y2"}, "a2");
  Tensor p2 = (s2 * sw(dt.f_inv, H, {"g1", "g2"}))
                  .mul({"d1", "g2"}, "b1")
                  .mul({"d2", "g1"}, "b2")
                  .apply("b1", Si)
                  .apply("b2", Si)
                  .fuse({"Y1", "b1"}, {"k1", KA})
                  .fuse({"a2", "b2"}, {"k2", KA})
                  .take({"k1", "k2", "z"});
  out.first = make_comodule_algebra(Side::left, K, A, l1, p1);
  out.second = make_comodule_algebra(Side::left, K, A, l2, p2);
  return out;
}

CoactionPair bicomodule_to_right_HopH(const BicomoduleAlgebra& a, bool search_witness) {
  const QuasiHopfAlgebra& h = require_antipode(*a.base);
  const LinMap& Si = h.S_inv();
  const auto& H = h.algebra;
  const auto& A = a.algebra;
  auto K = std::make_shared<QuasiHopfAlgebra>(tensor_product(variant(h, Variant::op), h));
  const auto& KA = K->algebra;
  DrinfeldTwist dt = drinfeld_twist(h);
  int n = A->dim();
  CoactionPair out;
  out.base = K;
  LinMap r1 = LinMap::from_function({n}, {n, KA->dim()}, [&](const Index& i) {
    return Sweedler(a.rho(A->basis(i[0])), {{"u0", A}, {"u1", H}})
        .map("u0", a.lambda, {{"m", H}, {"z", A}})
        .apply("m", Si)
        .fuse({"m", "u1"}, {"k", KA})
        .take({"z", "k"});
  });
  LinMap r2 = LinMap::from_function({n}, {n, KA->dim()}, [&](const Index& i) {
    return Sweedler(a.lambda(A->basis(i[0])), {{"m", H}, {"u0", A}})
        .map("u0", a.rho, {{"z", A}, {"r", H}})
        .apply("m", Si)
        .fuse({"m", "r"}, {"k", KA})
        .take({"z", "k"});
  });
  Sweedler s1 = (Sweedler(a.phi_rho, {{"X1", A}, {"X2", H}, {"X3", H}})
                     .map("X1", a.lambda, {{"X1m", H}, {"X10", A}})
                     .map("X1m", h.comult, {{"X1m1", H}, {"X1m2", H}}) *
                 Sweedler(a.phi_lambda_inv, {{"x1", H}, {"x2", H}, {"x3", A}}))
                    .mul({"X10", "x3"}, "c0")
                    .mul({"X1m2", "x2"}, "c1")
                    .mul({"X1m1", "x1"}, "c2");
  s1 = (s1 * Sweedler(a.phi_lr_inv, {{"t1", H}, {"t2", A}, {"t3", H}}).map("t2", a.lambda, {{"t2m", H}, {"t20", A}}))
           .mul({"c0", "t20"}, "z")
           .mul({"c1", "t2m"}, "d1")
           .mul({"X2", "t3"}, "b1")
           .mul({"c2", "t1"}, "d2");
  Tensor p1 = (s1 * sw(dt.f, H, {"f1", "f2"}))
                  .mul({"f2", "d1"}, "a1")
                  .mul({"f1", "d2"}, "a2")
                  .apply("a1", Si)
                  .apply("a2", Si)
                  .fuse({"a1", "b1"}, {"k1", KA})
                  .fuse({"a2", "X3"}, {"k2", KA})
                  .take({"z", "k1", "k2"});
  Sweedler s2 = (Sweedler(a.phi_lambda_inv, {{"x1", H}, {"x2", H}, {"x3", A}})
                     .map("x3", a.rho, {{"x30", A}, {"x31", H}})
                     .map("x31", h.comult, {{"x311", H}, {"x312", H}}) *
                 Sweedler(a.phi_rho, {{"X1", A}, {"X2", H}, {"X3", H}}))
                    .mul({"x30", "X1"}, "c0")
                    .mul({"x311", "X2"}, "c1")
                    .mul({"x312", "X3"}, "c2");
  s2 = (s2 * Sweedler(a.phi_lr, {{"T1", H}, {"T2", A}, {"T3", H}}).map("T2", a.rho, {{"T20", A}, {"T21", H}}))
           .mul({"c0", "T20"}, "z")
           .mul({"c1", "T21"}, "b1")
           .mul({"c2", "T3"}, "b2")
           .mul({"x2", "T1"}, "e1");
  Tensor p2 = (s2 * sw(dt.f, H, {"f1", "f2"}))
                  .mul({"f2", "e1"}, "a1")
                  .mul({"f1", "x1"}, "a2")
                  .apply("a1", Si)
                  .apply("a2", Si)
                  .fuse({"a1", "b1"}, {"k1", KA})
                  .fuse({"a2", "b2"}, {"k2", KA})
                  .take({"z", "k1", "k2"});
  out.first = make_comodule_algebra(Side::right, K, A, r1, p1);
  out.second = make_comodule_algebra(Side::right, K, A, r2, p2);
  if (search_witness) out.witness = find_twist_witness(out.first, out.second);
  return out;
}

CheckReport verify_twist_witness(const ComoduleAlgebra& from, const ComoduleAlgebra& to, const Tensor& v) {
  CheckReport r;
  require_same_base(*from.base, *to.base);
  bool right = from.side == Side::right;
  r.compare("comtwist0", apply_linear_map(from.base->counit, v, right ? 1 : 0), from.algebra->unit());
  if (!is_invertible(from.coaction_legs(), v)) {
    r.expect("witness.invertible", false);
    return r;
  }
  r.expect("witness.invertible", true);
  if (!r.ok()) return r;
  ComoduleAlgebra t = twist_comodule_algebra(from, v);
  r.for_all("comtwist1", {from.algebra->dim()}, [&](const Index& i) {
    Tensor u = from.algebra->basis(i[0]);
    return CheckReport::Sides{t.coaction(u), to.coaction(u)};
  });
  r.compare("comtwist2", t.phi, to.phi);
  return r;
}

InternalCoalgebra internal_coalgebra(const ComoduleAlgebra& x0) {
  ComoduleAlgebra x = x0.side == Side::left ? x0 : comodule_variant(x0, ComoduleVariant::cop);
  const QuasiBialgebra& h = *x.base;
  const auto& H = h.algebra;
  const auto& B = x.algebra;
  int nb = B->dim(), nh = H->dim();
  InternalCoalgebra c;
  c.base = x.base;
  c.algebra = B;
  c.left_action = LinMap::from_function({nb, nb, nh}, {nb, nh}, [&](const Index& i) {
    return (Sweedler(x.coaction(B->basis(i[0])), {{"bm", H}, {"b0", B}}) * Sweedler::basis(B, i[1], "b1") *
            Sweedler::basis(H, i[2], "h"))
        .mul({"b0", "b1"}, "r0")
        .mul({"bm", "h"}, "r1")
        .take({"r0", "r1"});
  });
  c.comult = LinMap::from_function({nb, nh}, {nh, nb, nh}, [&](const Index& i) {
    return (Sweedler(x.phi, {{"X1", H}, {"X2", H}, {"X3", B}}) * Sweedler::basis(B, i[0], "b") *
            Sweedler(h.comult(H->basis(i[1])), {{"h1", H}, {"h2", H}}))
        .mul({"X1", "h1"}, "k")
        .mul({"X3", "b"}, "b1")
        .mul({"X2", "h2"}, "k1")
        .take({"k", "b1", "k1"});
  });
  c.counit = LinMap::from_function({nb, nh}, {nb}, [&](const Index& i) {
    return B->basis(i[0]) * h.eps(H->basis(i[1]));
  });
  return c;
}

// Elements of C (x)_B ... (x)_B C are stored in the normal form h (x) ... (x) h' (x) n,
// where (1 (x) h) (x)_B n stands for a simple tensor.
CheckReport verify_internal_coalgebra(const InternalCoalgebra& c) {
  const QuasiBialgebra& h = *c.base;
  const auto& H = h.algebra;
  const auto& B = c.algebra;
  int nb = B->dim(), nh = H->dim();
  Legs CL{B, H};
  CheckReport r;
  auto elem = [&](int i, int j) { return Sweedler::basis(B, i, "b") * Sweedler::basis(H, j, "h"); };
  auto delta = [&](const Sweedler& s) {
    return s.map(std::vector<std::string>{"b", "h"}, c.comult, {{"k", H}, {"nb", B}, {"nh", H}});
  };
  r.for_all("C.left", {nb, nb, nb, nh}, [&](const Index& i) {
    Tensor x = B->basis(i[2]).outer(H->basis(i[3]));
    Tensor once = apply_linear_map(c.left_action, B->mul(B->basis(i[0]), B->basis(i[1])).outer(x), 0);
    Tensor twice = apply_linear_map(c.left_action, B->basis(i[0]).outer(apply_linear_map(c.left_action, B->basis(i[1]).outer(x), 0)), 0);
    return CheckReport::Sides{once, twice};
  });
  r.for_all("comult.right", {nb, nh, nb, nh}, [&](const Index& i) {
    Tensor lhs = delta((Sweedler::element(B, B->mul(B->basis(i[0]), B->basis(i[2])), "b") *
                        Sweedler::element(H, H->mul(H->basis(i[1]), H->basis(i[3])), "h")))
                     .take({"k", "nb", "nh"})
                     ;
    Tensor rhs = (delta(elem(i[0], i[1])) * Sweedler::basis(B, i[2], "c") *
                  Sweedler(h.comult(H->basis(i[3])), {{"g1", H}, {"g2", H}}))
                     .mul({"k", "g1"}, "r1")
                     .mul({"nb", "c"}, "r2")
                     .mul({"nh", "g2"}, "r3")
                     .take({"r1", "r2", "r3"})
                     ;
    return CheckReport::Sides{lhs, rhs};
  });
  r.for_all("comult.left", {nb, nb, nh}, [&](const Index& i) {
    Tensor acted = apply_linear_map(c.left_action, B->basis(i[0]).outer(B->basis(i[1]).outer(H->basis(i[2]))), 0);
    Tensor lhs = delta(Sweedler(acted, {{"b", B}, {"h", H}})).take({"k", "nb", "nh"});
    Tensor lam = apply_linear_map(c.left_action, B->basis(i[0]).outer(B->unit().outer(H->unit())), 0);
    Tensor rhs = (delta(elem(i[1], i[2])) * Sweedler(lam, {{"l0", B}, {"lm", H}}))
                    .mul({"lm", "k"}, "r1")
                    .map(std::vector<std::string>{"l0", "nb", "nh"}, c.left_action, {{"r2", B}, {"r3", H}})
                    .take({"r1", "r2", "r3"})
                    ;
    return CheckReport::Sides{lhs, rhs};
  });
  r.for_all("coassoc", {nb, nh}, [&](const Index& i) {
    Sweedler d = delta(elem(i[0], i[1]));
    Tensor lhs = (d * Sweedler::unit(B, "b") * sw(h.phi_inv, H, {"x1", "x2", "x3"}))
                     .rename("nb", "n0")
                     .rename("nh", "m0")
                     .rename("k", "h")
                     .map(std::vector<std::string>{"b", "h"}, c.comult, {{"k1", H}, {"ub", B}, {"uh", H}})
                     .map(std::vector<std::string>{"ub", "n0", "m0"}, c.left_action, {{"pb", B}, {"ph", H}})
                     .mul({"k1", "x1"}, "r1")
                     .mul({"uh", "x2"}, "r2")
                     .mul({"ph", "x3"}, "r4")
                     .take({"r1", "r2", "pb", "r4"})
                     ;
    Tensor rhs = d.rename("k", "k0")
                     .rename("nb", "b")
                     .rename("nh", "h")
                     .map(std::vector<std::string>{"b", "h"}, c.comult, {{"k2", H}, {"mb", B}, {"mh", H}})
                     .take({"k0", "k2", "mb", "mh"})
                     ;
    return CheckReport::Sides{lhs, rhs};
  });
  r.for_all("counit", {nb, nh}, [&](const Index& i) {
    Tensor d = delta(elem(i[0], i[1])).take({"k", "nb", "nh"});
    Tensor x = B->basis(i[0]).outer(H->basis(i[1]));
    Tensor left = apply_linear_map(h.counit, d, 0);
    Tensor right = apply_linear_map(h.counit, d, 2).permuted({1, 0});
    return CheckReport::Sides{stack({left, right}), stack({x, x})};
  });
  r.for_all("counit.linear", {nb, nb, nh, nb, nh}, [&](const Index& i) {
    Tensor x = B->basis(i[1]).outer(H->basis(i[2]));
    Tensor acted = apply_linear_map(c.left_action, B->basis(i[0]).outer(x), 0);
    Tensor prod = B->mul(B->basis(i[1]), B->basis(i[3])).outer(H->mul(H->basis(i[2]), H->basis(i[4])));
    Tensor lhs = stack({c.counit(acted), c.counit(prod)});
    Tensor rhs = stack({B->mul(B->basis(i[0]), c.counit(x)), B->mul(c.counit(x), B->basis(i[3])) * h.eps(H->basis(i[4]))});
    return CheckReport::Sides{lhs, rhs};
  });
  Tensor one = B->unit().outer(H->unit());
  r.compare("counit.unit", c.counit(one), B->unit());
  r.expect("comult.unit.invertible", is_invertible({H, B, H}, c.comult(one)));
  InternalCoalgebra again = internal_coalgebra(recover_comodule_algebra(c));
  r.expect("roundtrip", again.left_action == c.left_action && again.comult == c.comult && again.counit == c.counit);
  return r;
}

CheckReport verify_correspondence(const ComoduleAlgebra& x) {
  ComoduleAlgebra l = x.side == Side::left ? x : comodule_variant(x, ComoduleVariant::cop);
  InternalCoalgebra c = internal_coalgebra(x);
  CheckReport r = verify_internal_coalgebra(c);
  ComoduleAlgebra back = recover_comodule_algebra(c);
  r.expect("recover.coaction", back.coaction == l.coaction);
  r.compare("recover.phi", back.phi, l.phi);
  return r;
}

ComoduleAlgebra recover_comodule_algebra(const InternalCoalgebra& c) {
  const auto& B = c.algebra;
  const auto& H = c.base->algebra;
  int nb = B->dim(), nh = H->dim();
  Tensor one = B->unit().outer(H->unit());
  LinMap lambda = LinMap::from_function({nb}, {nh, nb}, [&](const Index& i) {
    return apply_linear_map(c.left_action, B->basis(i[0]).outer(one), 0).permuted({1, 0});
  });
  Tensor d = c.comult(one);
  return make_comodule_algebra(Side::left, c.base, B, lambda, d.permuted({0, 2, 1}));
}

}  // namespace qhopf
