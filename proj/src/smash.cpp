// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhopf/smash.hpp"

#include <functional>

#include "qhopf/error.hpp"

namespace qhopf {

namespace {

using PairProduct = std::function<Tensor(int, int, int, int)>;

ProductAlgebra build_table(std::string kind, int d0, int d1, const PairProduct& prod, const Tensor& unit) {
  int n = d0 * d1;
  Tensor mult({n, n, n});
  for (int i0 = 0; i0 < d0; ++i0)
    for (int i1 = 0; i1 < d1; ++i1)
      for (int j0 = 0; j0 < d0; ++j0)
        for (int j1 = 0; j1 < d1; ++j1) {
          Tensor t = prod(i0, i1, j0, j1);
          if (t.dims() != Dims{d0, d1}) throw Error(ErrorKind::Internal, "product table entry shape");
          int row = i0 * d1 + i1, col = j0 * d1 + j1;
          for (const auto& [k, v] : t.entries()) mult.add({row, col, static_cast<int>(k)}, v);
        }
  ProductAlgebra p;
  p.kind = std::move(kind);
  p.algebra = FinAlgebra::make(mult, unit.reshaped({n}));
  p.first_dim = d0;
  p.second_dim = d1;
  return p;
}

Leg vleg(const std::string& name, const AlgebraRef& a) { return Leg(name, a); }

}  // namespace

CheckReport verify_product_algebra(const ProductAlgebra& p) {
  CheckReport r = verify_algebra(*p.algebra, "");
  if (p.sub) {
    int n = p.sub->dim();
    auto embed = [&](const Tensor& x) { return p.sub_leg == 0 ? p.element(x, p.other_unit) : p.element(p.other_unit, x); };
    r.for_all("subalgebra", {n, n}, [&](const Index& i) {
      Tensor x = p.sub->basis(i[0]), y = p.sub->basis(i[1]);
      return CheckReport::Sides{p.algebra->mul(embed(x), embed(y)), embed(p.sub->mul(x, y))};
    });
    r.compare("subalgebra.unit", embed(p.sub->unit()), p.algebra->unit());
  }
  return r;
}

CheckReport verify_algebra_map(const LinMap& f, const ProductAlgebra& from, const ProductAlgebra& to) {
  CheckReport r;
  int n = from.algebra->dim();
  const auto& A = from.algebra;
  const auto& B = to.algebra;
  r.for_all("mult", {n, n}, [&](const Index& i) {
    Tensor x = A->basis(i[0]), y = A->basis(i[1]);
    return CheckReport::Sides{f(A->mul(x, y)), B->mul(f(x), f(y))};
  });
  r.compare("unit", f(A->unit()), B->unit());
  r.expect("bijective", f.source() == f.target() && rank(f.matrix()) == n);
  return r;
}

ProductAlgebra generalized_smash(const ModuleAlgebra& a, const ComoduleAlgebra& b) {
  require_same_base(*a.base, *b.base);
  if (a.side != ModuleSide::left || b.side != Side::left) throw Error(ErrorKind::VariantMismatch, "expected a left module algebra and a left comodule algebra");
  const auto& H = a.base->algebra;
  const auto& A = a.algebra;
  const auto& B = b.algebra;
  const LinMap& la = *a.left_action;
  Sweedler x(b.phi_inv, {{"x1", H}, {"x2", H}, {"x3", B}});
  ProductAlgebra p = build_table("generalized-smash", A->dim(), B->dim(), [&](int i0, int i1, int j0, int j1) {
    return (x * Sweedler(b.coaction(B->basis(i1)), {{"bm", H}, {"b0", B}}) * Sweedler::basis(A, i0, "a") *
            Sweedler::basis(A, j0, "a2") * Sweedler::basis(B, j1, "b2"))
        .mul({"x2", "bm"}, "y")
        .map(std::vector<std::string>{"x1", "a"}, la, {vleg("p", A)})
        .map(std::vector<std::string>{"y", "a2"}, la, {vleg("q", A)})
        .mul({"p", "q"}, "r1")
        .mul({"x3", "b0", "b2"}, "r2")
        .take({"r1", "r2"});
  }, A->unit().outer(B->unit()));
  p.sub_leg = 1;
  p.sub = B;
  p.other_unit = A->unit();
  return p;
}

ProductAlgebra right_generalized_smash(const ComoduleAlgebra& a, const ModuleAlgebra& m) {
  require_same_base(*a.base, *m.base);
  if (a.side != Side::right || m.side != ModuleSide::right) throw Error(ErrorKind::VariantMismatch, "expected a right comodule algebra and a right module algebra");
  const auto& H = a.base->algebra;
  const auto& A = a.algebra;
  const auto& M = m.algebra;
  const LinMap& ra = *m.right_action;
  Sweedler x(a.phi_inv, {{"x1", A}, {"x2", H}, {"x3", H}});
  ProductAlgebra p = build_table("right-generalized-smash", A->dim(), M->dim(), [&](int i0, int i1, int j0, int j1) {
    return (Sweedler::basis(A, i0, "a") * Sweedler(a.coaction(A->basis(j0)), {{"c0", A}, {"c1", H}}) * x *
            Sweedler::basis(M, i1, "m") * Sweedler::basis(M, j1, "n"))
        .mul({"a", "c0", "x1"}, "r1")
        .mul({"c1", "x2"}, "y")
        .map(std::vector<std::string>{"m", "y"}, ra, {vleg("p", M)})
        .map(std::vector<std::string>{"n", "x3"}, ra, {vleg("q", M)})
        .mul({"p", "q"}, "r2")
        .take({"r1", "r2"});
  }, A->unit().outer(M->unit()));
  p.sub_leg = 0;
  p.sub = A;
  p.other_unit = M->unit();
  return p;
}

ProductAlgebra transposed_smash(const ModuleAlgebra& m, const ComoduleAlgebra& a) {
  require_same_base(*a.base, *m.base);
  if (a.side != Side::right || m.side != ModuleSide::left) throw Error(ErrorKind::VariantMismatch, "expected a left module algebra and a right comodule algebra");
  const auto& H = a.base->algebra;
  const auto& A = a.algebra;
  const auto& M = m.algebra;
  const LinMap& la = *m.left_action;
  Sweedler X(a.phi, {{"X1", A}, {"X2", H}, {"X3", H}});
  ProductAlgebra p = build_table("transposed-smash", M->dim(), A->dim(), [&](int i0, int i1, int j0, int j1) {
    return (X * Sweedler(a.coaction(A->basis(j1)), {{"c0", A}, {"c1", H}}) * Sweedler::basis(M, i0, "m") *
            Sweedler::basis(M, j0, "n") * Sweedler::basis(A, i1, "a"))
        .mul({"X2", "c1"}, "y")
        .map(std::vector<std::string>{"y", "m"}, la, {vleg("p", M)})
        .map(std::vector<std::string>{"X3", "n"}, la, {vleg("q", M)})
        .mul({"p", "q"}, "r1")
        .mul({"X1", "c0", "a"}, "r2")
        .take({"r1", "r2"});
  }, M->unit().outer(A->unit()));
  p.sub_leg = 1;
  p.sub = A->op();
  p.other_unit = M->unit();
  return p;
}

ProductAlgebra koppinen_smash(const ModuleCoalgebra& c, const ComoduleAlgebra& b) {
  require_same_base(*c.base, *b.base);
  if (c.side != ModuleSide::right || b.side != Side::left) throw Error(ErrorKind::VariantMismatch, "expected a right module coalgebra and a left comodule algebra");
  const auto& H = c.base->algebra;
  const auto& B = b.algebra;
  const LinMap& ra = *c.right_action;
  int n = c.dim, nb = B->dim(), N = n * nb;
  Tensor mult({N, N, N});
  Sweedler x(b.phi_inv, {{"x1", H}, {"x2", H}, {"x3", B}});
  // (f # g)(c) = x3 f(c1.x1)[0] g(c2.x2 f(c1.x1)[-1]) with f = e^i b, g = e^j b'
  for (int k = 0; k < n; ++k) {
    Sweedler dk(c.comult.image({k}), {Leg("c1", n), Leg("c2", n)});
    for (int bi = 0; bi < nb; ++bi)
      for (int bj = 0; bj < nb; ++bj) {
        Tensor t = (dk * x * Sweedler(b.coaction(B->basis(bi)), {{"bm", H}, {"b0", B}}) * Sweedler::basis(B, bj, "b2"))
                       .map(std::vector<std::string>{"c1", "x1"}, ra, {Leg("u1", n)})
                       .mul({"x2", "bm"}, "y")
                       .map(std::vector<std::string>{"c2", "y"}, ra, {Leg("u2", n)})
                       .mul({"x3", "b0", "b2"}, "r")
                       .take({"u1", "u2", "r"});
        t.for_each([&](const Index& idx, const Scalar& v) {
          mult.add({idx[0] * nb + bi, idx[1] * nb + bj, k * nb + idx[2]}, v);
        });
      }
  }
  Tensor eps({n});
  for (int k = 0; k < n; ++k) {
    Scalar e = c.counit.image({k}).get_key(0);
    if (!e.is_zero()) eps.add({k}, e);
  }
  ProductAlgebra p;
  p.kind = "koppinen";
  p.algebra = FinAlgebra::make(mult, eps.outer(B->unit()).reshaped({N}));
  p.first_dim = n;
  p.second_dim = nb;
  p.sub_leg = 1;
  p.sub = B;
  p.other_unit = eps;
  return p;
}

LinMap alpha_morphism(const ModuleCoalgebra& c, const ComoduleAlgebra& b) {
  int n = c.dim, nb = b.algebra->dim();
  return LinMap::from_function({n * nb}, {n * nb}, [&](const Index& i) {
    Tensor cs = Tensor::basis({n}, {i[0] / nb});
    Tensor bv = b.algebra->basis(i[0] % nb);
    // evaluate f on the basis of C and expand f = sum_k e^k (x) f(e_k)
    Tensor f({n, nb});
    for (int k = 0; k < n; ++k) {
      Scalar pair = cs.get({k});
      if (!pair.is_zero()) f += Tensor::basis({n}, {k}).outer(bv * pair);
    }
    return f.reshaped({n * nb});
  });
}

SmashIsomorphism phi_isomorphism(const ModuleCoalgebra& c) {
  const QuasiHopfAlgebra& h = require_antipode(*c.base);
  if (c.side != ModuleSide::right) throw Error(ErrorKind::VariantMismatch, "expected a right module coalgebra");
  const auto& H = h.algebra;
  const LinMap& S = h.S();
  const LinMap& Si = h.S_inv();
  ModuleAlgebra cs = dualize(c);
  const auto& M = cs.algebra;
  const LinMap& la = *cs.left_action;
  ComoduleAlgebra hl = regular_comodule_algebra(c.base, Side::left);
  ComoduleAlgebra hr = regular_comodule_algebra(c.base, Side::right);
  SmashIsomorphism s;
  s.source = generalized_smash(cs, hl);
  s.target = transposed_smash(cs, hr);
  Tensor fq = tilde_elements(hl).q;
  Tensor q = tilde_elements(hr).q;
  DrinfeldTwist dt = drinfeld_twist(h);
  int n = M->dim(), dh = H->dim();
  // c* # h |-> S^{-1}(Q1 h1 g1).c* # S^{-1}(Q2 h2 g2)
  s.forward = LinMap::from_function({n * dh}, {n * dh}, [&](const Index& i) {
    return (sw(fq, H, {"q1", "q2"}) * sw(h.comult(H->basis(i[0] % dh)), H, {"h1", "h2"}) * sw(dt.f_inv, H, {"g1", "g2"}) *
            Sweedler::basis(M, i[0] / dh, "c"))
        .mul({"q1", "h1", "g1"}, "u")
        .mul({"q2", "h2", "g2"}, "v")
        .apply("u", Si)
        .apply("v", Si)
        .map(std::vector<std::string>{"u", "c"}, la, {vleg("r", M)})
        .take({"r", "v"})
        .reshaped({n * dh});
  });
  // c* # h |-> g1 S(q2 h2).c* # g2 S(q1 h1)
  s.backward = LinMap::from_function({n * dh}, {n * dh}, [&](const Index& i) {
    return (sw(q, H, {"q1", "q2"}) * sw(h.comult(H->basis(i[0] % dh)), H, {"h1", "h2"}) * sw(dt.f_inv, H, {"g1", "g2"}) *
            Sweedler::basis(M, i[0] / dh, "c"))
        .mul({"q2", "h2"}, "u")
        .apply("u", S)
        .mul({"g1", "u"}, "u2")
        .mul({"q1", "h1"}, "w")
        .apply("w", S)
        .mul({"g2", "w"}, "v")
        .map(std::vector<std::string>{"u2", "c"}, la, {vleg("r", M)})
        .take({"r", "v"})
        .reshaped({n * dh});
  });
  return s;
}

CheckReport verify_phi_isomorphism(const SmashIsomorphism& s, const QuasiHopfAlgebra& h) {
  CheckReport r;
  r.merge(verify_algebra_map(s.forward, s.source, s.target), "phi.");
  LinMap id = LinMap::identity(s.forward.source());
  r.expect("phi.inverse.left", s.backward.after(s.forward) == id);
  r.expect("phi.inverse.right", s.forward.after(s.backward) == id);
  const auto& H = h.algebra;
  DrinfeldTwist dt = drinfeld_twist(h);
  Tensor lhs = (sw(dt.f_inv, H, {"g1", "g2"}) * Sweedler::element(H, h.alpha, "a"))
                   .apply("g1", h.S_inv())
                   .mul({"g2", "a", "g1"}, "r")
                   .take({"r"});
  r.compare("tfg", lhs, h.S_inv()(h.beta));
  return r;
}

OmegaData build_omega(const BicomoduleAlgebra& a, OmegaKind k) {
  const QuasiHopfAlgebra& h = require_antipode(*a.base);
  const auto& H = h.algebra;
  const auto& A = a.algebra;
  const LinMap& Si = h.S_inv();
  Legs L5{H, H, A, H, H};
  OmegaData o;
  o.kind = k;
  int n = A->dim();
  if (k == OmegaKind::l) {
    o.delta = LinMap::from_function({n}, {H->dim(), n, H->dim()}, [&](const Index& i) {
      return apply_linear_map(a.lambda, a.rho(A->basis(i[0])), 0);
    });
    Legs L4{H, A, H, H};
    Tensor t = multiply(L4, embed_legs(a.phi_lr, {0, 1, 2}, L4), apply_linear_map(a.lambda, a.phi_rho_inv, 0));
    o.psi = multiply(L5, apply_linear_map(a.lambda, t, 1), embed_legs(a.phi_lambda, {0, 1, 2}, L5));
  } else {
    o.delta = LinMap::from_function({n}, {H->dim(), n, H->dim()}, [&](const Index& i) {
      return apply_linear_map(a.rho, a.lambda(A->basis(i[0])), 1);
    });
    Legs L4{H, H, A, H};
    Tensor t = multiply(L4, embed_legs(a.phi_lr_inv, {1, 2, 3}, L4), apply_linear_map(a.rho, a.phi_lambda, 2));
    o.psi = multiply(L5, apply_linear_map(a.rho, t, 2), embed_legs(a.phi_rho_inv, {2, 3, 4}, L5));
  }
  o.psi_inv = invert_element(L5, o.psi);
  DrinfeldTwist dt = drinfeld_twist(h);
  Tensor sf = apply_linear_map(Si, apply_linear_map(Si, dt.f, 0), 1);
  Tensor sg = apply_linear_map(Si, apply_linear_map(Si, dt.f_inv, 0), 1);
  o.omega_L = multiply(L5, apply_linear_map(Si, apply_linear_map(Si, o.psi_inv, 3), 4), embed_legs(sf, {3, 4}, L5));
  o.omega_R = multiply(L5, embed_legs(sg, {0, 1}, L5), apply_linear_map(Si, apply_linear_map(Si, o.psi, 0), 1));
  return o;
}

const char* to_string(CrossedKind k) {
  switch (k) {
    case CrossedKind::left_l: return "left-l";
    case CrossedKind::left_r: return "left-r";
    case CrossedKind::right_l: return "right-l";
    case CrossedKind::right_r: return "right-r";
  }
  return "?";
}

ProductAlgebra diagonal_crossed_product(const BicomoduleAlgebra& a, const ModuleAlgebra& m, CrossedKind k) {
  require_same_base(*a.base, *m.base);
  if (m.side != ModuleSide::bi) throw Error(ErrorKind::VariantMismatch, "expected a bimodule algebra");
  const QuasiHopfAlgebra& h = require_antipode(*a.base);
  const auto& H = h.algebra;
  const auto& A = a.algebra;
  const auto& M = m.algebra;
  const LinMap& Si = h.S_inv();
  const LinMap& la = *m.left_action;
  const LinMap& ra = *m.right_action;
  bool l = k == CrossedKind::left_l || k == CrossedKind::right_l;
  bool left = k == CrossedKind::left_l || k == CrossedKind::left_r;
  OmegaData o = build_omega(a, l ? OmegaKind::l : OmegaKind::r);
  std::vector<Leg> ol{{"o1", H}, {"o2", H}, {"o3", A}, {"o4", H}, {"o5", H}};
  std::vector<Leg> dl{{"d1", H}, {"d0", A}, {"d2", H}};
  using V = std::vector<std::string>;
  ProductAlgebra p;
  if (left) {
    Sweedler om(o.omega_L, ol);
    // (O1.phi.O5)(O2 u[-1].psi.S^{-1}(u<1>) O4) (x) O3 u[0] u'
    p = build_table(std::string("diagonal-") + to_string(k), M->dim(), A->dim(), [&](int i0, int i1, int j0, int j1) {
      return (om * Sweedler(o.delta(A->basis(i1)), dl) * Sweedler::basis(M, i0, "f") * Sweedler::basis(M, j0, "p") *
              Sweedler::basis(A, j1, "v"))
          .apply("d2", Si)
          .map(V{"o1", "f"}, la, {vleg("f1", M)})
          .map(V{"f1", "o5"}, ra, {vleg("f2", M)})
          .mul({"o2", "d1"}, "lh")
          .mul({"d2", "o4"}, "rh")
          .map(V{"lh", "p"}, la, {vleg("p1", M)})
          .map(V{"p1", "rh"}, ra, {vleg("p2", M)})
          .mul({"f2", "p2"}, "r1")
          .mul({"o3", "d0", "v"}, "r2")
          .take({"r1", "r2"});
    }, M->unit().outer(A->unit()));
    p.sub_leg = 1;
    p.other_unit = M->unit();
  } else {
    Sweedler om(o.omega_R, ol);
    // u u'[0] O3 (x) (O2 S^{-1}(u'[-1]).phi.u'<1> O4)(O1.psi.O5)
    p = build_table(std::string("diagonal-") + to_string(k), A->dim(), M->dim(), [&](int i0, int i1, int j0, int j1) {
      return (Sweedler::basis(A, i0, "u") * Sweedler(o.delta(A->basis(j0)), dl) * om * Sweedler::basis(M, i1, "f") *
              Sweedler::basis(M, j1, "p"))
          .apply("d1", Si)
          .mul({"u", "d0", "o3"}, "r1")
          .mul({"o2", "d1"}, "lh")
          .mul({"d2", "o4"}, "rh")
          .map(V{"lh", "f"}, la, {vleg("f1", M)})
          .map(V{"f1", "rh"}, ra, {vleg("f2", M)})
          .map(V{"o1", "p"}, la, {vleg("p1", M)})
          .map(V{"p1", "o5"}, ra, {vleg("p2", M)})
          .mul({"f2", "p2"}, "r2")
          .take({"r1", "r2"});
    }, A->unit().outer(M->unit()));
    p.sub_leg = 0;
    p.other_unit = M->unit();
  }
  p.sub = A;
  return p;
}

CheckReport compare_smash_with_crossed_products(const BicomoduleAlgebra& a, const ModuleCoalgebra& c) {
  const QuasiHopfAlgebra& h = require_antipode(*a.base);
  require_same_base(h, *c.base);
  CoactionPair pair = bicomodule_to_right_HopH(a, false);
  ModuleAlgebra cstar_k = dualize(bimodule_to_HopH_module_coalgebra(c));
  ModuleAlgebra cstar = dualize(c);
  CheckReport r;
  const auto& H = h.algebra;
  const auto& A = a.algebra;
  AlgebraRef Hop = H->op();
  const auto& KA = pair.base->algebra;
  struct Side2 {
    const char* name;
    const ComoduleAlgebra* coaction;
    CrossedKind kind;
    OmegaKind omega;
  };
  for (const Side2& s : {Side2{"first", &pair.first, CrossedKind::right_l, OmegaKind::l},
                         Side2{"second", &pair.second, CrossedKind::right_r, OmegaKind::r}}) {
    ProductAlgebra sm = right_generalized_smash(*s.coaction, cstar_k);
    ProductAlgebra dc = diagonal_crossed_product(a, cstar, s.kind);
    r.expect(std::string(s.name) + ".table", sm.algebra->structure() == dc.algebra->structure());
    r.compare(std::string(s.name) + ".unit", sm.algebra->unit(), dc.algebra->unit());
    OmegaData o = build_omega(a, s.omega);
    auto reshuffle = [&](const Tensor& t) {
      return Sweedler(t, {{"o1", H}, {"o2", H}, {"o3", A}, {"o4", H}, {"o5", H}})
          .fuse({"o2", "o4"}, {"k1", KA})
          .fuse({"o1", "o5"}, {"k2", KA})
          .take({"o3", "k1", "k2"});
    };
    r.compare(std::string(s.name) + ".phi_inv.reshuffle", reshuffle(o.omega_R), s.coaction->phi_inv);
    // the inverse is taken with the first two legs in H^op
    Tensor inv = invert_element({Hop, Hop, A, H, H}, o.omega_R);
    r.compare(std::string(s.name) + ".phi.reshuffle", reshuffle(inv), s.coaction->phi);
  }
  return r;
}

}  // namespace qhopf
