// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhopf/quasi_hopf.hpp"

#include "qhopf/error.hpp"

namespace qhopf {

Tensor product(const Legs& legs, std::initializer_list<Tensor> factors) {
  auto it = factors.begin();
  Tensor acc = *it;
  for (++it; it != factors.end(); ++it) acc = multiply(legs, acc, *it);
  return acc;
}

Tensor stack(std::initializer_list<Tensor> parts) {
  Dims d = parts.begin()->dims();
  d.insert(d.begin(), static_cast<int>(parts.size()));
  Tensor out(d);
  Tensor::Key vol = parts.begin()->volume(), i = 0;
  for (const auto& p : parts) {
    if (p.volume() != vol) throw Error(ErrorKind::ShapeMismatch, "stack shapes");
    for (const auto& [k, v] : p.entries()) out.add_key(i * vol + k, v);
    ++i;
  }
  return out;
}

Sweedler sw(const Tensor& t, const AlgebraRef& a, const std::vector<std::string>& names) {
  std::vector<Leg> legs;
  for (const auto& n : names) legs.emplace_back(n, a);
  return Sweedler(t, legs);
}

Scalar QuasiBialgebra::eps(const Tensor& h) const { return counit(h).get_key(0); }

const LinMap& QuasiHopfAlgebra::S_inv() const {
  if (!antipode_inv) throw Error(ErrorKind::AntipodeNotInvertible, "antipode is not bijective");
  return *antipode_inv;
}

QuasiBialgebra make_quasi_bialgebra(AlgebraRef h, LinMap comult, LinMap counit, Tensor phi) {
  QuasiBialgebra b;
  int n = h->dim();
  if (comult.source() != Dims{n} || comult.target() != Dims{n, n}) throw Error(ErrorKind::ShapeMismatch, "comultiplication shape");
  if (counit.source() != Dims{n} || !counit.target().empty()) throw Error(ErrorKind::ShapeMismatch, "counit shape");
  if (phi.dims() != Dims{n, n, n}) throw Error(ErrorKind::ShapeMismatch, "reassociator shape");
  b.algebra = std::move(h);
  b.comult = std::move(comult);
  b.counit = std::move(counit);
  b.phi_inv = invert_element(b.legs(3), phi);
  b.phi = std::move(phi);
  return b;
}

QuasiHopfAlgebra make_quasi_hopf(const QuasiBialgebra& b, LinMap s, Tensor alpha, Tensor beta) {
  QuasiHopfAlgebra h;
  static_cast<QuasiBialgebra&>(h) = b;
  int n = b.dim();
  if (s.source() != Dims{n} || s.target() != Dims{n}) throw Error(ErrorKind::ShapeMismatch, "antipode shape");
  if (alpha.dims() != Dims{n} || beta.dims() != Dims{n}) throw Error(ErrorKind::ShapeMismatch, "alpha/beta shape");
  if (auto inv = inverse(s.matrix())) h.antipode_inv = LinMap::from_matrix({n}, {n}, *inv);
  h.antipode = std::move(s);
  h.alpha = std::move(alpha);
  h.beta = std::move(beta);
  return h;
}

QuasiHopfAlgebra from_hopf(AlgebraRef h, LinMap comult, LinMap counit, LinMap s) {
  Legs l3(3, h);
  QuasiBialgebra b = make_quasi_bialgebra(h, std::move(comult), std::move(counit), unit_of(l3));
  return make_quasi_hopf(b, std::move(s), h->unit(), h->unit());
}

const QuasiHopfAlgebra& require_antipode(const QuasiBialgebra& b) {
  auto* h = dynamic_cast<const QuasiHopfAlgebra*>(&b);
  if (!h) throw Error(ErrorKind::AntipodeRequired, "construction needs a quasi-Hopf algebra");
  return *h;
}

CheckReport verify_algebra(const FinAlgebra& a, const std::string& prefix) {
  CheckReport r;
  int n = a.dim();
  r.for_all(prefix + "assoc", {n, n, n}, [&](const Index& i) {
    Tensor x = a.basis(i[0]), y = a.basis(i[1]), z = a.basis(i[2]);
    return CheckReport::Sides{a.mul(a.mul(x, y), z), a.mul(x, a.mul(y, z))};
  });
  r.for_all(prefix + "unit", {n}, [&](const Index& i) {
    Tensor x = a.basis(i[0]);
    return CheckReport::Sides{stack({a.mul(a.unit(), x), a.mul(x, a.unit())}), stack({x, x})};
  });
  return r;
}

CheckReport verify_quasi_bialgebra(const QuasiBialgebra& b) {
  CheckReport r = verify_algebra(*b.algebra, "H.");
  const auto& H = b.algebra;
  int n = b.dim();
  Legs L2 = b.legs(2), L3 = b.legs(3);
  r.for_all("delta.mult", {n, n}, [&](const Index& i) {
    Tensor x = H->basis(i[0]), y = H->basis(i[1]);
    return CheckReport::Sides{b.comult(H->mul(x, y)), multiply(L2, b.comult(x), b.comult(y))};
  });
  r.compare("delta.unit", b.comult(b.one()), unit_of(L2));
  r.for_all("eps.mult", {n, n}, [&](const Index& i) {
    Tensor x = H->basis(i[0]), y = H->basis(i[1]);
    return CheckReport::Sides{b.counit(H->mul(x, y)), Tensor::scalar(b.eps(x) * b.eps(y))};
  });
  r.compare("eps.unit", b.counit(b.one()), Tensor::scalar(Scalar(1)));
  r.compare("phi.inverse", stack({multiply(L3, b.phi, b.phi_inv), multiply(L3, b.phi_inv, b.phi)}),
            stack({unit_of(L3), unit_of(L3)}));
  r.for_all("q1", {n}, [&](const Index& i) {
    Tensor d = b.comult(H->basis(i[0]));
    Tensor lhs = apply_linear_map(b.comult, d, 1);
    Tensor rhs = product(L3, {b.phi, apply_linear_map(b.comult, d, 0), b.phi_inv});
    return CheckReport::Sides{lhs, rhs};
  });
  r.for_all("q2", {n}, [&](const Index& i) {
    Tensor h = H->basis(i[0]);
    Tensor d = b.comult(h);
    return CheckReport::Sides{stack({apply_linear_map(b.counit, d, 0), apply_linear_map(b.counit, d, 1)}),
                              stack({h, h})};
  });
  Legs L4 = b.legs(4);
  Tensor lhs3 = product(L4, {embed_legs(b.phi, {1, 2, 3}, L4), apply_linear_map(b.comult, b.phi, 1),
                             embed_legs(b.phi, {0, 1, 2}, L4)});
  Tensor rhs3 = multiply(L4, apply_linear_map(b.comult, b.phi, 2), apply_linear_map(b.comult, b.phi, 0));
  r.compare("q3", lhs3, rhs3);
  r.compare("q4", apply_linear_map(b.counit, b.phi, 1), unit_of(L2));
  r.compare("q4.outer", stack({apply_linear_map(b.counit, b.phi, 0), apply_linear_map(b.counit, b.phi, 2)}),
            stack({unit_of(L2), unit_of(L2)}));
  return r;
}

CheckReport verify_quasi_hopf(const QuasiHopfAlgebra& h) {
  CheckReport r = verify_quasi_bialgebra(h);
  const auto& H = h.algebra;
  int n = h.dim();
  const LinMap& S = h.antipode;
  r.for_all("S.antimult", {n, n}, [&](const Index& i) {
    Tensor x = H->basis(i[0]), y = H->basis(i[1]);
    return CheckReport::Sides{S(H->mul(x, y)), H->mul(S(y), S(x))};
  });
  r.compare("S.unit", S(h.one()), h.one());
  r.expect("S.bijective", h.antipode_inv.has_value());
  Sweedler a = Sweedler::element(H, h.alpha, "a"), bt = Sweedler::element(H, h.beta, "b");
  r.for_all("q5", {n}, [&](const Index& i) {
    Tensor x = H->basis(i[0]);
    Sweedler d = sw(h.comult(x), H, {"h1", "h2"});
    Tensor l1 = (d.apply("h1", S) * a).mul({"h1", "a", "h2"}, "r").take({"r"});
    Tensor l2 = (d.apply("h2", S) * bt).mul({"h1", "b", "h2"}, "r").take({"r"});
    return CheckReport::Sides{stack({l1, l2}), stack({h.alpha * h.eps(x), h.beta * h.eps(x)})};
  });
  Tensor q6a = (sw(h.phi, H, {"X1", "X2", "X3"}).apply("X2", S) * bt * a).mul({"X1", "b", "X2", "a", "X3"}, "r").take({"r"});
  Tensor q6b = (sw(h.phi_inv, H, {"x1", "x2", "x3"}).apply("x1", S).apply("x3", S) * a * bt)
                   .mul({"x1", "a", "x2", "b", "x3"}, "r")
                   .take({"r"});
  r.compare("q6", stack({q6a, q6b}), stack({h.one(), h.one()}));
  r.expect("normalized", h.eps(h.alpha).is_one() && h.eps(h.beta).is_one(), "eps(alpha) = eps(beta) = 1", false);
  return r;
}

GaugeTransformation make_gauge(const QuasiBialgebra& b, const Tensor& F) {
  Legs L2 = b.legs(2);
  if (F.dims() != dims_of(L2)) throw Error(ErrorKind::ShapeMismatch, "gauge shape");
  if (apply_linear_map(b.counit, F, 0) != b.one() || apply_linear_map(b.counit, F, 1) != b.one())
    throw Error(ErrorKind::GaugeNotNormalized, "(eps (x) id)(F) and (id (x) eps)(F) must be 1");
  return {F, invert_element(L2, F)};
}

QuasiBialgebra gauge_twist(const QuasiBialgebra& b, const GaugeTransformation& g) {
  Legs L2 = b.legs(2), L3 = b.legs(3);
  QuasiBialgebra t = b;
  t.comult = LinMap::from_function({b.dim()}, {b.dim(), b.dim()}, [&](const Index& i) {
    return product(L2, {g.F, b.comult(b.algebra->basis(i[0])), g.F_inv});
  });
  t.phi = product(L3, {embed_legs(g.F, {1, 2}, L3), apply_linear_map(b.comult, g.F, 1), b.phi,
                       apply_linear_map(b.comult, g.F_inv, 0), embed_legs(g.F_inv, {0, 1}, L3)});
  t.phi_inv = product(L3, {embed_legs(g.F, {0, 1}, L3), apply_linear_map(b.comult, g.F, 0), b.phi_inv,
                           apply_linear_map(b.comult, g.F_inv, 1), embed_legs(g.F_inv, {1, 2}, L3)});
  return t;
}

QuasiHopfAlgebra gauge_twist(const QuasiHopfAlgebra& h, const GaugeTransformation& g) {
  QuasiHopfAlgebra t = h;
  static_cast<QuasiBialgebra&>(t) = gauge_twist(static_cast<const QuasiBialgebra&>(h), g);
  const auto& H = h.algebra;
  t.alpha = (sw(g.F_inv, H, {"G1", "G2"}).apply("G1", h.S()) * Sweedler::element(H, h.alpha, "a"))
                .mul({"G1", "a", "G2"}, "r")
                .take({"r"});
  t.beta = (sw(g.F, H, {"F1", "F2"}).apply("F2", h.S()) * Sweedler::element(H, h.beta, "b"))
               .mul({"F1", "b", "F2"}, "r")
               .take({"r"});
  return t;
}

const char* to_string(Variant v) {
  switch (v) {
    case Variant::op: return "op";
    case Variant::cop: return "cop";
    case Variant::opcop: return "opcop";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  if (s == "op") return Variant::op;
  if (s == "cop") return Variant::cop;
  if (s == "opcop") return Variant::opcop;
  throw Error(ErrorKind::UsageError, "unknown variant '" + s + "'");
}

namespace {

LinMap flip_comult(const LinMap& d) {
  LinMap m = d;
  for (Tensor::Key k = 0; k < m.source_volume(); ++k) m.column(k) = switch_legs(d.column(k), 0, 1);
  return m;
}

}  // namespace

QuasiBialgebra variant(const QuasiBialgebra& b, Variant v) {
  QuasiBialgebra t = b;
  if (v != Variant::cop) t.algebra = b.algebra->op();
  if (v != Variant::op) t.comult = flip_comult(b.comult);
  switch (v) {
    case Variant::op:
      t.phi = b.phi_inv;
      t.phi_inv = b.phi;
      break;
    case Variant::cop:
      t.phi = b.phi_inv.permuted({2, 1, 0});
      t.phi_inv = b.phi.permuted({2, 1, 0});
      break;
    case Variant::opcop:
      t.phi = b.phi.permuted({2, 1, 0});
      t.phi_inv = b.phi_inv.permuted({2, 1, 0});
      break;
  }
  return t;
}

QuasiHopfAlgebra variant(const QuasiHopfAlgebra& h, Variant v) {
  QuasiHopfAlgebra t = h;
  static_cast<QuasiBialgebra&>(t) = variant(static_cast<const QuasiBialgebra&>(h), v);
  if (v == Variant::opcop) {
    t.alpha = h.beta;
    t.beta = h.alpha;
    return t;
  }
  const LinMap& Si = h.S_inv();
  t.antipode = Si;
  t.antipode_inv = h.antipode;
  if (v == Variant::op) {
    t.alpha = Si(h.beta);
    t.beta = Si(h.alpha);
  } else {
    t.alpha = Si(h.alpha);
    t.beta = Si(h.beta);
  }
  return t;
}

QuasiHopfAlgebra tensor_product(const QuasiHopfAlgebra& k, const QuasiHopfAlgebra& l) {
  AlgebraRef KL = FinAlgebra::tensor(*k.algebra, *l.algebra);
  int nk = k.dim(), nl = l.dim(), n = nk * nl;
  auto fuse_pairs = [&](const Sweedler& s, int arity) {
    Sweedler t = s;
    std::vector<std::string> order;
    for (int a = 1; a <= arity; ++a) {
      std::string o = "t" + std::to_string(a);
      t = t.fuse({"k" + std::to_string(a), "l" + std::to_string(a)}, Leg(o, KL));
      order.push_back(o);
    }
    return t.take(order);
  };
  LinMap comult = LinMap::from_function({n}, {n, n}, [&](const Index& i) {
    return fuse_pairs(sw(k.comult(k.algebra->basis(i[0] / nl)), k.algebra, {"k1", "k2"}) *
                          sw(l.comult(l.algebra->basis(i[0] % nl)), l.algebra, {"l1", "l2"}),
                      2);
  });
  LinMap counit = LinMap::from_function({n}, {}, [&](const Index& i) {
    return Tensor::scalar(k.eps(k.algebra->basis(i[0] / nl)) * l.eps(l.algebra->basis(i[0] % nl)));
  });
  auto pair3 = [&](const Tensor& a, const Tensor& b) {
    return fuse_pairs(sw(a, k.algebra, {"k1", "k2", "k3"}) * sw(b, l.algebra, {"l1", "l2", "l3"}), 3);
  };
  QuasiBialgebra b;
  b.algebra = KL;
  b.comult = comult;
  b.counit = counit;
  b.phi = pair3(k.phi, l.phi);
  b.phi_inv = pair3(k.phi_inv, l.phi_inv);
  auto kron1 = [&](const LinMap& f, const LinMap& g) {
    return LinMap::from_function({n}, {n}, [&](const Index& i) {
      return f.column(i[0] / nl).outer(g.column(i[0] % nl)).reshaped({n});
    });
  };
  QuasiHopfAlgebra t;
  static_cast<QuasiBialgebra&>(t) = b;
  t.antipode = kron1(k.antipode, l.antipode);
  if (k.antipode_inv && l.antipode_inv) t.antipode_inv = kron1(*k.antipode_inv, *l.antipode_inv);
  t.alpha = k.alpha.outer(l.alpha).reshaped({n});
  t.beta = k.beta.outer(l.beta).reshaped({n});
  return t;
}

DrinfeldTwist drinfeld_twist(const QuasiHopfAlgebra& h) {
  const auto& H = h.algebra;
  const LinMap& S = h.S();
  Legs L2 = h.legs(2), L4 = h.legs(4);
  Tensor A = multiply(L4, embed_legs(h.phi, {0, 1, 2}, L4), apply_linear_map(h.comult, h.phi_inv, 0));
  Tensor B = multiply(L4, apply_linear_map(h.comult, h.phi, 0), embed_legs(h.phi_inv, {0, 1, 2}, L4));
  Sweedler a1 = Sweedler::element(H, h.alpha, "a1"), a2 = Sweedler::element(H, h.alpha, "a2");
  Sweedler b1 = Sweedler::element(H, h.beta, "b1"), b2 = Sweedler::element(H, h.beta, "b2");
  Tensor gamma = (sw(A, H, {"A1", "A2", "A3", "A4"}).apply("A1", S).apply("A2", S) * a1 * a2)
                     .mul({"A2", "a1", "A3"}, "g1")
                     .mul({"A1", "a2", "A4"}, "g2")
                     .take({"g1", "g2"});
  Tensor delta = (sw(B, H, {"B1", "B2", "B3", "B4"}).apply("B3", S).apply("B4", S) * b1 * b2)
                     .mul({"B1", "b1", "B4"}, "d1")
                     .mul({"B2", "b2", "B3"}, "d2")
                     .take({"d1", "d2"});
  Sweedler x = sw(h.phi_inv, H, {"x1", "x2", "x3"});
  Tensor f = (x.map("x1", h.comult, {Leg("u1", H), Leg("u2", H)}).apply("u1", S).apply("u2", S).apply("x3", S) *
              sw(gamma, H, {"g1", "g2"}) * b1)
                 .mul({"x2", "b1", "x3"}, "y")
                 .map("y", h.comult, {Leg("y1", H), Leg("y2", H)})
                 .mul({"u2", "g1", "y1"}, "f1")
                 .mul({"u1", "g2", "y2"}, "f2")
                 .take({"f1", "f2"});
  Tensor g = (x.apply("x1", S).map("x3", h.comult, {Leg("v1", H), Leg("v2", H)}).apply("v1", S).apply("v2", S) *
              sw(delta, H, {"d1", "d2"}) * a1)
                 .mul({"x1", "a1", "x2"}, "y")
                 .map("y", h.comult, {Leg("y1", H), Leg("y2", H)})
                 .mul({"y1", "d1", "v2"}, "g1")
                 .mul({"y2", "d2", "v1"}, "g2")
                 .take({"g1", "g2"});
  if (multiply(L2, f, g) != unit_of(L2) || multiply(L2, g, f) != unit_of(L2))
    throw Error(ErrorKind::Internal, "Drinfeld twist and its inverse do not multiply to 1");
  return {f, g};
}

CheckReport verify_drinfeld_twist(const QuasiHopfAlgebra& h, const DrinfeldTwist& t) {
  CheckReport r;
  const auto& H = h.algebra;
  const LinMap& S = h.S();
  Legs L2 = h.legs(2), L3 = h.legs(3);
  r.compare("f.inverse", stack({multiply(L2, t.f, t.f_inv), multiply(L2, t.f_inv, t.f)}),
            stack({unit_of(L2), unit_of(L2)}));
  r.for_all("ca", {h.dim()}, [&](const Index& i) {
    Tensor x = H->basis(i[0]);
    Tensor lhs = product(L2, {t.f, h.comult(S(x)), t.f_inv});
    Tensor rhs = sw(h.comult(x), H, {"h1", "h2"}).apply("h1", S).apply("h2", S).take({"h2", "h1"});
    return CheckReport::Sides{lhs, rhs};
  });
  QuasiBialgebra twisted = gauge_twist(static_cast<const QuasiBialgebra&>(h), GaugeTransformation{t.f, t.f_inv});
  Tensor rhs = sw(h.phi, H, {"X1", "X2", "X3"}).apply("X1", S).apply("X2", S).apply("X3", S).take({"X3", "X2", "X1"});
  r.compare("pf", twisted.phi, rhs);
  if (h.antipode_inv) {
    const LinMap& Si = *h.antipode_inv;
    Tensor lhs = (sw(t.f_inv, H, {"g1", "g2"}).apply("g1", Si) * Sweedler::element(H, h.alpha, "a"))
                     .mul({"g2", "a", "g1"}, "r")
                     .take({"r"});
    r.compare("tfg", lhs, Si(h.beta));
  }
  return r;
}

std::optional<std::pair<Tensor, Tensor>> find_alpha_beta(const QuasiBialgebra& b, const LinMap& s) {
  const auto& H = b.algebra;
  int n = b.dim();
  // q5 is linear in alpha (resp. beta): collect its solution spaces
  auto q5_space = [&](bool for_alpha) {
    Matrix sys(n * n, n);
    for (int h = 0; h < n; ++h) {
      Tensor x = H->basis(h);
      Sweedler d = sw(b.comult(x), H, {"h1", "h2"});
      for (int c = 0; c < n; ++c) {
        Sweedler e = Sweedler::basis(H, c, "c");
        Tensor col = for_alpha ? (d.apply("h1", s) * e).mul({"h1", "c", "h2"}, "r").take({"r"})
                               : (d.apply("h2", s) * e).mul({"h1", "c", "h2"}, "r").take({"r"});
        col -= H->basis(c) * b.eps(x);
        for (const auto& [k, v] : col.entries()) sys.at(h * n + static_cast<int>(k), c) = v;
      }
    }
    return nullspace(sys);
  };
  std::vector<Vec> as = q5_space(true), bs = q5_space(false);
  if (as.empty() || bs.empty()) return std::nullopt;
  auto to_tensor = [&](const Vec& v) {
    Tensor t({n});
    for (int i = 0; i < n; ++i) t.add_key(i, v[i]);
    return t;
  };
  // for a fixed alpha the first half of q6 is linear in beta
  std::vector<int> coeffs(as.size(), -2);
  for (;;) {
    Vec av(n);
    for (std::size_t j = 0; j < as.size(); ++j)
      for (int i = 0; i < n; ++i) av[i] += Scalar(coeffs[j]) * as[j][i];
    Tensor alpha = to_tensor(av);
    if (!alpha.is_zero()) {
      Matrix sys(n, static_cast<int>(bs.size()));
      for (std::size_t j = 0; j < bs.size(); ++j) {
        Sweedler be = Sweedler::element(H, to_tensor(bs[j]), "b");
        Tensor col = (sw(b.phi, H, {"X1", "X2", "X3"}).apply("X2", s) * be * Sweedler::element(H, alpha, "a"))
                         .mul({"X1", "b", "X2", "a", "X3"}, "r")
                         .take({"r"});
        for (const auto& [k, v] : col.entries()) sys.at(static_cast<int>(k), static_cast<int>(j)) = v;
      }
      Vec rhs(n);
      Tensor one = b.one();
      for (const auto& [k, v] : one.entries()) rhs[k] = v;
      if (auto sol = solve(sys, rhs)) {
        Vec bv(n);
        for (std::size_t j = 0; j < bs.size(); ++j)
          for (int i = 0; i < n; ++i) bv[i] += (*sol)[j] * bs[j][i];
        Tensor beta = to_tensor(bv);
        QuasiHopfAlgebra cand = make_quasi_hopf(b, s, alpha, beta);
        if (verify_quasi_hopf(cand).ok()) return std::make_pair(alpha, beta);
      }
    }
    std::size_t j = 0;
    while (j < coeffs.size() && ++coeffs[j] > 2) coeffs[j++] = -2;
    if (j == coeffs.size()) break;
  }
  return std::nullopt;
}

QuasiHopfAlgebra to_field(const QuasiHopfAlgebra& h, std::uint64_t p) {
  QuasiHopfAlgebra t = h;
  t.algebra = h.algebra->to_field(p);
  t.comult = h.comult.to_field(p);
  t.counit = h.counit.to_field(p);
  t.phi = h.phi.to_field(p);
  t.phi_inv = h.phi_inv.to_field(p);
  t.antipode = h.antipode.to_field(p);
  if (h.antipode_inv) t.antipode_inv = h.antipode_inv->to_field(p);
  t.alpha = h.alpha.to_field(p);
  t.beta = h.beta.to_field(p);
  return t;
}

}  // namespace qhopf
