// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhopf/module_coalgebra.hpp"

#include "qhopf/error.hpp"

namespace qhopf {

const char* to_string(ModuleSide s) {
  switch (s) {
    case ModuleSide::left: return "left";
    case ModuleSide::right: return "right";
    case ModuleSide::bi: return "bi";
  }
  return "?";
}

namespace {

bool has_left(ModuleSide s) { return s != ModuleSide::right; }
bool has_right(ModuleSide s) { return s != ModuleSide::left; }

// t in H^{(x)n} acting on y in V^{(x)n}, leg k by leg k
Tensor act_legwise(const LinMap& act, bool left, const AlgebraRef& H, int dv, const Tensor& t, const Tensor& y) {
  std::size_t n = y.arity();
  if (t.arity() != n) throw Error(ErrorKind::ShapeMismatch, "legwise action arity");
  std::vector<Leg> hl, vl;
  std::vector<std::string> order;
  for (std::size_t k = 0; k < n; ++k) {
    hl.emplace_back("h" + std::to_string(k), H);
    vl.emplace_back("v" + std::to_string(k), dv);
    order.push_back("z" + std::to_string(k));
  }
  Sweedler s = Sweedler(t, hl) * Sweedler(y, vl);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::string> src = left ? std::vector<std::string>{hl[k].name, vl[k].name}
                                        : std::vector<std::string>{vl[k].name, hl[k].name};
    s = s.map(src, act, {Leg(order[k], dv)});
  }
  return s.take(order);
}

void check_action(const std::optional<LinMap>& act, bool left, int dh, int dv, const char* what) {
  if (!act) throw Error(ErrorKind::ShapeMismatch, std::string("missing ") + what);
  Dims src = left ? Dims{dh, dv} : Dims{dv, dh};
  if (act->source() != src || act->target() != Dims{dv}) throw Error(ErrorKind::ShapeMismatch, std::string(what) + " shape");
}

// dual of an action: (h . e^i)(e_k) = e^i(e_k acted on by h); `left` refers to
// the given action, the result acts from the other side
LinMap transpose_action(const LinMap& act, bool left, int dh, int n) {
  Dims src = left ? Dims{n, dh} : Dims{dh, n};
  return LinMap::from_function(src, {n}, [&](const Index& idx) {
    int h = left ? idx[1] : idx[0], i = left ? idx[0] : idx[1];
    Tensor out({n});
    for (int k = 0; k < n; ++k) {
      const Tensor& img = act.column(left ? static_cast<Tensor::Key>(h) * n + k : static_cast<Tensor::Key>(k) * dh + h);
      Scalar v = img.get_key(static_cast<Tensor::Key>(i));
      if (!v.is_zero()) out.add_key(static_cast<Tensor::Key>(k), v);
    }
    return out;
  });
}

ModuleSide flip(ModuleSide s) {
  if (s == ModuleSide::bi) return s;
  return s == ModuleSide::left ? ModuleSide::right : ModuleSide::left;
}

// the same action read with its arguments exchanged
LinMap swap_arguments(const LinMap& act) {
  Dims src{act.source()[1], act.source()[0]};
  return LinMap::from_function(src, act.target(), [&](const Index& i) { return act.image({i[1], i[0]}); });
}

BialgebraRef twisted_base(const BialgebraRef& b, const GaugeTransformation& g) {
  if (auto h = std::dynamic_pointer_cast<const QuasiHopfAlgebra>(b)) return std::make_shared<QuasiHopfAlgebra>(gauge_twist(*h, g));
  return std::make_shared<QuasiBialgebra>(gauge_twist(*b, g));
}

}  // namespace

Tensor ModuleCoalgebra::act_left(const Tensor& t, const Tensor& y) const {
  return act_legwise(*left_action, true, base->algebra, dim, t, y);
}

Tensor ModuleCoalgebra::act_right(const Tensor& y, const Tensor& t) const {
  return act_legwise(*right_action, false, base->algebra, dim, t, y);
}

Tensor ModuleAlgebra::act_left(const Tensor& t, const Tensor& y) const {
  return act_legwise(*left_action, true, base->algebra, algebra->dim(), t, y);
}

Tensor ModuleAlgebra::act_right(const Tensor& y, const Tensor& t) const {
  return act_legwise(*right_action, false, base->algebra, algebra->dim(), t, y);
}

ModuleCoalgebra make_module_coalgebra(ModuleSide side, BialgebraRef base, LinMap comult, LinMap counit,
                                      std::optional<LinMap> left_action, std::optional<LinMap> right_action) {
  ModuleCoalgebra c;
  c.side = side;
  c.base = std::move(base);
  if (comult.source().size() != 1) throw Error(ErrorKind::ShapeMismatch, "comultiplication source");
  c.dim = comult.source()[0];
  if (comult.target() != Dims{c.dim, c.dim}) throw Error(ErrorKind::ShapeMismatch, "comultiplication target");
  if (counit.source() != Dims{c.dim} || !counit.target().empty()) throw Error(ErrorKind::ShapeMismatch, "counit shape");
  int dh = c.base->dim();
  if (has_left(side)) check_action(left_action, true, dh, c.dim, "left action");
  if (has_right(side)) check_action(right_action, false, dh, c.dim, "right action");
  c.comult = std::move(comult);
  c.counit = std::move(counit);
  if (has_left(side)) c.left_action = std::move(left_action);
  if (has_right(side)) c.right_action = std::move(right_action);
  return c;
}

ModuleAlgebra make_module_algebra(ModuleSide side, BialgebraRef base, AlgebraRef algebra,
                                  std::optional<LinMap> left_action, std::optional<LinMap> right_action) {
  ModuleAlgebra a;
  a.side = side;
  a.base = std::move(base);
  a.algebra = std::move(algebra);
  int dh = a.base->dim(), n = a.algebra->dim();
  if (has_left(side)) check_action(left_action, true, dh, n, "left action");
  if (has_right(side)) check_action(right_action, false, dh, n, "right action");
  if (has_left(side)) a.left_action = std::move(left_action);
  if (has_right(side)) a.right_action = std::move(right_action);
  return a;
}

namespace {

// unit, associativity and (for two actions) commutation of the actions on a
// space of dimension n
void check_module_laws(CheckReport& r, const QuasiBialgebra& h, int n, const std::optional<LinMap>& la,
                       const std::optional<LinMap>& ra) {
  const auto& H = h.algebra;
  int dh = H->dim();
  auto left = [&](const Tensor& x, const Tensor& v) { return (*la)(x.outer(v)); };
  auto right = [&](const Tensor& v, const Tensor& x) { return (*ra)(v.outer(x)); };
  auto e = [&](int i) { return Tensor::basis({n}, {i}, h.eps(h.one())); };
  if (la) {
    r.for_all("left.unit", {n}, [&](const Index& i) { return CheckReport::Sides{left(h.one(), e(i[0])), e(i[0])}; });
    r.for_all("left.assoc", {dh, dh, n}, [&](const Index& i) {
      Tensor x = H->basis(i[0]), y = H->basis(i[1]);
      return CheckReport::Sides{left(H->mul(x, y), e(i[2])), left(x, left(y, e(i[2])))};
    });
  }
  if (ra) {
    r.for_all("right.unit", {n}, [&](const Index& i) { return CheckReport::Sides{right(e(i[0]), h.one()), e(i[0])}; });
    r.for_all("right.assoc", {n, dh, dh}, [&](const Index& i) {
      Tensor x = H->basis(i[1]), y = H->basis(i[2]);
      return CheckReport::Sides{right(e(i[0]), H->mul(x, y)), right(right(e(i[0]), x), y)};
    });
  }
  if (la && ra)
    r.for_all("bimodule", {dh, n, dh}, [&](const Index& i) {
      Tensor x = H->basis(i[0]), y = H->basis(i[2]);
      return CheckReport::Sides{right(left(x, e(i[1])), y), left(x, right(e(i[1]), y))};
    });
}

}  // namespace

CheckReport verify_module_coalgebra(const ModuleCoalgebra& c) {
  const QuasiBialgebra& h = *c.base;
  const auto& H = h.algebra;
  int n = c.dim, dh = h.dim();
  if (c.comult.source() != Dims{n} || c.comult.target() != Dims{n, n}) throw Error(ErrorKind::ShapeMismatch, "comultiplication shape");
  if (has_left(c.side)) check_action(c.left_action, true, dh, n, "left action");
  if (has_right(c.side)) check_action(c.right_action, false, dh, n, "right action");
  CheckReport r;
  check_module_laws(r, h, n, has_left(c.side) ? c.left_action : std::nullopt,
                    has_right(c.side) ? c.right_action : std::nullopt);
  Scalar one = h.eps(h.one());
  auto e = [&](int i) { return Tensor::basis({n}, {i}, one); };
  r.for_all("counit", {n}, [&](const Index& i) {
    Tensor d = c.comult(e(i[0]));
    return CheckReport::Sides{stack({apply_linear_map(c.counit, d, 0), apply_linear_map(c.counit, d, 1)}),
                              stack({e(i[0]), e(i[0])})};
  });
  auto left_of = [&](const Tensor& d) { return apply_linear_map(c.comult, d, 0); };
  auto right_of = [&](const Tensor& d) { return apply_linear_map(c.comult, d, 1); };
  std::string s = c.side == ModuleSide::left ? "lmc" : c.side == ModuleSide::right ? "rmc" : "bmc";
  r.for_all(s + "1", {n}, [&](const Index& i) {
    Tensor d = c.comult(e(i[0]));
    Tensor lhs = left_of(d);
    if (has_left(c.side)) lhs = c.act_left(h.phi, lhs);
    if (has_right(c.side)) lhs = c.act_right(lhs, h.phi_inv);
    return CheckReport::Sides{lhs, right_of(d)};
  });
  std::string l2 = c.side == ModuleSide::bi ? s + "2.left" : s + "2";
  std::string l3 = c.side == ModuleSide::bi ? s + "3.left" : s + "3";
  std::string r2 = c.side == ModuleSide::bi ? s + "2.right" : s + "2";
  std::string r3 = c.side == ModuleSide::bi ? s + "3.right" : s + "3";
  if (has_left(c.side)) {
    r.for_all(l2, {dh, n}, [&](const Index& i) {
      Tensor x = H->basis(i[0]);
      return CheckReport::Sides{c.comult((*c.left_action)(x.outer(e(i[1])))), c.act_left(h.comult(x), c.comult(e(i[1])))};
    });
    r.for_all(l3, {dh, n}, [&](const Index& i) {
      Tensor x = H->basis(i[0]);
      return CheckReport::Sides{c.counit((*c.left_action)(x.outer(e(i[1])))), c.counit(e(i[1])) * h.eps(x)};
    });
  }
  if (has_right(c.side)) {
    r.for_all(r2, {n, dh}, [&](const Index& i) {
      Tensor x = H->basis(i[1]);
      return CheckReport::Sides{c.comult((*c.right_action)(e(i[0]).outer(x))), c.act_right(c.comult(e(i[0])), h.comult(x))};
    });
    r.for_all(r3, {n, dh}, [&](const Index& i) {
      Tensor x = H->basis(i[1]);
      return CheckReport::Sides{c.counit((*c.right_action)(e(i[0]).outer(x))), c.counit(e(i[0])) * h.eps(x)};
    });
  }
  return r;
}

CheckReport verify_module_algebra(const ModuleAlgebra& a) {
  const QuasiBialgebra& h = *a.base;
  const auto& H = h.algebra;
  const auto& A = a.algebra;
  int n = A->dim(), dh = h.dim();
  if (has_left(a.side)) check_action(a.left_action, true, dh, n, "left action");
  if (has_right(a.side)) check_action(a.right_action, false, dh, n, "right action");
  CheckReport r;
  check_module_laws(r, h, n, has_left(a.side) ? a.left_action : std::nullopt,
                    has_right(a.side) ? a.right_action : std::nullopt);
  r.for_all("unit", {n}, [&](const Index& i) {
    Tensor x = A->basis(i[0]);
    return CheckReport::Sides{stack({A->mul(A->unit(), x), A->mul(x, A->unit())}), stack({x, x})};
  });
  auto mul2 = [&](const Tensor& t) { return sw(t, A, {"a", "b"}).mul({"a", "b"}, "r").take({"r"}); };
  std::string s = a.side == ModuleSide::left ? "ma" : a.side == ModuleSide::right ? "rma" : "bma";
  r.for_all(s + "1", {n, n, n}, [&](const Index& i) {
    Tensor x = A->basis(i[0]), y = A->basis(i[1]), z = A->basis(i[2]);
    Tensor t = x.outer(y).outer(z);
    if (has_left(a.side)) t = a.act_left(h.phi, t);
    if (has_right(a.side)) t = a.act_right(t, h.phi_inv);
    Tensor rhs = sw(t, A, {"a", "b", "c"}).mul({"b", "c"}, "bc").mul({"a", "bc"}, "r").take({"r"});
    return CheckReport::Sides{A->mul(A->mul(x, y), z), rhs};
  });
  std::string l2 = a.side == ModuleSide::bi ? s + "2.left" : s + "2";
  std::string l3 = a.side == ModuleSide::bi ? s + "3.left" : s + "3";
  std::string r2 = a.side == ModuleSide::bi ? s + "2.right" : s + "2";
  std::string r3 = a.side == ModuleSide::bi ? s + "3.right" : s + "3";
  if (has_left(a.side)) {
    r.for_all(l2, {dh, n, n}, [&](const Index& i) {
      Tensor x = H->basis(i[0]), u = A->basis(i[1]), v = A->basis(i[2]);
      return CheckReport::Sides{(*a.left_action)(x.outer(A->mul(u, v))), mul2(a.act_left(h.comult(x), u.outer(v)))};
    });
    r.for_all(l3, {dh}, [&](const Index& i) {
      Tensor x = H->basis(i[0]);
      return CheckReport::Sides{(*a.left_action)(x.outer(A->unit())), A->unit() * h.eps(x)};
    });
  }
  if (has_right(a.side)) {
    r.for_all(r2, {n, n, dh}, [&](const Index& i) {
      Tensor x = H->basis(i[2]), u = A->basis(i[0]), v = A->basis(i[1]);
      return CheckReport::Sides{(*a.right_action)(A->mul(u, v).outer(x)), mul2(a.act_right(u.outer(v), h.comult(x)))};
    });
    r.for_all(r3, {dh}, [&](const Index& i) {
      Tensor x = H->basis(i[0]);
      return CheckReport::Sides{(*a.right_action)(A->unit().outer(x)), A->unit() * h.eps(x)};
    });
  }
  return r;
}

ModuleAlgebra dualize(const ModuleCoalgebra& c) {
  int n = c.dim, dh = c.base->dim();
  Tensor mult({n, n, n});
  Tensor unit({n});
  for (int k = 0; k < n; ++k) {
    c.comult.column(static_cast<Tensor::Key>(k)).for_each([&](const Index& ij, const Scalar& v) { mult.add({ij[0], ij[1], k}, v); });
    Scalar u = c.counit.column(static_cast<Tensor::Key>(k)).get_key(0);
    if (!u.is_zero()) unit.add({k}, u);
  }
  ModuleAlgebra a;
  a.base = c.base;
  a.algebra = FinAlgebra::make(mult, unit);
  a.side = flip(c.side);
  if (c.right_action) a.left_action = transpose_action(*c.right_action, false, dh, n);
  if (c.left_action) a.right_action = transpose_action(*c.left_action, true, dh, n);
  return a;
}

ModuleCoalgebra dualize(const ModuleAlgebra& a) {
  int n = a.algebra->dim(), dh = a.base->dim();
  ModuleCoalgebra c;
  c.base = a.base;
  c.dim = n;
  c.side = flip(a.side);
  c.comult = LinMap({n}, {n, n});
  c.counit = LinMap({n}, {});
  a.algebra->structure().for_each([&](const Index& ijk, const Scalar& v) {
    c.comult.column(static_cast<Tensor::Key>(ijk[2])).add({ijk[0], ijk[1]}, v);
  });
  a.algebra->unit().for_each([&](const Index& k, const Scalar& v) { c.counit.column(static_cast<Tensor::Key>(k[0])).add({}, v); });
  if (a.right_action) c.left_action = transpose_action(*a.right_action, false, dh, n);
  if (a.left_action) c.right_action = transpose_action(*a.left_action, true, dh, n);
  return c;
}

ModuleCoalgebra bimodule_to_HopH_module_coalgebra(const ModuleCoalgebra& c) {
  if (c.side != ModuleSide::bi) throw Error(ErrorKind::VariantMismatch, "expected a bimodule coalgebra");
  const QuasiHopfAlgebra& h = require_antipode(*c.base);
  auto K = std::make_shared<QuasiHopfAlgebra>(tensor_product(variant(h, Variant::op), h));
  int dh = h.dim(), n = c.dim;
  LinMap act = LinMap::from_function({dh * dh, n}, {n}, [&](const Index& i) {
    Tensor hh = h.algebra->basis(i[0] / dh), hp = h.algebra->basis(i[0] % dh);
    Tensor y = (*c.right_action)(Tensor::basis({n}, {i[1]}, h.eps(h.one())).outer(hh));
    return (*c.left_action)(hp.outer(y));
  });
  return make_module_coalgebra(ModuleSide::left, K, c.comult, c.counit, act, std::nullopt);
}

ModuleCoalgebra gauge_twist_module_coalgebra(const ModuleCoalgebra& c, const GaugeTransformation& g) {
  const QuasiBialgebra& h = *c.base;
  make_gauge(h, g.F);
  ModuleCoalgebra t = c;
  t.base = twisted_base(c.base, g);
  t.comult = LinMap::from_function({c.dim}, {c.dim, c.dim}, [&](const Index& i) {
    Tensor d = c.comult.image(i);
    if (has_left(c.side)) d = c.act_left(g.F, d);
    if (has_right(c.side)) d = c.act_right(d, g.F_inv);
    return d;
  });
  return t;
}

ModuleCoalgebra module_coalgebra_variant(const ModuleCoalgebra& c, Variant v) {
  ModuleCoalgebra t = c;
  t.base = base_variant(c.base, v);
  if (v != Variant::op) {
    for (Tensor::Key k = 0; k < c.comult.source_volume(); ++k) t.comult.column(k) = switch_legs(c.comult.column(k), 0, 1);
  }
  if (v != Variant::cop) {
    t.side = flip(c.side);
    t.left_action.reset();
    t.right_action.reset();
    if (c.right_action) t.left_action = swap_arguments(*c.right_action);
    if (c.left_action) t.right_action = swap_arguments(*c.left_action);
  }
  return t;
}

ModuleAlgebra module_algebra_variant(const ModuleAlgebra& a, Variant v) {
  ModuleAlgebra t = a;
  t.base = base_variant(a.base, v);
  if (v != Variant::op) t.algebra = a.algebra->op();
  if (v != Variant::cop) {
    t.side = flip(a.side);
    t.left_action.reset();
    t.right_action.reset();
    if (a.right_action) t.left_action = swap_arguments(*a.right_action);
    if (a.left_action) t.right_action = swap_arguments(*a.left_action);
  }
  return t;
}

ModuleCoalgebra as_right_op(const ModuleCoalgebra& c) {
  if (c.side != ModuleSide::left) throw Error(ErrorKind::VariantMismatch, "expected a left module coalgebra");
  return module_coalgebra_variant(c, Variant::op);
}

ModuleCoalgebra to_field(const ModuleCoalgebra& c, std::uint64_t p) {
  ModuleCoalgebra t = c;
  t.base = to_field(c.base, p);
  t.comult = c.comult.to_field(p);
  t.counit = c.counit.to_field(p);
  if (c.left_action) t.left_action = c.left_action->to_field(p);
  if (c.right_action) t.right_action = c.right_action->to_field(p);
  return t;
}

ModuleAlgebra to_field(const ModuleAlgebra& a, std::uint64_t p) {
  ModuleAlgebra t = a;
  t.base = to_field(a.base, p);
  t.algebra = a.algebra->to_field(p);
  if (a.left_action) t.left_action = a.left_action->to_field(p);
  if (a.right_action) t.right_action = a.right_action->to_field(p);
  return t;
}

namespace fixtures {

ModuleCoalgebra c2(const BialgebraRef& h, ModuleSide side) {
  Scalar one = h->eps(h->one());
  int dh = h->dim();
  LinMap d = LinMap::from_function({2}, {2, 2}, [&](const Index& i) { return Tensor::basis({2, 2}, {i[0], i[0]}, one); });
  LinMap e = LinMap::functional({one, one});
  LinMap la = LinMap::from_function({dh, 2}, {2}, [&](const Index& i) {
    return Tensor::basis({2}, {i[1]}, h->eps(h->algebra->basis(i[0])) * one);
  });
  LinMap ra = LinMap::from_function({2, dh}, {2}, [&](const Index& i) {
    return Tensor::basis({2}, {i[0]}, h->eps(h->algebra->basis(i[1])) * one);
  });
  return make_module_coalgebra(side, h, d, e, la, ra);
}

ModuleCoalgebra regular_module_coalgebra(const BialgebraRef& h, ModuleSide side) {
  const auto& H = h->algebra;
  int dh = h->dim();
  LinMap la = LinMap::from_function({dh, dh}, {dh}, [&](const Index& i) { return H->mul(H->basis(i[0]), H->basis(i[1])); });
  return make_module_coalgebra(side, h, h->comult, h->counit, la, la);
}

}  // namespace fixtures

}  // namespace qhopf
