// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhopf/doi_hopf.hpp"

#include "qhopf/error.hpp"
#include "qhopf/sweedler.hpp"

namespace qhopf {

namespace {

using V = std::vector<std::string>;

Tensor e(int n, int i) { return Tensor::basis({n}, {i}); }

Vec to_vec(const Tensor& t) {
  Vec v(t.volume());
  for (const auto& [k, x] : t.entries()) v[k] = x;
  return v;
}

Tensor from_vec(const Vec& v, const Dims& d) {
  Tensor t(d);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) t.add_key(k, v[k]);
  return t;
}

void append(Vec& out, const Tensor& t) {
  std::size_t base = out.size();
  out.resize(base + t.volume());
  for (const auto& [k, x] : t.entries()) out[base + k] = x;
}

// module action on Sweedler legs
Sweedler act(const Sweedler& s, const FiniteModule& m, const std::string& a, const std::string& x, const std::string& out) {
  V src = m.action_side == Side::left ? V{a, x} : V{x, a};
  return s.map(src, m.action, {Leg(out, m.dim)});
}

Sweedler lact(const Sweedler& s, const ModuleCoalgebra& c, const std::string& h, const std::string& x, const std::string& out) {
  return s.map(V{h, x}, *c.left_action, {Leg(out, c.dim)});
}

Sweedler ract(const Sweedler& s, const ModuleCoalgebra& c, const std::string& x, const std::string& h, const std::string& out) {
  return s.map(V{x, h}, *c.right_action, {Leg(out, c.dim)});
}

LinMap swap_arguments(const LinMap& f) {
  const Dims& s = f.source();
  return LinMap::from_function({s[1], s[0]}, f.target(), [&](const Index& i) { return f.image({i[1], i[0]}); });
}

LinMap switch_target(const LinMap& f) {
  const Dims& t = f.target();
  LinMap m(f.source(), {t[1], t[0]});
  for (Tensor::Key k = 0; k < f.source_volume(); ++k) m.column(k) = switch_legs(f.column(k), 0, 1);
  return m;
}

Side flip(Side s) { return s == Side::left ? Side::right : Side::left; }

bool has_left(const ModuleCoalgebra& c) { return c.side != ModuleSide::right; }
bool has_right(const ModuleCoalgebra& c) { return c.side != ModuleSide::left; }

Side module_side(DoiHopfVariant v) {
  return v == DoiHopfVariant::right_left || v == DoiHopfVariant::right_right ? Side::right : Side::left;
}

Side coaction_side(DoiHopfVariant v) {
  return v == DoiHopfVariant::right_left || v == DoiHopfVariant::left_left ? Side::left : Side::right;
}

void require_variant(const DoiHopfContext& ctx, DoiHopfVariant v, const char* what) {
  if (ctx.variant != v) throw Error(ErrorKind::VariantMismatch, std::string(what) + " needs a " + to_string(v) + " context");
}

void require_module(const FiniteModule& m, const DoiHopfContext& ctx, bool coaction) {
  if (m.action_side != module_side(ctx.variant))
    throw Error(ErrorKind::VariantMismatch, "module acts from the wrong side for this variant");
  if (!same_algebra(m.algebra, ctx.algebra.algebra)) throw Error(ErrorKind::MixedBase, "module over a different algebra");
  if (coaction && (!m.coaction || m.coaction_side != coaction_side(ctx.variant)))
    throw Error(ErrorKind::VariantMismatch, "module coaction missing or on the wrong side");
}

Tensor coaction_of(const FiniteModule& m, int i) { return m.coaction->image({i}); }

// op / cop / opcop identification with a right-left context
FiniteModule reflect_module(const FiniteModule& m, Variant v, const AlgebraRef& algebra) {
  FiniteModule t = m;
  t.algebra = algebra;
  if (v != Variant::cop) {
    t.action_side = flip(m.action_side);
    t.action = swap_arguments(m.action);
  }
  if (v != Variant::op && m.coaction) {
    t.coaction_side = flip(m.coaction_side);
    t.coaction = switch_target(*m.coaction);
  }
  return t;
}

Variant reflection(DoiHopfVariant v) {
  switch (v) {
    case DoiHopfVariant::left_right: return Variant::opcop;
    case DoiHopfVariant::right_right: return Variant::cop;
    case DoiHopfVariant::left_left: return Variant::op;
    case DoiHopfVariant::right_left: break;
  }
  throw Error(ErrorKind::Internal, "right-left has no reflection");
}

ComoduleVariant comodule_reflection(Variant v) {
  switch (v) {
    case Variant::op: return ComoduleVariant::op;
    case Variant::cop: return ComoduleVariant::cop;
    case Variant::opcop: return ComoduleVariant::opcop;
  }
  return ComoduleVariant::op;
}

// between right-left and `other`, in either direction
TranslatedModule reflect(const FiniteModule& m, const DoiHopfContext& ctx, DoiHopfVariant other) {
  Variant v = reflection(other);
  TranslatedModule t;
  t.context.variant = ctx.variant == DoiHopfVariant::right_left ? other : DoiHopfVariant::right_left;
  t.context.algebra = comodule_variant(ctx.algebra, comodule_reflection(v));
  t.context.coalgebra = module_coalgebra_variant(ctx.coalgebra, v);
  t.module = reflect_module(m, v, t.context.algebra.algebra);
  return t;
}

Vec module_residual(const LinMap& f, const FiniteModule& m, const FiniteModule& n) {
  Vec out;
  int da = m.algebra->dim();
  for (int a = 0; a < da; ++a)
    for (int i = 0; i < m.dim; ++i) {
      Tensor x = m.algebra->basis(a), v = e(m.dim, i);
      Tensor d = f(m.act(x, v));
      d -= n.act(x, f(v));
      append(out, d);
    }
  return out;
}

Vec comodule_residual(const LinMap& f, const FiniteModule& m, const FiniteModule& n) {
  Vec out;
  int pos = m.coaction_side == Side::left ? 1 : 0;
  for (int i = 0; i < m.dim; ++i) {
    Tensor d = apply_linear_map(f, coaction_of(m, i), pos);
    d -= n.coaction->operator()(f(e(m.dim, i)));
    append(out, d);
  }
  return out;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<LinMap> solve_homs(int dm, int dn, const std::function<Vec(const LinMap&)>& residual) {
  std::vector<Vec> cols;
  for (int c = 0; c < dm; ++c)
    for (int r = 0; r < dn; ++r) {
      LinMap f({dm}, {dn});
      f.column(c).add({r}, Scalar(1));
      cols.push_back(residual(f));
    }
  std::vector<LinMap> out;
  if (cols.empty()) return out;
  int rows = static_cast<int>(cols[0].size());
  Matrix mat(rows, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < rows; ++i) mat.at(i, static_cast<int>(j)) = cols[j][i];
  std::vector<Vec> ns = rows == 0 ? std::vector<Vec>{} : nullspace(mat);
  if (rows == 0)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      Vec v(cols.size());
      v[j] = Scalar(1);
      ns.push_back(v);
    }
  for (const auto& v : ns) {
    LinMap f({dm}, {dn});
    for (int c = 0; c < dm; ++c)
      for (int r = 0; r < dn; ++r) {
        const Scalar& x = v[static_cast<std::size_t>(c) * dn + r];
        if (!x.is_zero()) f.column(c).add({r}, x);
      }
    out.push_back(f);
  }
  return out;
}

Vec flatten(const LinMap& f) {
  Vec out;
  for (Tensor::Key k = 0; k < f.source_volume(); ++k) append(out, f.column(k));
  return out;
}

// coordinates of f in the span of `basis`
Vec coordinates(const LinMap& f, const std::vector<LinMap>& basis) {
  Vec target = flatten(f);
  Matrix mat(static_cast<int>(target.size()), static_cast<int>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Vec c = flatten(basis[j]);
    for (std::size_t i = 0; i < c.size(); ++i) mat.at(static_cast<int>(i), static_cast<int>(j)) = c[i];
  }
  if (basis.empty()) {
    if (!is_zero_vec(target)) throw Error(ErrorKind::Internal, "map outside the hom space");
    return {};
  }
  auto x = solve(mat, target);
  if (!x) throw Error(ErrorKind::Internal, "map outside the hom space");
  return *x;
}

ModuleCoalgebra right_part(const ModuleCoalgebra& c) {
  if (!has_right(c)) throw Error(ErrorKind::VariantMismatch, "expected a right module coalgebra");
  ModuleCoalgebra t = c;
  t.side = ModuleSide::right;
  t.left_action.reset();
  return t;
}

}  // namespace

Tensor FiniteModule::act(const Tensor& a, const Tensor& m) const {
  return action_side == Side::left ? action(a.outer(m)) : action(m.outer(a));
}

FiniteModule make_module(Side side, AlgebraRef algebra, LinMap action) {
  FiniteModule m;
  if (action.target().size() != 1) throw Error(ErrorKind::ShapeMismatch, "module action target");
  m.dim = action.target()[0];
  int da = algebra->dim();
  Dims want = side == Side::left ? Dims{da, m.dim} : Dims{m.dim, da};
  if (action.source() != want) throw Error(ErrorKind::ShapeMismatch, "module action source");
  m.algebra = std::move(algebra);
  m.action_side = side;
  m.action = std::move(action);
  return m;
}

FiniteModule regular_module(const AlgebraRef& a, Side side) {
  int n = a->dim();
  LinMap mult = LinMap::from_function({n, n}, {n}, [&](const Index& i) { return a->mul(a->basis(i[0]), a->basis(i[1])); });
  return make_module(side, a, mult);
}

FiniteModule trivial_module(const AlgebraRef& a, Side side, const LinMap& character) {
  int n = a->dim();
  Dims src = side == Side::left ? Dims{n, 1} : Dims{1, n};
  LinMap act = LinMap::from_function(src, {1}, [&](const Index& i) {
    return e(1, 0) * character(a->basis(side == Side::left ? i[0] : i[1])).get_key(0);
  });
  return make_module(side, a, act);
}

FiniteModule direct_sum(const FiniteModule& m, const FiniteModule& n) {
  if (m.action_side != n.action_side || !same_algebra(m.algebra, n.algebra))
    throw Error(ErrorKind::MixedBase, "direct sum of modules over different algebras");
  int d = m.dim + n.dim, da = m.algebra->dim();
  bool left = m.action_side == Side::left;
  auto inject = [&](const Tensor& t, int off) {
    Tensor o({d});
    t.for_each([&](const Index& i, const Scalar& v) { o.add({i[0] + off}, v); });
    return o;
  };
  Dims src = left ? Dims{da, d} : Dims{d, da};
  LinMap act = LinMap::from_function(src, {d}, [&](const Index& i) {
    int a = left ? i[0] : i[1], k = left ? i[1] : i[0];
    Tensor x = m.algebra->basis(a);
    return k < m.dim ? inject(m.act(x, e(m.dim, k)), 0) : inject(n.act(x, e(n.dim, k - m.dim)), m.dim);
  });
  FiniteModule s = make_module(m.action_side, m.algebra, act);
  if (m.coaction && n.coaction) {
    if (m.coaction_side != n.coaction_side) throw Error(ErrorKind::VariantMismatch, "coactions on different sides");
    bool lc = m.coaction_side == Side::left;
    int dc = lc ? m.coaction->target()[0] : m.coaction->target()[1];
    s.coaction_side = m.coaction_side;
    s.coaction = LinMap::from_function({d}, lc ? Dims{dc, d} : Dims{d, dc}, [&](const Index& i) {
      const FiniteModule& src_m = i[0] < m.dim ? m : n;
      int off = i[0] < m.dim ? 0 : m.dim;
      Tensor t = coaction_of(src_m, i[0] - off);
      Tensor o(lc ? Dims{dc, d} : Dims{d, dc});
      t.for_each([&](const Index& j, const Scalar& v) {
        o.add(lc ? Index{j[0], j[1] + off} : Index{j[0] + off, j[1]}, v);
      });
      return o;
    });
  }
  return s;
}

CheckReport verify_module(const FiniteModule& m) {
  CheckReport r;
  const auto& A = m.algebra;
  int da = A->dim();
  r.for_all("module.unit", {m.dim}, [&](const Index& i) {
    return CheckReport::Sides{m.act(A->unit(), e(m.dim, i[0])), e(m.dim, i[0])};
  });
  r.for_all("module.assoc", {da, da, m.dim}, [&](const Index& i) {
    Tensor a = A->basis(i[0]), b = A->basis(i[1]), x = e(m.dim, i[2]);
    if (m.action_side == Side::left) return CheckReport::Sides{m.act(A->mul(a, b), x), m.act(a, m.act(b, x))};
    return CheckReport::Sides{m.act(A->mul(a, b), x), m.act(b, m.act(a, x))};
  });
  return r;
}

const char* to_string(DoiHopfVariant v) {
  switch (v) {
    case DoiHopfVariant::right_left: return "right-left";
    case DoiHopfVariant::left_right: return "left-right";
    case DoiHopfVariant::right_right: return "right-right";
    case DoiHopfVariant::left_left: return "left-left";
  }
  return "?";
}

DoiHopfVariant parse_doi_hopf_variant(const std::string& s) {
  for (auto v : {DoiHopfVariant::right_left, DoiHopfVariant::left_right, DoiHopfVariant::right_right, DoiHopfVariant::left_left})
    if (s == to_string(v)) return v;
  throw Error(ErrorKind::UsageError, "unknown Doi-Hopf variant '" + s + "'");
}

DoiHopfContext make_doi_hopf_context(DoiHopfVariant v, ComoduleAlgebra a, ModuleCoalgebra c) {
  require_same_base(*a.base, *c.base);
  Side want_algebra = coaction_side(v) == Side::left ? Side::left : Side::right;
  bool want_right_c = module_side(v) == Side::right;
  if (a.side != want_algebra) throw Error(ErrorKind::VariantMismatch, std::string(to_string(v)) + ": comodule algebra on the wrong side");
  if (want_right_c ? !has_right(c) : !has_left(c))
    throw Error(ErrorKind::VariantMismatch, std::string(to_string(v)) + ": module coalgebra on the wrong side");
  return DoiHopfContext{v, std::move(a), std::move(c)};
}

CheckReport verify_doi_hopf(const FiniteModule& m, const DoiHopfContext& ctx) {
  require_module(m, ctx, false);
  CheckReport r;
  r.merge(verify_module(m));
  if (!m.coaction || m.coaction_side != coaction_side(ctx.variant)) {
    r.expect("coaction.present", false, "no coaction on the variant's side");
    return r;
  }
  const ComoduleAlgebra& A = ctx.algebra;
  const ModuleCoalgebra& c = ctx.coalgebra;
  const auto& H = A.base->algebra;
  const auto& R = A.algebra;
  const LinMap& co = *m.coaction;
  int n = c.dim, d = m.dim, da = R->dim();
  switch (ctx.variant) {
    case DoiHopfVariant::right_left: {
      r.for_all("dhm1", {d}, [&](const Index& i) {
        Tensor l = coaction_of(m, i[0]);
        Tensor t = apply_linear_map(co, l, 1);
        Sweedler s = Sweedler(t, {Leg("c1", n), Leg("c2", n), Leg("x", d)}) * Sweedler(A.phi, {{"X1", H}, {"X2", H}, {"X3", R}});
        s = act(ract(ract(s, c, "c1", "X1", "u1"), c, "c2", "X2", "u2"), m, "X3", "x", "u3");
        return CheckReport::Sides{apply_linear_map(c.comult, l, 0), s.take({"u1", "u2", "u3"})};
      });
      r.for_all("dhm2", {d}, [&](const Index& i) {
        return CheckReport::Sides{apply_linear_map(c.counit, coaction_of(m, i[0]), 0), e(d, i[0])};
      });
      r.for_all("dhm3", {d, da}, [&](const Index& i) {
        Tensor b = R->basis(i[1]);
        Sweedler s = Sweedler(coaction_of(m, i[0]), {Leg("mm", n), Leg("m0", d)}) * Sweedler(A.coaction(b), {{"bm", H}, {"b0", R}});
        s = act(ract(s, c, "mm", "bm", "u"), m, "b0", "m0", "v");
        return CheckReport::Sides{co(m.act(b, e(d, i[0]))), s.take({"u", "v"})};
      });
      break;
    }
    case DoiHopfVariant::left_right: {
      r.for_all("lrdhm1", {d}, [&](const Index& i) {
        Tensor p = coaction_of(m, i[0]);
        Sweedler s = Sweedler(apply_linear_map(co, p, 0), {Leg("x", d), Leg("c1", n), Leg("c2", n)}) *
                     Sweedler(A.phi, {{"X1", R}, {"X2", H}, {"X3", H}});
        s = lact(lact(act(s, m, "X1", "x", "u0"), c, "X2", "c1", "u1"), c, "X3", "c2", "u2");
        return CheckReport::Sides{s.take({"u0", "u1", "u2"}), apply_linear_map(c.comult, p, 1)};
      });
      r.for_all("lrdhm2", {d}, [&](const Index& i) {
        return CheckReport::Sides{apply_linear_map(c.counit, coaction_of(m, i[0]), 1), e(d, i[0])};
      });
      r.for_all("lrdhm3", {d, da}, [&](const Index& i) {
        Tensor a = R->basis(i[1]);
        Sweedler s = Sweedler(coaction_of(m, i[0]), {Leg("m0", d), Leg("m1", n)}) * Sweedler(A.coaction(a), {{"a0", R}, {"a1", H}});
        s = lact(act(s, m, "a0", "m0", "u"), c, "a1", "m1", "v");
        return CheckReport::Sides{co(m.act(a, e(d, i[0]))), s.take({"u", "v"})};
      });
      break;
    }
    case DoiHopfVariant::right_right: {
      r.for_all("rrdhm1", {d}, [&](const Index& i) {
        Tensor p = coaction_of(m, i[0]);
        Sweedler s = Sweedler(apply_linear_map(c.comult, p, 1), {Leg("x", d), Leg("c1", n), Leg("c2", n)}) *
                     Sweedler(A.phi, {{"X1", R}, {"X2", H}, {"X3", H}});
        s = ract(ract(act(s, m, "X1", "x", "u0"), c, "c1", "X2", "u1"), c, "c2", "X3", "u2");
        return CheckReport::Sides{apply_linear_map(co, p, 0), s.take({"u0", "u1", "u2"})};
      });
      r.for_all("rrdhm2", {d}, [&](const Index& i) {
        return CheckReport::Sides{apply_linear_map(c.counit, coaction_of(m, i[0]), 1), e(d, i[0])};
      });
      r.for_all("rrdhm3", {d, da}, [&](const Index& i) {
        Tensor a = R->basis(i[1]);
        Sweedler s = Sweedler(coaction_of(m, i[0]), {Leg("m0", d), Leg("m1", n)}) * Sweedler(A.coaction(a), {{"a0", R}, {"a1", H}});
        s = ract(act(s, m, "a0", "m0", "u"), c, "m1", "a1", "v");
        return CheckReport::Sides{co(m.act(a, e(d, i[0]))), s.take({"u", "v"})};
      });
      break;
    }
    case DoiHopfVariant::left_left: {
      r.for_all("lldhm1", {d}, [&](const Index& i) {
        Tensor l = coaction_of(m, i[0]);
        Sweedler s = Sweedler(apply_linear_map(c.comult, l, 0), {Leg("c1", n), Leg("c2", n), Leg("x", d)}) *
                     Sweedler(A.phi, {{"X1", H}, {"X2", H}, {"X3", R}});
        s = act(lact(lact(s, c, "X1", "c1", "u1"), c, "X2", "c2", "u2"), m, "X3", "x", "u3");
        return CheckReport::Sides{s.take({"u1", "u2", "u3"}), apply_linear_map(co, l, 1)};
      });
      r.for_all("lldhm2", {d}, [&](const Index& i) {
        return CheckReport::Sides{apply_linear_map(c.counit, coaction_of(m, i[0]), 0), e(d, i[0])};
      });
      r.for_all("lldhm3", {d, da}, [&](const Index& i) {
        Tensor b = R->basis(i[1]);
        Sweedler s = Sweedler(coaction_of(m, i[0]), {Leg("mm", n), Leg("m0", d)}) * Sweedler(A.coaction(b), {{"bm", H}, {"b0", R}});
        s = act(lact(s, c, "bm", "mm", "u"), m, "b0", "m0", "v");
        return CheckReport::Sides{co(m.act(b, e(d, i[0]))), s.take({"u", "v"})};
      });
      break;
    }
  }
  return r;
}

FiniteModule induce_doi_hopf(const FiniteModule& n, const DoiHopfContext& ctx) {
  require_module(n, ctx, false);
  if (ctx.variant == DoiHopfVariant::right_right || ctx.variant == DoiHopfVariant::left_left) {
    TranslatedModule t = reflect(n, ctx, ctx.variant);
    FiniteModule i = induce_doi_hopf(t.module, t.context);
    return reflect(i, t.context, ctx.variant).module;
  }
  const ComoduleAlgebra& A = ctx.algebra;
  const ModuleCoalgebra& c = ctx.coalgebra;
  const auto& H = A.base->algebra;
  const auto& R = A.algebra;
  int nc = c.dim, dn = n.dim, d = nc * dn, da = R->dim();
  FiniteModule out;
  out.dim = d;
  out.algebra = R;
  out.action_side = n.action_side;
  if (ctx.variant == DoiHopfVariant::right_left) {
    // (c (x) n).b = c.b[-1] (x) n.b[0]
    out.action = LinMap::from_function({d, da}, {d}, [&](const Index& i) {
      Sweedler s = Sweedler(A.coaction(R->basis(i[1])), {{"bm", H}, {"b0", R}}) *
                   Sweedler(Tensor::basis({nc, dn}, {i[0] / dn, i[0] % dn}), {Leg("c", nc), Leg("x", dn)});
      return act(ract(s, c, "c", "bm", "u"), n, "b0", "x", "v").take({"u", "v"}).reshaped({d});
    });
    out.coaction_side = Side::left;
    out.coaction = LinMap::from_function({d}, {nc, d}, [&](const Index& i) {
      Sweedler s = Sweedler(c.comult(e(nc, i[0] / dn)), {Leg("c1", nc), Leg("c2", nc)}) *
                   Sweedler(A.phi_inv, {{"x1", H}, {"x2", H}, {"x3", R}}) * Sweedler(e(dn, i[0] % dn), {Leg("x", dn)});
      s = act(ract(ract(s, c, "c1", "x1", "u1"), c, "c2", "x2", "u2"), n, "x3", "x", "v");
      return s.take({"u1", "u2", "v"}).reshaped({nc, d});
    });
  } else {
    // a.(n (x) c) = a<0>.n (x) a<1>.c
    out.action = LinMap::from_function({da, d}, {d}, [&](const Index& i) {
      Sweedler s = Sweedler(A.coaction(R->basis(i[0])), {{"a0", R}, {"a1", H}}) *
                   Sweedler(Tensor::basis({dn, nc}, {i[1] / nc, i[1] % nc}), {Leg("x", dn), Leg("c", nc)});
      return lact(act(s, n, "a0", "x", "u"), c, "a1", "c", "v").take({"u", "v"}).reshaped({d});
    });
    out.coaction_side = Side::right;
    out.coaction = LinMap::from_function({d}, {d, nc}, [&](const Index& i) {
      Sweedler s = Sweedler(e(dn, i[0] / nc), {Leg("x", dn)}) * Sweedler(c.comult(e(nc, i[0] % nc)), {Leg("c1", nc), Leg("c2", nc)}) *
                   Sweedler(A.phi_inv, {{"x1", R}, {"x2", H}, {"x3", H}});
      s = lact(lact(act(s, n, "x1", "x", "u0"), c, "x2", "c1", "u1"), c, "x3", "c2", "u2");
      return s.take({"u0", "u1", "u2"}).reshaped({d, nc});
    });
  }
  return out;
}

LinMap induce_morphism(const LinMap& f, const FiniteModule& n, const DoiHopfContext& ctx) {
  int nc = ctx.coalgebra.dim;
  if (f.source() != Dims{n.dim} || f.target().size() != 1) throw Error(ErrorKind::ShapeMismatch, "module map shape");
  int dn = n.dim, dn2 = f.target()[0];
  LinMap id = LinMap::identity({nc});
  LinMap k = ctx.variant == DoiHopfVariant::left_right ? f.kron(id) : id.kron(f);
  return LinMap::from_matrix({nc * dn}, {nc * dn2}, k.matrix());
}

TranslatedModule translate_variant(const FiniteModule& m, const DoiHopfContext& ctx, DoiHopfVariant to) {
  require_module(m, ctx, false);
  if (ctx.variant == to) return {m, ctx};
  TranslatedModule t{m, ctx};
  if (ctx.variant != DoiHopfVariant::right_left) t = reflect(m, ctx, ctx.variant);
  if (to != DoiHopfVariant::right_left) t = reflect(t.module, t.context, to);
  return t;
}

std::vector<LinMap> module_homs(const FiniteModule& m, const FiniteModule& n) {
  if (m.action_side != n.action_side || !same_algebra(m.algebra, n.algebra))
    throw Error(ErrorKind::MixedBase, "modules over different algebras");
  return solve_homs(m.dim, n.dim, [&](const LinMap& f) { return module_residual(f, m, n); });
}

std::vector<LinMap> doi_hopf_homs(const FiniteModule& m, const FiniteModule& n, const DoiHopfContext& ctx) {
  require_module(m, ctx, true);
  require_module(n, ctx, true);
  return solve_homs(m.dim, n.dim, [&](const LinMap& f) {
    Vec v = module_residual(f, m, n);
    Vec w = comodule_residual(f, m, n);
    v.insert(v.end(), w.begin(), w.end());
    return v;
  });
}

Adjunction adjunction_maps(const FiniteModule& m, const FiniteModule& n, const DoiHopfContext& ctx) {
  require_variant(ctx, DoiHopfVariant::right_left, "adjunction_maps");
  require_module(m, ctx, true);
  require_module(n, ctx, false);
  const auto& B = ctx.algebra.algebra;
  const ModuleCoalgebra& c = ctx.coalgebra;
  int nc = c.dim, dm = m.dim, dn = n.dim, db = B->dim();
  Adjunction a;
  LinMap lam = *m.coaction;
  LinMap eps = c.counit;
  a.xi = [lam, dm, dn, nc](const LinMap& s) {
    return LinMap::from_function({dm}, {nc * dn}, [&](const Index& i) {
      return apply_linear_map(s, lam.image(i), 1).reshaped({nc * dn});
    });
  };
  a.zeta = [eps, dm, dn, nc](const LinMap& x) {
    return LinMap::from_function({dm}, {dn}, [&](const Index& i) {
      return apply_linear_map(eps, x.image(i).reshaped({nc, dn}), 0);
    });
  };
  FiniteModule cb = induce_doi_hopf(regular_module(B, Side::right), ctx);
  a.hom_cb = doi_hopf_homs(cb, m, ctx);
  auto homs = a.hom_cb;
  int k = static_cast<int>(homs.size());
  // (eta.b)(c (x) b') = eta(c (x) b b')
  auto times = [B, nc, db](const LinMap& eta, const Tensor& b) {
    return LinMap::from_function({nc * db}, eta.target(), [&](const Index& i) {
      return eta(e(nc, i[0] / db).outer(B->mul(b, B->basis(i[0] % db))).reshaped({nc * db}));
    });
  };
  LinMap act = LinMap::from_function({k, db}, {k}, [&](const Index& i) {
    return from_vec(coordinates(times(homs[i[0]], B->basis(i[1])), homs), {k});
  });
  a.hom_cb_module = make_module(Side::right, B, act);
  FiniteModule nn = n;
  a.xi_prime = [homs, nn, nc, db, dm, k](const LinMap& s) {
    return LinMap::from_function({nn.dim}, {k}, [&](const Index& i) {
      LinMap eta = LinMap::from_function({nc * db}, {dm}, [&](const Index& j) {
        Tensor x = nn.act(nn.algebra->basis(j[0] % db), e(nn.dim, i[0]));
        return s(e(nc, j[0] / db).outer(x).reshaped({nc * nn.dim}));
      });
      return from_vec(coordinates(eta, homs), {k});
    });
  };
  a.zeta_prime = [homs, B, nc, dn, dm, db](const LinMap& x) {
    return LinMap::from_function({nc * dn}, {dm}, [&](const Index& i) {
      Tensor y = x(e(dn, i[0] % dn));
      Tensor out({dm});
      y.for_each([&](const Index& j, const Scalar& v) {
        out += homs[j[0]](e(nc, i[0] / dn).outer(B->unit()).reshaped({nc * db})) * v;
      });
      return out;
    });
  };
  return a;
}

CheckReport verify_adjunction(const FiniteModule& m, const FiniteModule& n, const DoiHopfContext& ctx,
                              const std::optional<std::pair<LinMap, FiniteModule>>& theta) {
  Adjunction a = adjunction_maps(m, n, ctx);
  FiniteModule cn = induce_doi_hopf(n, ctx);
  CheckReport r;
  auto h1 = module_homs(m, n);
  auto h2 = doi_hopf_homs(m, cn, ctx);
  r.expect("xi.dimension", h1.size() == h2.size());
  bool land = true, back = true;
  for (const auto& s : h1) {
    LinMap x = a.xi(s);
    land = land && is_zero_vec(module_residual(x, m, cn)) && is_zero_vec(comodule_residual(x, m, cn));
    back = back && a.zeta(x) == s;
  }
  r.expect("xi.image", land);
  r.expect("zeta.xi", back);
  land = back = true;
  for (const auto& g : h2) {
    LinMap s = a.zeta(g);
    land = land && is_zero_vec(module_residual(s, m, n));
    back = back && a.xi(s) == g;
  }
  r.expect("zeta.image", land);
  r.expect("xi.zeta", back);

  r.merge(verify_module(a.hom_cb_module), "hom_cb.");
  auto h3 = doi_hopf_homs(cn, m, ctx);
  auto h4 = module_homs(n, a.hom_cb_module);
  r.expect("xi_prime.dimension", h3.size() == h4.size());
  land = back = true;
  for (const auto& s : h3) {
    LinMap x = a.xi_prime(s);
    land = land && is_zero_vec(module_residual(x, n, a.hom_cb_module));
    back = back && a.zeta_prime(x) == s;
  }
  r.expect("xi_prime.image", land);
  r.expect("zeta_prime.xi_prime", back);
  land = back = true;
  for (const auto& g : h4) {
    LinMap s = a.zeta_prime(g);
    land = land && is_zero_vec(module_residual(s, cn, m)) && is_zero_vec(comodule_residual(s, cn, m));
    back = back && a.xi_prime(s) == g;
  }
  r.expect("zeta_prime.image", land);
  r.expect("xi_prime.zeta_prime", back);

  if (theta) {
    const auto& [f, n2] = *theta;
    r.expect("theta.linear", is_zero_vec(module_residual(f, n, n2)));
    Adjunction a2 = adjunction_maps(m, n2, ctx);
    LinMap cf = induce_morphism(f, n, ctx);
    bool nat = true;
    for (const auto& s : h1) nat = nat && a2.xi(f.after(s)) == cf.after(a.xi(s));
    r.expect("xi.natural", nat);
    nat = true;
    for (const auto& g : h2) nat = nat && a2.zeta(cf.after(g)) == f.after(a.zeta(g));
    r.expect("zeta.natural", nat);
  }
  return r;
}

SmashModule to_smash_module(const FiniteModule& m, const DoiHopfContext& ctx) {
  require_variant(ctx, DoiHopfVariant::right_left, "to_smash_module");
  require_module(m, ctx, true);
  SmashModule s;
  s.algebra = generalized_smash(dualize(right_part(ctx.coalgebra)), ctx.algebra);
  int nc = ctx.coalgebra.dim, db = ctx.algebra.algebra->dim(), d = m.dim;
  // m.(c* >< b) = c*(m{-1}) m{0}.b
  LinMap act = LinMap::from_function({d, nc * db}, {d}, [&](const Index& i) {
    int k = i[1] / db;
    Tensor slice({d});
    coaction_of(m, i[0]).for_each([&](const Index& j, const Scalar& v) {
      if (j[0] == k) slice.add({j[1]}, v);
    });
    return m.act(ctx.algebra.algebra->basis(i[1] % db), slice);
  });
  s.module = make_module(Side::right, s.algebra.algebra, act);
  return s;
}

SmashModule free_smash_module(const DoiHopfContext& ctx) {
  require_variant(ctx, DoiHopfVariant::right_left, "free_smash_module");
  SmashModule s;
  s.algebra = generalized_smash(dualize(right_part(ctx.coalgebra)), ctx.algebra);
  s.module = regular_module(s.algebra.algebra, Side::right);
  return s;
}

LinMap rational_check(const SmashModule& m, const DoiHopfContext& ctx) {
  const FiniteModule& M = m.module;
  const ProductAlgebra& P = m.algebra;
  if (!same_algebra(M.algebra, P.algebra) || M.action_side != Side::right)
    throw Error(ErrorKind::MixedBase, "module is not a right module over the smash product");
  int nc = P.first_dim, db = P.second_dim, d = M.dim;
  if (nc != ctx.coalgebra.dim) throw Error(ErrorKind::ShapeMismatch, "smash product does not match the context");
  const auto& B = P.sub;
  auto elt = [&](const Tensor& cs, const Tensor& b) { return P.element(cs, b); };
  Tensor eps = P.other_unit;
  // m -> sum_i e_i (x) m.(e^i >< 1)
  LinMap lam = LinMap::from_function({d}, {nc, d}, [&](const Index& i) {
    Tensor out({nc, d});
    for (int k = 0; k < nc; ++k) out += e(nc, k).outer(M.act(elt(e(nc, k), B->unit()), e(d, i[0])));
    return out;
  });
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < nc; ++k)
      for (int b = 0; b < db; ++b) {
        Tensor lhs = M.act(elt(e(nc, k), B->basis(b)), e(d, i));
        Tensor rhs = M.act(elt(eps, B->basis(b)), M.act(elt(e(nc, k), B->unit()), e(d, i)));
        if (lhs != rhs)
          throw Error(ErrorKind::NotRational, "action does not factor through the dual-basis coaction at basis vector " + std::to_string(i));
      }
  return lam;
}

std::vector<Vec> compute_rat(const SmashModule& m, const DoiHopfContext& ctx) {
  const FiniteModule& M = m.module;
  const ProductAlgebra& P = m.algebra;
  int nc = P.first_dim, db = P.second_dim, d = M.dim, np = nc * db;
  if (nc != ctx.coalgebra.dim) throw Error(ErrorKind::ShapeMismatch, "smash product does not match the context");
  if (d == 0) return {};
  const auto& B = P.sub;
  int rows = np * d, cols = d + nc * d;
  Matrix mat(rows, cols);
  // mu(m)(p) = m.p
  for (int j = 0; j < d; ++j)
    for (int p = 0; p < np; ++p)
      M.act(P.algebra->basis(p), e(d, j)).for_each([&](const Index& s, const Scalar& v) { mat.at(p * d + s[0], j) = v; });
  // nu(c (x) m)(c* >< b) = c*(c) m.(eps >< b), with the sign moved across
  for (int c = 0; c < nc; ++c)
    for (int j = 0; j < d; ++j)
      for (int b = 0; b < db; ++b)
        M.act(P.element(P.other_unit, B->basis(b)), e(d, j)).for_each([&](const Index& s, const Scalar& v) {
          mat.at((c * db + b) * d + s[0], d + c * d + j) -= v;
        });
  Matrix proj(0, d);
  for (const auto& v : nullspace(mat)) proj.append_row(Vec(v.begin(), v.begin() + d));
  std::vector<Vec> out;
  if (proj.rows() == 0) return out;
  Echelon ech = rref(proj);
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) out.push_back(ech.reduced.row(static_cast<int>(i)));
  return out;
}

bool is_submodule(const FiniteModule& m, const std::vector<Vec>& basis) {
  Matrix s(0, m.dim);
  for (const auto& v : basis) s.append_row(v);
  int r = rank(s);
  for (const auto& v : basis)
    for (int a = 0; a < m.algebra->dim(); ++a) {
      Matrix t = s;
      t.append_row(to_vec(m.act(m.algebra->basis(a), from_vec(v, {m.dim}))));
      if (rank(t) != r) return false;
    }
  return true;
}

int cyclic_dimension(const FiniteModule& m, const Tensor& v) {
  Matrix span(0, m.dim);
  std::vector<Tensor> todo{v};
  int r = 0;
  while (!todo.empty()) {
    Tensor x = todo.back();
    todo.pop_back();
    Matrix t = span;
    t.append_row(to_vec(x));
    if (rank(t) == r) continue;
    span = t;
    ++r;
    for (int a = 0; a < m.algebra->dim(); ++a) todo.push_back(m.act(m.algebra->basis(a), x));
  }
  return r;
}

CheckReport verify_yd(const FiniteModule& m, const BicomoduleAlgebra& a, const ModuleCoalgebra& c) {
  require_same_base(*a.base, *c.base);
  if (c.side != ModuleSide::bi) throw Error(ErrorKind::VariantMismatch, "expected a bimodule coalgebra");
  if (m.action_side != Side::left || !same_algebra(m.algebra, a.algebra))
    throw Error(ErrorKind::VariantMismatch, "expected a left module over the bicomodule algebra");
  CheckReport r;
  r.merge(verify_module(m));
  if (!m.coaction || m.coaction_side != Side::right) {
    r.expect("coaction.present", false, "no right coaction");
    return r;
  }
  const auto& H = a.base->algebra;
  const auto& A = a.algebra;
  const LinMap& rho = *m.coaction;
  int n = c.dim, d = m.dim;
  r.for_all("lryd1", {d}, [&](const Index& i) {
    Sweedler s = Sweedler(rho.image(i), {Leg("m0", d), Leg("m1", n)}) * Sweedler(a.phi_lr_inv, {{"t1", H}, {"t2", A}, {"t3", H}});
    s = act(s, m, "t2", "m0", "u").map("u", rho, {Leg("u0", d), Leg("u1", n)});
    s = lact(ract(s, c, "u1", "t1", "w1"), c, "t3", "m1", "w2");
    Sweedler t = Sweedler(e(d, i[0]), {Leg("x", d)}) * Sweedler(a.phi_lambda_inv, {{"l1", H}, {"l2", H}, {"l3", A}}) *
                 Sweedler(a.phi_rho_inv, {{"r1", A}, {"r2", H}, {"r3", H}});
    t = act(t, m, "l3", "x", "u").map("u", rho, {Leg("u0", d), Leg("u1", n)}).map("u1", c.comult, {Leg("v1", n), Leg("v2", n)});
    t = act(t, m, "r1", "u0", "z0");
    t = ract(lact(t, c, "r2", "v1", "y1"), c, "y1", "l1", "z1");
    t = ract(lact(t, c, "r3", "v2", "y2"), c, "y2", "l2", "z2");
    return CheckReport::Sides{s.take({"u0", "w1", "w2"}), t.take({"z0", "z1", "z2"})};
  });
  r.for_all("lryd2", {A->dim(), d}, [&](const Index& i) {
    Tensor u = A->basis(i[0]);
    Sweedler s = Sweedler(rho.image({i[1]}), {Leg("m0", d), Leg("m1", n)}) * Sweedler(a.rho(u), {{"a0", A}, {"a1", H}});
    s = lact(act(s, m, "a0", "m0", "p"), c, "a1", "m1", "q");
    Sweedler t = Sweedler(a.lambda(u), {{"b1", H}, {"b0", A}}) * Sweedler(e(d, i[1]), {Leg("x", d)});
    t = act(t, m, "b0", "x", "y").map("y", rho, {Leg("y0", d), Leg("y1", n)});
    t = ract(t, c, "y1", "b1", "z");
    return CheckReport::Sides{s.take({"p", "q"}), t.take({"y0", "z"})};
  });
  r.for_all("lryd.counit", {d}, [&](const Index& i) {
    return CheckReport::Sides{apply_linear_map(c.counit, rho.image(i), 1), e(d, i[0])};
  });
  return r;
}

DoiHopfContext yd_context(const BicomoduleAlgebra& a, const ModuleCoalgebra& c) {
  CoactionPair pair = bicomodule_to_right_HopH(a, false);
  return make_doi_hopf_context(DoiHopfVariant::left_right, pair.second, bimodule_to_HopH_module_coalgebra(c));
}

FiniteModule yd_to_doihopf(const FiniteModule& m, const BicomoduleAlgebra& a, const ModuleCoalgebra& c) {
  require_same_base(*a.base, *c.base);
  if (!m.coaction || m.coaction_side != Side::right || m.action_side != Side::left)
    throw Error(ErrorKind::VariantMismatch, "expected a left module with a right coaction");
  const auto& H = a.base->algebra;
  const auto& A = a.algebra;
  Tensor p = tilde_elements(a.left()).p;
  int n = c.dim, d = m.dim;
  const LinMap& rho = *m.coaction;
  FiniteModule out = m;
  // rho'(m) = (p2.m)(0) (x) (p2.m)(1).p1
  out.coaction = LinMap::from_function({d}, {d, n}, [&](const Index& i) {
    Sweedler s = Sweedler(p, {{"p1", H}, {"p2", A}}) * Sweedler(e(d, i[0]), {Leg("x", d)});
    s = act(s, m, "p2", "x", "y").map("y", rho, {Leg("y0", d), Leg("y1", n)});
    return ract(s, c, "y1", "p1", "z").take({"y0", "z"});
  });
  return out;
}

FiniteModule doihopf_to_yd(const FiniteModule& m, const BicomoduleAlgebra& a, const ModuleCoalgebra& c) {
  require_same_base(*a.base, *c.base);
  if (!m.coaction || m.coaction_side != Side::right || m.action_side != Side::left)
    throw Error(ErrorKind::VariantMismatch, "expected a left module with a right coaction");
  const QuasiHopfAlgebra& h = require_antipode(*a.base);
  const auto& H = h.algebra;
  const auto& A = a.algebra;
  Tensor q = tilde_elements(a.left()).q;
  int n = c.dim, d = m.dim;
  const LinMap& rho = *m.coaction;
  FiniteModule out = m;
  // (q2)<0>.m(0) (x) (q2)<1>.m(1).S^{-1}(q1)
  out.coaction = LinMap::from_function({d}, {d, n}, [&](const Index& i) {
    Sweedler s = Sweedler(q, {{"q1", H}, {"q2", A}}).apply("q1", h.S_inv()).map("q2", a.rho, {{"r0", A}, {"r1", H}}) *
                 Sweedler(rho.image(i), {Leg("m0", d), Leg("m1", n)});
    s = act(s, m, "r0", "m0", "y0");
    s = ract(lact(s, c, "r1", "m1", "y"), c, "y", "q1", "z");
    return s.take({"y0", "z"});
  });
  return out;
}

FiniteModule induce_yd(const FiniteModule& n, const BicomoduleAlgebra& a, const ModuleCoalgebra& c) {
  require_same_base(*a.base, *c.base);
  if (c.side != ModuleSide::bi) throw Error(ErrorKind::VariantMismatch, "expected a bimodule coalgebra");
  if (n.action_side != Side::left || !same_algebra(n.algebra, a.algebra))
    throw Error(ErrorKind::VariantMismatch, "expected a left module over the bicomodule algebra");
  const QuasiHopfAlgebra& h = require_antipode(*a.base);
  const auto& H = h.algebra;
  const auto& A = a.algebra;
  const LinMap& Si = h.S_inv();
  int nc = c.dim, dn = n.dim, d = dn * nc, da = A->dim();
  Tensor q = tilde_elements(a.left()).q;
  DrinfeldTwist dt = drinfeld_twist(h);
  FiniteModule out;
  out.dim = d;
  out.algebra = A;
  out.action_side = Side::left;
  // u.(n (x) c) = u[0]<0>.n (x) u[0]<1>.c.S^{-1}(u[-1])
  out.action = LinMap::from_function({da, d}, {d}, [&](const Index& i) {
    Sweedler s = Sweedler(a.lambda(A->basis(i[0])), {{"um", H}, {"u0", A}})
                     .map("u0", a.rho, {{"v0", A}, {"v1", H}})
                     .apply("um", Si) *
                 Sweedler(Tensor::basis({dn, nc}, {i[1] / nc, i[1] % nc}), {Leg("x", dn), Leg("c", nc)});
    s = act(s, n, "v0", "x", "y");
    s = ract(lact(s, c, "v1", "c", "w"), c, "w", "um", "z");
    return s.take({"y", "z"}).reshaped({d});
  });
  out.coaction_side = Side::right;
  out.coaction = LinMap::from_function({d}, {d, nc}, [&](const Index& i) {
    Sweedler s = Sweedler(e(dn, i[0] / nc), {Leg("x", dn)}) * Sweedler(c.comult(e(nc, i[0] % nc)), {Leg("c1", nc), Leg("c2", nc)}) *
                 Sweedler(a.phi_lr_inv, {{"t1", H}, {"t2", A}, {"t3", H}}) * Sweedler(a.phi_rho_inv, {{"r1", A}, {"r2", H}, {"r3", H}}) *
                 Sweedler(q, {{"q1", H}, {"q2", A}}) * Sweedler(a.phi_lambda, {{"L1", H}, {"L2", H}, {"L3", A}}) *
                 sw(dt.f_inv, H, {"g1", "g2"});
    s = s.map("q2", a.lambda, {{"qm", H}, {"q0", A}})
            .mul({"q0", "L3"}, "y")
            .map("y", a.rho, {{"y0", A}, {"y1", H}})
            .map("y1", h.comult, {{"y11", H}, {"y12", H}})
            .map("t2", a.rho, {{"t20", A}, {"t21", H}})
            .mul({"t20", "r1", "y0"}, "na")
            .mul({"t21", "r2", "y11"}, "h1")
            .mul({"t1", "qm", "L2", "g2"}, "k1")
            .mul({"t3", "r3", "y12"}, "h2")
            .mul({"q1", "L1", "g1"}, "k2")
            .apply("k1", Si)
            .apply("k2", Si);
    s = act(s, n, "na", "x", "o0");
    s = ract(lact(s, c, "h1", "c1", "w1"), c, "w1", "k1", "o1");
    s = ract(lact(s, c, "h2", "c2", "w2"), c, "w2", "k2", "o2");
    return s.take({"o0", "o1", "o2"}).reshaped({d, nc});
  });
  return out;
}

FiniteModule transport_twist(const FiniteModule& m, const Tensor& v, const DoiHopfContext& ctx) {
  require_variant(ctx, DoiHopfVariant::left_right, "transport_twist");
  require_module(m, ctx, true);
  const ComoduleAlgebra& A = ctx.algebra;
  const auto& H = A.base->algebra;
  const auto& R = A.algebra;
  if (v.dims() != Dims{R->dim(), H->dim()}) throw Error(ErrorKind::ShapeMismatch, "twist witness shape");
  if (apply_linear_map(A.base->counit, v, 1) != R->unit()) throw Error(ErrorKind::WitnessNotNormalized, "(id (x) eps)(V) must be 1");
  const ModuleCoalgebra& c = ctx.coalgebra;
  int n = c.dim, d = m.dim;
  FiniteModule out = m;
  // V1.m(0) (x) V2.m(1)
  out.coaction = LinMap::from_function({d}, {d, n}, [&](const Index& i) {
    Sweedler s = Sweedler(v, {{"v1", R}, {"v2", H}}) * Sweedler(coaction_of(m, i[0]), {Leg("m0", d), Leg("m1", n)});
    return lact(act(s, m, "v1", "m0", "y"), c, "v2", "m1", "z").take({"y", "z"});
  });
  return out;
}

}  // namespace qhopf
