// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include "qhopf/coring.hpp"
#include "qhopf/error.hpp"
#include "qhopf/fixtures.hpp"

using namespace qhopf;
using fixtures::c2;

static std::string failures(const CheckReport& r) {
  std::string s;
  for (const auto& rec : r.records())
    if (!rec.pass) s += rec.id + " ";
  return s;
}

static Tensor e(int n, int i) { return Tensor::basis({n}, {i}); }

static ModuleCoalgebra twisted_regular(ModuleSide side) {
  auto sw = fixtures::sweedler();
  return gauge_twist_module_coalgebra(fixtures::regular_module_coalgebra(sw, side), make_gauge(*sw, fixtures::sweedler_gauge()));
}

TEST_CASE("quotient space") {
  // k^3 modulo e0 - e1
  QuotientSpace q(3, {{Scalar(1), Scalar(-1), Scalar(0)}});
  CHECK(q.dim() == 2);
  CHECK(q.is_zero({Scalar(2), Scalar(-2), Scalar(0)}));
  CHECK_FALSE(q.is_zero({Scalar(1), Scalar(0), Scalar(0)}));
  CHECK(q.reduce({Scalar(1), Scalar(0), Scalar(0)}) == q.reduce({Scalar(0), Scalar(1), Scalar(0)}));
  CHECK(QuotientSpace(4, {}).dim() == 4);
}

TEST_CASE("trivial coring R over itself") {
  auto h = fixtures::h2();
  const auto& R = h->algebra;
  int n = R->dim();
  Coring x;
  x.ring = R;
  x.fiber = 1;
  x.free_left = true;
  x.left_action = LinMap::from_function({n, n}, {n}, [&](const Index& i) { return R->mul(R->basis(i[0]), R->basis(i[1])); });
  x.right_action = x.left_action;
  x.comult = LinMap::from_function({n}, {n, 1}, [&](const Index& i) { return e(n, i[0]).outer(e(1, 0)); });
  x.counit = LinMap::identity({n});
  CHECK(failures(verify_coring(x)) == "");
}

TEST_CASE("the three corings pass their axioms") {
  for (std::uint64_t p : {0ULL, 10007ULL})
    for (auto h : {fixtures::kz2(p), fixtures::h2(p), fixtures::twisted_sweedler(p)}) {
      Coring bc = build_coring_bc(regular_comodule_algebra(h, Side::left), c2(h, ModuleSide::right));
      CHECK(bc.dim() == 2 * h->dim());
      CHECK(failures(verify_coring(bc)) == "");
      Coring ca = build_coring_ca(regular_comodule_algebra(h, Side::right), c2(h, ModuleSide::left));
      CHECK(failures(verify_coring(ca)) == "");
    }
  for (std::uint64_t p : {0ULL, 10007ULL}) {
    Coring yd = build_coring_yd(fixtures::hh(p), fixtures::regular_module_coalgebra(fixtures::h2(p), ModuleSide::bi));
    CHECK(failures(verify_coring(yd)) == "");
    Coring yd2 = build_coring_yd(fixtures::hh(p), c2(fixtures::h2(p), ModuleSide::bi));
    CHECK(failures(verify_coring(yd2)) == "");
  }
  // noncommutative coalgebras with nontrivial actions
  ModuleCoalgebra cr = twisted_regular(ModuleSide::right), cl = twisted_regular(ModuleSide::left);
  CHECK(failures(verify_coring(build_coring_bc(regular_comodule_algebra(cr.base, Side::left), cr))) == "");
  CHECK(failures(verify_coring(build_coring_ca(regular_comodule_algebra(cl.base, Side::right), cl))) == "");
  ModuleCoalgebra cb = twisted_regular(ModuleSide::bi);
  CHECK(failures(verify_coring(build_coring_yd(regular_bicomodule_algebra(cb.base), cb))) == "");
}

TEST_CASE("YD coring is the CA coring of the second coaction") {
  for (std::uint64_t p : {0ULL, 10007ULL})
    for (bool regular : {true, false}) {
      BicomoduleAlgebra a = fixtures::hh(p);
      ModuleCoalgebra c = regular ? fixtures::regular_module_coalgebra(fixtures::h2(p), ModuleSide::bi) : c2(fixtures::h2(p), ModuleSide::bi);
      Coring yd = build_coring_yd(a, c);
      CoactionPair pair = bicomodule_to_right_HopH(a, false);
      Coring ca = build_coring_ca(pair.second, bimodule_to_HopH_module_coalgebra(c));
      CHECK(yd.left_action == ca.left_action);
      CHECK(yd.right_action == ca.right_action);
      CHECK(yd.comult == ca.comult);
      CHECK(yd.counit == ca.counit);
    }
  ModuleCoalgebra cb = twisted_regular(ModuleSide::bi);
  BicomoduleAlgebra a = regular_bicomodule_algebra(cb.base);
  Coring yd = build_coring_yd(a, cb);
  Coring ca = build_coring_ca(bicomodule_to_right_HopH(a, false).second, bimodule_to_HopH_module_coalgebra(cb));
  CHECK(yd.comult == ca.comult);
  CHECK(yd.left_action == ca.left_action);
}

TEST_CASE("coring counit and Hopf case structure") {
  // eps(b (x) c) = eps(c) b
  auto h = fixtures::h2();
  ModuleCoalgebra c = c2(h, ModuleSide::right);
  Coring bc = build_coring_bc(regular_comodule_algebra(h, Side::left), c);
  for (int b = 0; b < 2; ++b)
    for (int k = 0; k < 2; ++k) CHECK(bc.counit(e(4, b * 2 + k)) == h->algebra->basis(b));
  // KZ2 with the regular coalgebra: (b (x) c).b' = b b' (x) c b', Delta(b (x) c) = (b (x) c) (x)_B (1 (x) c)
  auto k2 = fixtures::kz2();
  Coring x = build_coring_bc(regular_comodule_algebra(k2, Side::left), fixtures::regular_module_coalgebra(k2, ModuleSide::right));
  for (int b = 0; b < 2; ++b)
    for (int cc = 0; cc < 2; ++cc) {
      int i = b * 2 + cc;
      CHECK(x.comult(e(4, i)) == e(4, i).outer(e(2, cc)));
      for (int b2 = 0; b2 < 2; ++b2)
        CHECK(x.right_action(e(4, i).outer(e(2, b2))) == e(4, ((b + b2) % 2) * 2 + (cc + b2) % 2));
    }
}

TEST_CASE("perturbed comultiplication is caught") {
  auto h = fixtures::h2();
  Coring bc = build_coring_bc(regular_comodule_algebra(h, Side::left), c2(h, ModuleSide::right));
  Coring bad = bc;
  bad.comult.column(1).add({0, 1}, Scalar(1));
  CheckReport r = verify_coring(bad);
  CHECK_FALSE(r.ok());
  REQUIRE(r.first_failure());
  Coring yd = build_coring_yd(fixtures::hh(), fixtures::regular_module_coalgebra(h, ModuleSide::bi));
  yd.comult.column(2).add({1, 0}, Scalar(3));
  CHECK_FALSE(verify_coring(yd).ok());
}

TEST_CASE("Doi-Hopf modules are coring comodules") {
  for (std::uint64_t p : {0ULL, 10007ULL})
    for (auto h : {fixtures::kz2(p), fixtures::h2(p), fixtures::twisted_sweedler(p)}) {
      DoiHopfContext ctx = make_doi_hopf_context(DoiHopfVariant::right_left, regular_comodule_algebra(h, Side::left), c2(h, ModuleSide::right));
      Coring bc = build_coring_bc(ctx.algebra, ctx.coalgebra);
      for (const auto& n : {regular_module(h->algebra, Side::right), trivial_module(h->algebra, Side::right, h->counit)}) {
        FiniteModule m = induce_doi_hopf(n, ctx);
        CoringComodule cm = doihopf_to_coring_comodule(m, ctx);
        CHECK(failures(verify_coring_comodule(cm, bc)) == "");
        FiniteModule back = coring_comodule_to_doihopf(cm, ctx);
        CHECK(*back.coaction == *m.coaction);
        CHECK(back.action == m.action);
        CHECK(failures(verify_doi_hopf(back, ctx)) == "");
      }
    }
  ModuleCoalgebra c = twisted_regular(ModuleSide::right);
  DoiHopfContext ctx = make_doi_hopf_context(DoiHopfVariant::right_left, regular_comodule_algebra(c.base, Side::left), c);
  FiniteModule m = induce_doi_hopf(regular_module(c.base->algebra, Side::right), ctx);
  CoringComodule cm = doihopf_to_coring_comodule(m, ctx);
  Coring bc = build_coring_bc(ctx.algebra, c);
  CHECK(failures(verify_coring_comodule(cm, bc)) == "");
  // a broken coaction fails both sides of the correspondence
  cm.coaction.column(0).add({1, 1}, Scalar(1));
  CHECK_FALSE(verify_coring_comodule(cm, bc).ok());
  CHECK_FALSE(verify_doi_hopf(coring_comodule_to_doihopf(cm, ctx), ctx).ok());
}
