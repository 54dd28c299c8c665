// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include "classical.hpp"
#include "qhopf/fixtures.hpp"

using namespace qhopf;
using namespace qhopf::classical;

// Sweedler's algebra is neither commutative nor cocommutative, so leg order matters
TEST_CASE("classical corings and induced modules over Sweedler's algebra") {
  for (std::uint64_t p : {0ULL, 10007ULL}) {
    auto h = fixtures::sweedler(p);
    ComoduleAlgebra bl = regular_comodule_algebra(h, Side::left), ar = regular_comodule_algebra(h, Side::right);
    ModuleCoalgebra rr = fixtures::regular_module_coalgebra(h, ModuleSide::right);
    ModuleCoalgebra rl = fixtures::regular_module_coalgebra(h, ModuleSide::left);
    ModuleCoalgebra rb = fixtures::regular_module_coalgebra(h, ModuleSide::bi);
    Coring bc = build_coring_bc(bl, rr);
    NaiveCoring nbc = naive_coring_bc(bl, rr);
    CHECK(bc.left_action == nbc.left_action);
    CHECK(bc.right_action == nbc.right_action);
    CHECK(bc.comult == nbc.comult);
    CHECK(bc.counit == nbc.counit);
    Coring ca = build_coring_ca(ar, rl);
    NaiveCoring nca = naive_coring_ca(ar, rl);
    CHECK(ca.left_action == nca.left_action);
    CHECK(ca.right_action == nca.right_action);
    CHECK(ca.comult == nca.comult);
    CHECK(ca.counit == nca.counit);
    BicomoduleAlgebra a = regular_bicomodule_algebra(h);
    Coring yd = build_coring_yd(a, rb);
    NaiveCoring nyd = naive_coring_yd(a, rb);
    CHECK(yd.left_action == nyd.left_action);
    CHECK(yd.right_action == nyd.right_action);
    CHECK(yd.comult == nyd.comult);
    CHECK(yd.counit == nyd.counit);

    DoiHopfContext rl_ctx = make_doi_hopf_context(DoiHopfVariant::right_left, bl, rr);
    FiniteModule m = induce_doi_hopf(regular_module(h->algebra, Side::right), rl_ctx);
    FiniteModule nm = naive_induce(regular_module(h->algebra, Side::right), rl_ctx);
    CHECK(m.action == nm.action);
    CHECK(*m.coaction == *nm.coaction);
    CHECK(to_smash_module(m, rl_ctx).module.action == naive_smash_action(m, rr.dim));
    DoiHopfContext lr_ctx = make_doi_hopf_context(DoiHopfVariant::left_right, ar, rl);
    FiniteModule l = induce_doi_hopf(regular_module(h->algebra, Side::left), lr_ctx);
    FiniteModule nl = naive_induce(regular_module(h->algebra, Side::left), lr_ctx);
    CHECK(l.action == nl.action);
    CHECK(*l.coaction == *nl.coaction);
    FiniteModule y = induce_yd(regular_module(h->algebra, Side::left), a, rb);
    FiniteModule ny = naive_induce_yd(regular_module(h->algebra, Side::left), a, rb);
    CHECK(y.action == ny.action);
    CHECK(*y.coaction == *ny.coaction);

    ModuleAlgebra ls = dualize(rl), rs = dualize(rr);
    CHECK(right_generalized_smash(ar, ls).algebra->structure() == naive_right_smash(ar, ls));
    CHECK(transposed_smash(rs, ar).algebra->structure() == naive_transposed_smash(rs, ar));
    CHECK(phi_isomorphism(rr).forward == naive_phi(*h, rs));
  }
}
