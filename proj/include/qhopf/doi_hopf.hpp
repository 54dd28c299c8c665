// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "qhopf/comodule_algebra.hpp"
#include "qhopf/linalg.hpp"
#include "qhopf/module_coalgebra.hpp"
#include "qhopf/smash.hpp"

namespace qhopf {

// Finite-dimensional module over `algebra`, optionally with a coaction of a
// coalgebra C: M -> C (x) M (left) or M -> M (x) C (right).
struct FiniteModule {
  int dim = 0;
  AlgebraRef algebra;
  Side action_side = Side::right;
  LinMap action;  // A (x) M -> M or M (x) A -> M
  std::optional<LinMap> coaction;
  Side coaction_side = Side::left;

  // a.m or m.a for vectors a in A, m in M
  Tensor act(const Tensor& a, const Tensor& m) const;
};

FiniteModule make_module(Side side, AlgebraRef algebra, LinMap action);
// the algebra acting on itself from `side`
FiniteModule regular_module(const AlgebraRef& a, Side side);
// the ground field, A acting through `character` (a functional A -> k)
FiniteModule trivial_module(const AlgebraRef& a, Side side, const LinMap& character);
FiniteModule direct_sum(const FiniteModule& m, const FiniteModule& n);
// unit and associativity of the action
CheckReport verify_module(const FiniteModule& m);

// Context for the four kinds of Doi-Hopf modules:
//   right_left:  right B-modules, left C-coaction;  B left comodule algebra, C right module coalgebra
//   left_right:  left A-modules, right C-coaction;  A right comodule algebra, C left module coalgebra
//   right_right: right A-modules, right C-coaction; A right comodule algebra, C right module coalgebra
//   left_left:   left B-modules, left C-coaction;   B left comodule algebra, C left module coalgebra
enum class DoiHopfVariant { right_left, left_right, right_right, left_left };
const char* to_string(DoiHopfVariant v);
DoiHopfVariant parse_doi_hopf_variant(const std::string& s);

struct DoiHopfContext {
  DoiHopfVariant variant = DoiHopfVariant::right_left;
  ComoduleAlgebra algebra;
  ModuleCoalgebra coalgebra;
};
// throws VariantMismatch when the sides do not fit the variant, MixedBase on different bases
DoiHopfContext make_doi_hopf_context(DoiHopfVariant v, ComoduleAlgebra a, ModuleCoalgebra c);

CheckReport verify_doi_hopf(const FiniteModule& m, const DoiHopfContext& ctx);

// C (x) N or N (x) C with the induced structure; N a plain module over the
// context's algebra on the variant's side
FiniteModule induce_doi_hopf(const FiniteModule& n, const DoiHopfContext& ctx);
// id_C (x) f or f (x) id_C for a module map f: N -> N'
LinMap induce_morphism(const LinMap& f, const FiniteModule& n, const DoiHopfContext& ctx);

// the same module read in another variant over the translated context
struct TranslatedModule {
  FiniteModule module;
  DoiHopfContext context;
};
TranslatedModule translate_variant(const FiniteModule& m, const DoiHopfContext& ctx, DoiHopfVariant to);

// Hom spaces, as bases of maps M -> N
std::vector<LinMap> module_homs(const FiniteModule& m, const FiniteModule& n);
// right B-linear and left C-colinear maps between right-left Doi-Hopf modules
std::vector<LinMap> doi_hopf_homs(const FiniteModule& m, const FiniteModule& n, const DoiHopfContext& ctx);

// right-left adjunctions for M Doi-Hopf and N a plain module:
// Hom_B(M, N) = Hom^C_B(M, C (x) N) via xi(s)(m) = m{-1} (x) s(m{0}), zeta(x) = (eps (x) id) x;
// Hom^C_B(C (x) N, M) = Hom_B(N, Hom^C_B(C (x) B, M)) via xi'(s)(n)(c (x) b) = s(c (x) n.b),
// zeta'(x)(c (x) n) = x(n)(c (x) 1)
struct Adjunction {
  std::function<LinMap(const LinMap&)> xi, zeta;
  // Hom^C_B(C (x) B, M) as a subspace of Hom(C (x) B, M) with a basis of maps
  std::vector<LinMap> hom_cb;
  FiniteModule hom_cb_module;  // right B-module in the coordinates of hom_cb
  std::function<LinMap(const LinMap&)> xi_prime, zeta_prime;
};
Adjunction adjunction_maps(const FiniteModule& m, const FiniteModule& n, const DoiHopfContext& ctx);
// both round trips on whole hom spaces, landing in the right spaces, and
// naturality of xi in N along `theta` (a module map N -> n2) when given
CheckReport verify_adjunction(const FiniteModule& m, const FiniteModule& n, const DoiHopfContext& ctx,
                              const std::optional<std::pair<LinMap, FiniteModule>>& theta = std::nullopt);

// right-left Doi-Hopf module as a right module over C* >< B:
// m.(c* >< b) = c*(m{-1}) m{0}.b
struct SmashModule {
  ProductAlgebra algebra;
  FiniteModule module;
};
SmashModule to_smash_module(const FiniteModule& m, const DoiHopfContext& ctx);
// smash module of C* >< B for the given context, acting on itself
SmashModule free_smash_module(const DoiHopfContext& ctx);
// the coaction m -> sum_i e_i (x) m.(e^i >< 1); throws NotRational when (rat) fails
LinMap rational_check(const SmashModule& m, const DoiHopfContext& ctx);
// basis of mu^{-1}(Im nu)
std::vector<Vec> compute_rat(const SmashModule& m, const DoiHopfContext& ctx);
// closure of a subspace under the action
bool is_submodule(const FiniteModule& m, const std::vector<Vec>& basis);
// dimension of the cyclic submodule generated by v
int cyclic_dimension(const FiniteModule& m, const Tensor& v);

// Yetter-Drinfeld modules: left A-modules with a right C-coaction, A a
// bicomodule algebra and C a bimodule coalgebra
CheckReport verify_yd(const FiniteModule& m, const BicomoduleAlgebra& a, const ModuleCoalgebra& c);
// left-right Doi-Hopf context over H^op (x) H with the second coaction on A
DoiHopfContext yd_context(const BicomoduleAlgebra& a, const ModuleCoalgebra& c);
FiniteModule yd_to_doihopf(const FiniteModule& m, const BicomoduleAlgebra& a, const ModuleCoalgebra& c);
FiniteModule doihopf_to_yd(const FiniteModule& m, const BicomoduleAlgebra& a, const ModuleCoalgebra& c);
// N (x) C for a left A-module N
FiniteModule induce_yd(const FiniteModule& n, const BicomoduleAlgebra& a, const ModuleCoalgebra& c);

// left-right modules: rho' = V.rho, V in A (x) H twisting ctx's algebra into `to`
FiniteModule transport_twist(const FiniteModule& m, const Tensor& v, const DoiHopfContext& ctx);

}  // namespace qhopf
