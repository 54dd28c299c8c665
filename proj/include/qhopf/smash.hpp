// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "qhopf/comodule_algebra.hpp"
#include "qhopf/module_coalgebra.hpp"

namespace qhopf {

// Algebra on a two-factor tensor product; basis (i, j) has index i * second_dim + j.
struct ProductAlgebra {
  std::string kind;
  AlgebraRef algebra;
  int first_dim = 0, second_dim = 0;
  // the factor on leg `sub_leg` embeds as `sub` (x) unit or unit (x) `sub`
  int sub_leg = 1;
  AlgebraRef sub;
  Tensor other_unit;

  Tensor element(const Tensor& x, const Tensor& y) const { return x.outer(y).reshaped({first_dim * second_dim}); }
};

// associativity and unit over all basis triples, plus the subalgebra embedding
CheckReport verify_product_algebra(const ProductAlgebra& p);
// multiplicativity on all basis pairs, unit, and rank
CheckReport verify_algebra_map(const LinMap& f, const ProductAlgebra& from, const ProductAlgebra& to);

// A left module algebra, B left comodule algebra; carrier A (x) B
ProductAlgebra generalized_smash(const ModuleAlgebra& a, const ComoduleAlgebra& b);
// A right comodule algebra, M right module algebra; carrier A (x) M
ProductAlgebra right_generalized_smash(const ComoduleAlgebra& a, const ModuleAlgebra& m);
// M left module algebra, A right comodule algebra; carrier M (x) A with
// (m, a)(m', a') = ((X2 a'<1>).m)(X3.m') (x) X1 a'<0> a
ProductAlgebra transposed_smash(const ModuleAlgebra& m, const ComoduleAlgebra& a);
// C right module coalgebra, B left comodule algebra; Hom(C, B) stored as C* (x) B
ProductAlgebra koppinen_smash(const ModuleCoalgebra& c, const ComoduleAlgebra& b);
// C* (x) B -> Hom(C, B), c* (x) b |-> (c |-> <c*, c> b), expanded in the dual basis
LinMap alpha_morphism(const ModuleCoalgebra& c, const ComoduleAlgebra& b);

// C* # H (generalized smash with H as a left comodule algebra over itself)
// against the transposed smash with H as a right comodule algebra
struct SmashIsomorphism {
  ProductAlgebra source, target;
  LinMap forward, backward;
};
SmashIsomorphism phi_isomorphism(const ModuleCoalgebra& c);
CheckReport verify_phi_isomorphism(const SmashIsomorphism& s, const QuasiHopfAlgebra& h);

enum class OmegaKind { l, r };
struct OmegaData {
  OmegaKind kind = OmegaKind::l;
  LinMap delta;             // A -> H (x) A (x) H
  Tensor psi, psi_inv;      // H (x) H (x) A (x) H (x) H
  Tensor omega_L, omega_R;  // H (x) H (x) A (x) H (x) H
};
OmegaData build_omega(const BicomoduleAlgebra& a, OmegaKind k);

enum class CrossedKind { left_l, left_r, right_l, right_r };
const char* to_string(CrossedKind k);
// M bimodule algebra; left kinds have carrier M (x) A, right kinds A (x) M
ProductAlgebra diagonal_crossed_product(const BicomoduleAlgebra& a, const ModuleAlgebra& m, CrossedKind k);

// builds the right generalized smash products of the two H^op (x) H coactions
// with C* and compares them with the right diagonal crossed products with C*;
// also checks that the reassociators of the coactions are the reshuffled Omega^{-1}
CheckReport compare_smash_with_crossed_products(const BicomoduleAlgebra& a, const ModuleCoalgebra& c);

}  // namespace qhopf
