// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "qhopf/comodule_algebra.hpp"
#include "qhopf/quasi_hopf.hpp"

namespace qhopf {

enum class ModuleSide { left, right, bi };
const char* to_string(ModuleSide s);

// Coalgebra in the category of left, right or bi-modules over H.
// left_action: H (x) C -> C, right_action: C (x) H -> C.
struct ModuleCoalgebra {
  ModuleSide side = ModuleSide::right;
  BialgebraRef base;
  int dim = 0;
  LinMap comult;  // C -> C (x) C
  LinMap counit;  // C -> k
  std::optional<LinMap> left_action, right_action;

  // t in H^{(x)n} acting legwise on y in C^{(x)n}
  Tensor act_left(const Tensor& t, const Tensor& y) const;
  Tensor act_right(const Tensor& y, const Tensor& t) const;
};

// Algebra in the category of left, right or bi-modules over H. The carrier is
// not assumed associative.
struct ModuleAlgebra {
  ModuleSide side = ModuleSide::left;
  BialgebraRef base;
  AlgebraRef algebra;
  std::optional<LinMap> left_action, right_action;

  Tensor act_left(const Tensor& t, const Tensor& y) const;
  Tensor act_right(const Tensor& y, const Tensor& t) const;
};

// checks shapes and the presence of the actions required by `side`
ModuleCoalgebra make_module_coalgebra(ModuleSide side, BialgebraRef base, LinMap comult, LinMap counit,
                                      std::optional<LinMap> left_action, std::optional<LinMap> right_action);
ModuleAlgebra make_module_algebra(ModuleSide side, BialgebraRef base, AlgebraRef algebra,
                                  std::optional<LinMap> left_action, std::optional<LinMap> right_action);

CheckReport verify_module_coalgebra(const ModuleCoalgebra& c);
CheckReport verify_module_algebra(const ModuleAlgebra& a);

// C* with the convolution product and the transposed actions: a right module
// coalgebra gives a left module algebra, a left one a right module algebra, a
// bimodule coalgebra a bimodule algebra
ModuleAlgebra dualize(const ModuleCoalgebra& c);
ModuleCoalgebra dualize(const ModuleAlgebra& a);

// left H^op (x) H-module coalgebra with (h (x) h').c = h'.c.h
ModuleCoalgebra bimodule_to_HopH_module_coalgebra(const ModuleCoalgebra& c);

// comultiplication F.D, D.F^{-1} or F.D.F^{-1} according to the side; the base
// becomes H_F
ModuleCoalgebra gauge_twist_module_coalgebra(const ModuleCoalgebra& c, const GaugeTransformation& g);

// op exchanges the actions over H^op, cop flips the comultiplication over H^cop
ModuleCoalgebra module_coalgebra_variant(const ModuleCoalgebra& c, Variant v);
// op exchanges the actions over H^op, cop takes the opposite product over H^cop
ModuleAlgebra module_algebra_variant(const ModuleAlgebra& a, Variant v);
// a left H-module coalgebra read as a right H^op-module coalgebra
ModuleCoalgebra as_right_op(const ModuleCoalgebra& c);

ModuleCoalgebra to_field(const ModuleCoalgebra& c, std::uint64_t p);
ModuleAlgebra to_field(const ModuleAlgebra& a, std::uint64_t p);

namespace fixtures {
// two grouplike elements, H acting through the counit
ModuleCoalgebra c2(const BialgebraRef& h, ModuleSide side);
// H with its own comultiplication and the regular actions on the given side
ModuleCoalgebra regular_module_coalgebra(const BialgebraRef& h, ModuleSide side);
}  // namespace fixtures

}  // namespace qhopf
