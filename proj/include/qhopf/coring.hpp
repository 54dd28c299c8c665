// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qhopf/doi_hopf.hpp"

namespace qhopf {

// Subspace of relations in an ambient space, kept in reduced echelon form;
// vectors are compared modulo the relations.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(int ambient, const std::vector<Vec>& relations);
  int ambient() const { return ambient_; }
  int dim() const { return ambient_ - static_cast<int>(pivots_.size()); }
  // canonical representative: pivot coordinates eliminated
  Vec reduce(Vec v) const;
  bool is_zero(const Vec& v) const;

 private:
  int ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

// R-coring on a carrier that is free as a left R-module (carrier R (x) W) or as
// a right R-module (carrier W (x) R). Tensor products over R are represented
// through the free side: X (x)_R X = X (x) W or W (x) X, and X (x)_R X (x)_R X =
// X (x) W (x) W or W (x) W (x) X.
enum class CoringKind { bc, ca, yd };
const char* to_string(CoringKind k);

struct Coring {
  CoringKind kind = CoringKind::bc;
  AlgebraRef ring;
  int fiber = 0;          // dim W
  bool free_left = true;  // carrier R (x) W when true, W (x) R otherwise
  LinMap left_action;     // R (x) X -> X
  LinMap right_action;    // X (x) R -> X
  LinMap comult;          // X -> X (x) W or W (x) X
  LinMap counit;          // X -> R

  int dim() const { return ring->dim() * fiber; }
  // x (x)_R y in normal form
  Tensor tensor2(const Tensor& x, const Tensor& y) const;
};

// B (x) C for a left comodule algebra B and a right module coalgebra C
Coring build_coring_bc(const ComoduleAlgebra& b, const ModuleCoalgebra& c);
// C (x) A for a right comodule algebra A and a left module coalgebra C
Coring build_coring_ca(const ComoduleAlgebra& a, const ModuleCoalgebra& c);
// C (x) A for a bicomodule algebra A and a bimodule coalgebra C
Coring build_coring_yd(const BicomoduleAlgebra& a, const ModuleCoalgebra& c);

// bimodule laws, bilinearity of comult and counit, counit and coassociativity,
// and that the normal form agrees with the quotient by x.r (x) y - x (x) r.y
CheckReport verify_coring(const Coring& x);

// right comodules over a coring that is free on the left: M -> M (x)_R X = M (x) W
struct CoringComodule {
  FiniteModule module;  // right R-module
  LinMap coaction;      // M -> M (x) W
};
CheckReport verify_coring_comodule(const CoringComodule& m, const Coring& x);
// rho(m) = m{0} (x) (1 (x) m{-1}) for a right-left Doi-Hopf module
CoringComodule doihopf_to_coring_comodule(const FiniteModule& m, const DoiHopfContext& ctx);
FiniteModule coring_comodule_to_doihopf(const CoringComodule& m, const DoiHopfContext& ctx);

}  // namespace qhopf
