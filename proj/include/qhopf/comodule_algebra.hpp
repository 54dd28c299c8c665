// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>

#include "qhopf/quasi_hopf.hpp"

namespace qhopf {

enum class Side { left, right };

// Right: coaction A -> A (x) H, reassociator in A (x) H (x) H.
// Left:  coaction B -> H (x) B, reassociator in H (x) H (x) B.
struct ComoduleAlgebra {
  Side side = Side::right;
  BialgebraRef base;
  AlgebraRef algebra;
  LinMap coaction;
  Tensor phi, phi_inv;

  Legs coaction_legs() const;
  Legs phi_legs() const;
};

ComoduleAlgebra make_comodule_algebra(Side side, BialgebraRef base, AlgebraRef algebra, LinMap coaction, Tensor phi);
// H over itself with coaction and reassociator taken from H
ComoduleAlgebra regular_comodule_algebra(const BialgebraRef& h, Side side);
CheckReport verify_comodule_algebra(const ComoduleAlgebra& x);

bool same_base(const QuasiBialgebra& a, const QuasiBialgebra& b);
void require_same_base(const QuasiBialgebra& a, const QuasiBialgebra& b);
BialgebraRef base_variant(const BialgebraRef& b, Variant v);

// V in A (x) H (right) or U in H (x) B (left); throws WitnessNotNormalized / NotInvertible
ComoduleAlgebra twist_comodule_algebra(const ComoduleAlgebra& x, const Tensor& v);
ComoduleAlgebra gauge_twist_comodule_algebra(const ComoduleAlgebra& x, const GaugeTransformation& g);

enum class ComoduleVariant { cop, opcop, op, to_right_op };
const char* to_string(ComoduleVariant v);
ComoduleVariant parse_comodule_variant(const std::string& s);
ComoduleAlgebra comodule_variant(const ComoduleAlgebra& x, ComoduleVariant v);

// left: p = p~_lambda, q = q~_lambda in H (x) B; right: p~_rho, q~_rho in A (x) H
struct TildeElements {
  Tensor p, q;
};
TildeElements tilde_elements(const ComoduleAlgebra& x);
CheckReport verify_tilde_identities(const ComoduleAlgebra& x);

struct BicomoduleAlgebra {
  BialgebraRef base;
  AlgebraRef algebra;
  LinMap lambda, rho;
  Tensor phi_lambda, phi_lambda_inv;  // H (x) H (x) A
  Tensor phi_rho, phi_rho_inv;        // A (x) H (x) H
  Tensor phi_lr, phi_lr_inv;          // H (x) A (x) H

  ComoduleAlgebra left() const;
  ComoduleAlgebra right() const;
};

BicomoduleAlgebra make_bicomodule_algebra(const ComoduleAlgebra& left, const ComoduleAlgebra& right, Tensor phi_lr);
BicomoduleAlgebra regular_bicomodule_algebra(const BialgebraRef& h);
CheckReport verify_bicomodule_algebra(const BicomoduleAlgebra& a);
BicomoduleAlgebra bicomodule_variant(const BicomoduleAlgebra& a, Variant v);

struct CoactionPair {
  QuasiHopfRef base;  // H (x) H^op for the left pair, H^op (x) H for the right pair
  ComoduleAlgebra first, second;
  std::optional<Tensor> witness;  // twist from first to second, when found
};
CoactionPair bicomodule_to_left_HHop(const BicomoduleAlgebra& a);
CoactionPair bicomodule_to_right_HopH(const BicomoduleAlgebra& a, bool search_witness = true);

// checks that twisting `from` by v gives `to`
CheckReport verify_twist_witness(const ComoduleAlgebra& from, const ComoduleAlgebra& to, const Tensor& v);
// solves the intertwining and normalization equations, then the reassociator
// equation by successive linear elimination with a bounded search over the
// remaining free parameters
std::optional<Tensor> find_twist_witness(const ComoduleAlgebra& from, const ComoduleAlgebra& to);

// B (x) H as a coalgebra in the category of B-bimodules with a compatible
// right H-action. Elements of (B (x) H) (x)_B (B (x) H) are stored in the
// normal form (1 (x) h) (x)_B (b (x) h'), indexed (h, b, h').
struct InternalCoalgebra {
  BialgebraRef base;
  AlgebraRef algebra;
  LinMap left_action;  // B (x) (B (x) H) -> B (x) H
  LinMap comult;       // (B, H) -> (H, B, H)
  LinMap counit;       // (B, H) -> B
};
// a right comodule algebra is first turned into a left H^cop-comodule algebra
InternalCoalgebra internal_coalgebra(const ComoduleAlgebra& x);
CheckReport verify_internal_coalgebra(const InternalCoalgebra& c);
// internal coalgebra checks plus recovery of the original coaction data
CheckReport verify_correspondence(const ComoduleAlgebra& x);
ComoduleAlgebra recover_comodule_algebra(const InternalCoalgebra& c);

ComoduleAlgebra to_field(const ComoduleAlgebra& x, std::uint64_t p);
BicomoduleAlgebra to_field(const BicomoduleAlgebra& a, std::uint64_t p);
BialgebraRef to_field(const BialgebraRef& b, std::uint64_t p);

}  // namespace qhopf
