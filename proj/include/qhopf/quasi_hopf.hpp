// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>

#include "qhopf/algebra.hpp"
#include "qhopf/report.hpp"
#include "qhopf/sweedler.hpp"

namespace qhopf {

struct QuasiBialgebra {
  AlgebraRef algebra;
  LinMap comult;  // H -> H (x) H
  LinMap counit;  // H -> k
  Tensor phi;     // reassociator in H^{(x)3}
  Tensor phi_inv;

  virtual ~QuasiBialgebra() = default;
  int dim() const { return algebra->dim(); }
  Legs legs(int n) const { return Legs(static_cast<std::size_t>(n), algebra); }
  Tensor one() const { return algebra->unit(); }
  Scalar eps(const Tensor& h) const;
};

struct QuasiHopfAlgebra : QuasiBialgebra {
  LinMap antipode;
  std::optional<LinMap> antipode_inv;
  Tensor alpha, beta;

  const LinMap& S() const { return antipode; }
  // throws AntipodeNotInvertible
  const LinMap& S_inv() const;
};

using BialgebraRef = std::shared_ptr<const QuasiBialgebra>;
using QuasiHopfRef = std::shared_ptr<const QuasiHopfAlgebra>;

// computes the inverses; throws NotInvertible when phi is not invertible
QuasiBialgebra make_quasi_bialgebra(AlgebraRef h, LinMap comult, LinMap counit, Tensor phi);
QuasiHopfAlgebra make_quasi_hopf(const QuasiBialgebra& b, LinMap s, Tensor alpha, Tensor beta);
// ordinary Hopf algebra seen as a quasi-Hopf algebra with trivial reassociator
QuasiHopfAlgebra from_hopf(AlgebraRef h, LinMap comult, LinMap counit, LinMap s);

// dynamic cast helper; throws AntipodeRequired
const QuasiHopfAlgebra& require_antipode(const QuasiBialgebra& b);

CheckReport verify_algebra(const FinAlgebra& a, const std::string& prefix = "alg.");
CheckReport verify_quasi_bialgebra(const QuasiBialgebra& b);
CheckReport verify_quasi_hopf(const QuasiHopfAlgebra& h);

struct GaugeTransformation {
  Tensor F;
  Tensor F_inv;
};
// fills in the inverse; throws NotInvertible / GaugeNotNormalized
GaugeTransformation make_gauge(const QuasiBialgebra& b, const Tensor& F);
QuasiBialgebra gauge_twist(const QuasiBialgebra& b, const GaugeTransformation& g);
QuasiHopfAlgebra gauge_twist(const QuasiHopfAlgebra& h, const GaugeTransformation& g);

enum class Variant { op, cop, opcop };
const char* to_string(Variant v);
Variant parse_variant(const std::string& s);
QuasiBialgebra variant(const QuasiBialgebra& b, Variant v);
QuasiHopfAlgebra variant(const QuasiHopfAlgebra& h, Variant v);

// K (x) L with componentwise structure
QuasiHopfAlgebra tensor_product(const QuasiHopfAlgebra& k, const QuasiHopfAlgebra& l);

struct DrinfeldTwist {
  Tensor f;
  Tensor f_inv;
};
DrinfeldTwist drinfeld_twist(const QuasiHopfAlgebra& h);
// the anti-coalgebra property of S, the twisted reassociator, and the
// relation between g = f^{-1}, alpha and beta
CheckReport verify_drinfeld_twist(const QuasiHopfAlgebra& h, const DrinfeldTwist& t);

// looks for alpha, beta making (H, S) quasi-Hopf when S is given; used for
// normalizing hand-written fixtures
std::optional<std::pair<Tensor, Tensor>> find_alpha_beta(const QuasiBialgebra& b, const LinMap& s);

QuasiHopfAlgebra to_field(const QuasiHopfAlgebra& h, std::uint64_t p);

// small helpers shared by the other modules
Tensor product(const Legs& legs, std::initializer_list<Tensor> factors);
Tensor stack(std::initializer_list<Tensor> parts);
Sweedler sw(const Tensor& t, const AlgebraRef& a, const std::vector<std::string>& names);

}  // namespace qhopf
