// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "qhopf/comodule_algebra.hpp"
#include "qhopf/quasi_hopf.hpp"

namespace qhopf::fixtures {

// group algebra of Z2 with trivial reassociator
QuasiHopfRef kz2(std::uint64_t p = 0);
// group algebra of Z2 with Phi = 1 - 2 p(x)p(x)p, p = (1 - g)/2; needs char != 2
QuasiHopfRef h2(std::uint64_t p = 0);
// Sweedler's four-dimensional Hopf algebra, basis 1, g, x, gx
QuasiHopfRef sweedler(std::uint64_t p = 0);
// Sweedler's algebra gauge-twisted into a noncommutative quasi-Hopf algebra
// with nontrivial reassociator
QuasiHopfRef twisted_sweedler(std::uint64_t p = 0);
// the gauge used by twisted_sweedler
Tensor sweedler_gauge(std::uint64_t p = 0);

// H as a bicomodule algebra over itself
BicomoduleAlgebra hh(std::uint64_t p = 0);

}  // namespace qhopf::fixtures
