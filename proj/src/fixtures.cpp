// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhopf/fixtures.hpp"

#include "qhopf/error.hpp"

namespace qhopf::fixtures {

namespace {

template <class T>
std::shared_ptr<const QuasiHopfAlgebra> finish(T h, std::uint64_t p) {
  if (p) return std::make_shared<QuasiHopfAlgebra>(to_field(h, p));
  return std::make_shared<QuasiHopfAlgebra>(std::move(h));
}

void check_field(std::uint64_t p) {
  if (p && !is_prime(p)) throw Error(ErrorKind::BadField, "modulus " + std::to_string(p) + " is not prime");
}

QuasiHopfAlgebra kz2_q() {
  auto a = FinAlgebra::cyclic_group(2);
  LinMap d = LinMap::from_function({2}, {2, 2}, [](const Index& i) { return Tensor::basis({2, 2}, {i[0], i[0]}); });
  LinMap e = LinMap::functional({Scalar(1), Scalar(1)});
  return from_hopf(a, d, e, LinMap::identity({2}));
}

QuasiHopfAlgebra sweedler_q() {
  // e0 = 1, e1 = g, e2 = x, e3 = gx
  Tensor m({4, 4, 4});
  auto set = [&](int i, int j, int k, long c) { m.add({i, j, k}, Scalar(c)); };
  for (int i = 0; i < 4; ++i) {
    set(0, i, i, 1);
    if (i) set(i, 0, i, 1);
  }
  set(1, 1, 0, 1);
  set(1, 2, 3, 1);
  set(1, 3, 2, 1);
  set(2, 1, 3, -1);
  set(3, 1, 2, -1);
  auto a = FinAlgebra::make(m, Tensor::basis({4}, {0}));
  LinMap d({4}, {4, 4});
  d.column(0) = Tensor::basis({4, 4}, {0, 0});
  d.column(1) = Tensor::basis({4, 4}, {1, 1});
  d.column(2) = Tensor::basis({4, 4}, {2, 0}) + Tensor::basis({4, 4}, {1, 2});
  d.column(3) = Tensor::basis({4, 4}, {3, 1}) + Tensor::basis({4, 4}, {0, 3});
  LinMap e = LinMap::functional({Scalar(1), Scalar(1), Scalar(0), Scalar(0)});
  LinMap s({4}, {4});
  s.column(0) = Tensor::basis({4}, {0});
  s.column(1) = Tensor::basis({4}, {1});
  s.column(2) = Tensor::basis({4}, {3}, Scalar(-1));
  s.column(3) = Tensor::basis({4}, {2});
  return from_hopf(a, d, e, s);
}

Tensor gauge_q() {
  // 1 (x) 1 + (1 - g) (x) (1 - g) + x (x) gx
  Tensor f = Tensor::basis({4, 4}, {0, 0});
  Tensor u({4});
  u.add({0}, Scalar(1));
  u.add({1}, Scalar(-1));
  f += u.outer(u);
  f += Tensor::basis({4, 4}, {2, 3});
  return f;
}

}  // namespace

QuasiHopfRef kz2(std::uint64_t p) {
  check_field(p);
  return finish(kz2_q(), p);
}

QuasiHopfRef h2(std::uint64_t p) {
  check_field(p);
  if (p == 2) throw Error(ErrorKind::BadField, "h2 needs characteristic different from 2");
  QuasiHopfAlgebra k = kz2_q();
  // p = (1 - g)/2
  Tensor proj({2});
  proj.add({0}, Scalar::ratio(1, 2));
  proj.add({1}, Scalar::ratio(-1, 2));
  Tensor phi = unit_of(k.legs(3));
  Tensor ppp = proj.outer(proj).outer(proj);
  ppp *= Scalar(-2);
  phi += ppp;
  QuasiBialgebra b = make_quasi_bialgebra(k.algebra, k.comult, k.counit, phi);
  QuasiHopfAlgebra h = make_quasi_hopf(b, LinMap::identity({2}), k.algebra->basis(1), k.algebra->unit());
  return finish(std::move(h), p);
}

QuasiHopfRef sweedler(std::uint64_t p) {
  check_field(p);
  return finish(sweedler_q(), p);
}

Tensor sweedler_gauge(std::uint64_t p) {
  check_field(p);
  Tensor f = gauge_q();
  return p ? f.to_field(p) : f;
}

QuasiHopfRef twisted_sweedler(std::uint64_t p) {
  check_field(p);
  QuasiHopfAlgebra s = sweedler_q();
  QuasiHopfAlgebra t = gauge_twist(s, make_gauge(s, gauge_q()));
  return finish(std::move(t), p);
}

BicomoduleAlgebra hh(std::uint64_t p) { return regular_bicomodule_algebra(h2(p)); }

}  // namespace qhopf::fixtures
