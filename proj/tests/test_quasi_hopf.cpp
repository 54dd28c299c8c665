// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include "qhopf/error.hpp"
#include "qhopf/fixtures.hpp"

#include <random>

using namespace qhopf;

static std::string failures(const CheckReport& r) {
  std::string s;
  for (const auto& rec : r.records())
    if (!rec.pass) s += rec.id + " ";
  return s;
}

TEST_CASE("fixtures pass the quasi-Hopf axioms") {
  for (std::uint64_t p : {0ull, 10007ull}) {
    INFO("p = " << p);
    auto k = fixtures::kz2(p);
    auto h = fixtures::h2(p);
    auto s = fixtures::sweedler(p);
    auto t = fixtures::twisted_sweedler(p);
    CHECK(failures(verify_quasi_hopf(*k)) == "");
    CHECK(failures(verify_quasi_hopf(*h)) == "");
    CHECK(failures(verify_quasi_hopf(*s)) == "");
    CHECK(failures(verify_quasi_hopf(*t)) == "");
    CHECK_FALSE(t->phi == unit_of(t->legs(3)));
  }
}

TEST_CASE("H2 reassociator and its inverse") {
  auto h = fixtures::h2();
  // Phi = 1 - 2 p(x)p(x)p with p = (1 - g)/2; on the group basis every entry is +-1/4 except (0,0,0)
  CHECK(h->phi.get({0, 0, 0}) == Scalar::ratio(3, 4));
  CHECK(h->phi.get({1, 1, 1}) == Scalar::ratio(1, 4));
  CHECK(h->phi.get({0, 1, 1}) == Scalar::ratio(-1, 4));
  CHECK(h->phi.get({1, 0, 0}) == Scalar::ratio(1, 4));
  // Phi is an involution
  CHECK(h->phi_inv == h->phi);
  CHECK(multiply(h->legs(3), h->phi, h->phi_inv) == unit_of(h->legs(3)));
  Tensor rev = h->phi.permuted({2, 1, 0});
  h->phi.for_each([&](const Index& i, const Scalar& v) { CHECK(rev.get({i[2], i[1], i[0]}) == v); });
}

TEST_CASE("antipode triple of H2 found by search") {
  auto h = fixtures::h2();
  // enumerate alpha, beta over {0, +-1}^2 and keep those satisfying the antipode axioms with S = id
  std::vector<std::pair<Tensor, Tensor>> found;
  for (int a0 = -1; a0 <= 1; ++a0)
    for (int a1 = -1; a1 <= 1; ++a1)
      for (int b0 = -1; b0 <= 1; ++b0)
        for (int b1 = -1; b1 <= 1; ++b1) {
          Tensor al = Tensor::vec({Scalar(a0), Scalar(a1)}), be = Tensor::vec({Scalar(b0), Scalar(b1)});
          QuasiHopfAlgebra c = make_quasi_hopf(*h, LinMap::identity({2}), al, be);
          if (verify_quasi_hopf(c).ok()) found.emplace_back(al, be);
        }
  // (alpha, beta) = (g, 1), (1, g), (-g, -1), (-1, -g)
  CHECK(found.size() == 4);
  bool has_fixture = false;
  for (auto& [a, b] : found) has_fixture |= (a == h->alpha && b == h->beta);
  CHECK(has_fixture);
  auto ab = find_alpha_beta(*h, LinMap::identity({2}));
  REQUIRE(ab);
  CHECK(verify_quasi_hopf(make_quasi_hopf(*h, LinMap::identity({2}), ab->first, ab->second)).ok());
  auto k = fixtures::kz2();
  auto abk = find_alpha_beta(*k, LinMap::identity({2}));
  REQUIRE(abk);
}

TEST_CASE("verifier failures are located") {
  auto k = fixtures::kz2();
  QuasiHopfAlgebra bad = *k;
  bad.comult.column(1) = Tensor::basis({2, 2}, {1, 0});
  CheckReport r = verify_quasi_hopf(bad);
  const CheckRecord* q2 = r.find("q2");
  REQUIRE(q2);
  CHECK_FALSE(q2->pass);
  CHECK(q2->witness == Index{1});
  auto h = fixtures::h2();
  QuasiHopfAlgebra zero = *h;
  zero.alpha = Tensor({2});
  CheckReport z = verify_quasi_hopf(zero);
  CHECK_FALSE(z.find("q6")->pass);
  CHECK(z.find("q5")->pass);
}

TEST_CASE("mutations are detected") {
  std::mt19937 rng(7);
  for (auto h : {fixtures::kz2(), fixtures::h2(), fixtures::twisted_sweedler()}) {
    int n = h->dim();
    for (int trial = 0; trial < 50; ++trial) {
      QuasiHopfAlgebra m = *h;
      int which = static_cast<int>(rng() % 5);
      Scalar bump(static_cast<long>(rng() % 3) + 1);
      if (which == 0) {
        Tensor mult = m.algebra->structure();
        Index i{static_cast<int>(rng() % n), static_cast<int>(rng() % n), static_cast<int>(rng() % n)};
        mult.add(i, bump);
        m.algebra = FinAlgebra::make(mult, m.algebra->unit());
      } else if (which == 1) {
        int c = static_cast<int>(rng() % n);
        m.comult.column(c).add({static_cast<int>(rng() % n), static_cast<int>(rng() % n)}, bump);
      } else if (which == 2) {
        m.phi.add({static_cast<int>(rng() % n), static_cast<int>(rng() % n), static_cast<int>(rng() % n)}, bump);
      } else if (which == 3) {
        m.alpha.add({static_cast<int>(rng() % n)}, bump);
      } else {
        int c = static_cast<int>(rng() % n);
        m.antipode.column(c).add({static_cast<int>(rng() % n)}, bump);
        if (auto inv = inverse(m.antipode.matrix())) m.antipode_inv = LinMap::from_matrix({n}, {n}, *inv);
        else m.antipode_inv.reset();
      }
      CHECK_FALSE(verify_quasi_hopf(m).ok());
    }
  }
}

TEST_CASE("gauge twisting") {
  auto h = fixtures::h2();
  Legs l = h->legs(2);
  // F = 1 (x) 1 + c p (x) p with p = (1 - g)/2 is normalized and invertible for c != -1
  Tensor proj = Tensor::vec({Scalar::ratio(1, 2), Scalar::ratio(-1, 2)});
  auto gauge = [&](long c) {
    Tensor f = unit_of(l);
    Tensor pp = proj.outer(proj);
    pp *= Scalar(c);
    f += pp;
    return make_gauge(*h, f);
  };
  GaugeTransformation g1 = gauge(1), g2 = gauge(2);
  QuasiHopfAlgebra t1 = gauge_twist(*h, g1);
  CHECK(verify_quasi_hopf(t1).ok());
  QuasiHopfAlgebra t12 = gauge_twist(t1, g2);
  GaugeTransformation g = make_gauge(*h, multiply(l, g2.F, g1.F));
  QuasiHopfAlgebra t = gauge_twist(*h, g);
  CHECK(t12.phi == t.phi);
  CHECK(t12.alpha == t.alpha);
  CHECK(t12.beta == t.beta);
  CHECK(verify_quasi_hopf(t).ok());
  Tensor bad = unit_of(l);
  bad.add({1, 1}, Scalar(1));
  CHECK_THROWS_AS(make_gauge(*h, bad), Error);
  auto s = fixtures::sweedler();
  auto ts = fixtures::twisted_sweedler();
  CHECK(verify_quasi_hopf(gauge_twist(*ts, make_gauge(*ts, multiply(ts->legs(2), fixtures::sweedler_gauge(), unit_of(ts->legs(2)))))).ok());
  auto k = fixtures::kz2();
  CHECK(verify_quasi_hopf(gauge_twist(*k, make_gauge(*k, multiply(k->legs(2), unit_of(k->legs(2)), unit_of(k->legs(2)))))).ok());
  (void)s;
}

TEST_CASE("op and cop variants") {
  for (auto h : {fixtures::h2(), fixtures::twisted_sweedler()}) {
    for (Variant v : {Variant::op, Variant::cop, Variant::opcop}) {
      INFO(to_string(v));
      CHECK(failures(verify_quasi_hopf(variant(*h, v))) == "");
    }
    QuasiHopfAlgebra oc = variant(*h, Variant::opcop);
    CHECK(oc.alpha == h->beta);
    CHECK(oc.beta == h->alpha);
    CHECK(oc.phi == h->phi.permuted({2, 1, 0}));
  }
  CHECK(parse_variant("opcop") == Variant::opcop);
  CHECK_THROWS_AS(parse_variant("co"), Error);
}

TEST_CASE("tensor products") {
  auto k = fixtures::kz2();
  QuasiHopfAlgebra kk = tensor_product(*k, *k);
  CHECK(kk.dim() == 4);
  CHECK(kk.algebra->mul(kk.algebra->basis(2), kk.algebra->basis(1)) == kk.algebra->basis(3));
  auto h = fixtures::h2();
  QuasiHopfAlgebra hh = tensor_product(*h, variant(*h, Variant::op));
  CHECK(failures(verify_quasi_hopf(hh)) == "");
  auto t = fixtures::twisted_sweedler();
  CHECK(failures(verify_quasi_hopf(tensor_product(variant(*t, Variant::op), *t))) == "");
}

TEST_CASE("Drinfeld twist") {
  for (std::uint64_t p : {0ull, 10007ull}) {
    for (auto h : {fixtures::kz2(p), fixtures::h2(p), fixtures::twisted_sweedler(p)}) {
      DrinfeldTwist d = drinfeld_twist(*h);
      CHECK(failures(verify_drinfeld_twist(*h, d)) == "");
    }
  }
  auto k = fixtures::kz2();
  CHECK(drinfeld_twist(*k).f == unit_of(k->legs(2)));
}
