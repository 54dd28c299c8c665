// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>
#include <filesystem>
#include <random>

#include "qhopf/error.hpp"
#include "qhopf/fixtures.hpp"
#include "qhopf/io.hpp"

using namespace qhopf;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("qhopf_io_" + name + "_" + std::to_string(std::random_device{}()));
  fs::create_directories(d);
  return d;
}

// writes h2 and the named fixture next to each other; returns the fixture path
fs::path write_fixture(const fs::path& dir, const std::string& name, std::uint64_t p) {
  if (name == "kz2" || name == "h2") {
    fs::path f = dir / (name + ".qha.json");
    io::write_file(f, io::emit(io::fixture(name, p)));
    return f;
  }
  fs::path base = write_fixture(dir, "h2", p);
  std::string bytes = io::read_file(base);
  fs::path f = dir / (name + ".qha.json");
  io::write_file(f, io::emit(io::fixture(name, p, std::pair{io::load(base), io::companion(dir, base, bytes)})));
  return f;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("emit then parse gives the same h2") {
  io::Document d = io::fixture("h2", 0);
  io::Document back = io::parse(io::emit(d), ".");
  auto h = std::get<QuasiHopfRef>(d.value), g = std::get<QuasiHopfRef>(back.value);
  CHECK(*h->algebra == *g->algebra);
  CHECK(h->comult == g->comult);
  CHECK(h->counit == g->counit);
  CHECK(h->phi == g->phi);
  CHECK(h->phi_inv == g->phi_inv);
  CHECK(h->antipode == g->antipode);
  CHECK(h->alpha == g->alpha);
  CHECK(h->beta == g->beta);
  CHECK(back.basis == d.basis);
}

TEST_CASE("canonical serialization round-trips byte for byte") {
  fs::path dir = scratch_dir("roundtrip");
  for (std::uint64_t p : {0ULL, 10007ULL})
    for (const auto& name : io::fixture_names()) {
      fs::path f = write_fixture(dir, name, p);
      std::string bytes = io::read_file(f);
      io::Document d = io::load(f);
      CHECK(d.field == p);
      CHECK(io::emit(d) == bytes);
      // parse o emit = id on the value side as well
      CHECK(io::emit(io::parse(io::emit(d), dir)) == bytes);
    }
  fs::remove_all(dir);
}

TEST_CASE("prime field files carry the modulus") {
  std::string s = io::emit(io::fixture("h2", 10007));
  CHECK(s.find("\"fp\": 10007") != std::string::npos);
  // -2 p(x)p(x)p has coefficient -1/4 at g(x)g(x)g, i.e. 7505 mod 10007
  CHECK(s.find("\"7505\"") != std::string::npos);
  CHECK(kind_of([] { io::fixture("h2", 2); }) == ErrorKind::BadField);
}

TEST_CASE("malformed files are parse errors") {
  std::string good = io::emit(io::fixture("kz2", 0));
  auto bad = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    auto at = s.find(from);
    REQUIRE(at != std::string::npos);
    s.replace(at, from.size(), to);
    return kind_of([&] { io::parse(s, "."); });
  };
  CHECK(bad("[0, \"1\"]", "[0, \"1/0\"]") == ErrorKind::ParseError);
  CHECK(bad("[0, \"1\"]", "[7, \"1\"]") == ErrorKind::ParseError);
  CHECK(bad("[0, \"1\"]", "[0, \"x\"]") == ErrorKind::ParseError);
  CHECK(bad("[0, \"1\"]", "[0, 1.5]") == ErrorKind::ParseError);
  CHECK(bad("\"H\": 2", "\"H\": 0") == ErrorKind::ParseError);
  CHECK(bad("\"qha/1\"", "\"qha/9\"") == ErrorKind::ParseError);
  CHECK(bad("\"quasi-hopf\"", "\"gizmo\"") == ErrorKind::ParseError);
  CHECK(bad("[\"1\", \"g\"]", "[\"1\"]") == ErrorKind::ParseError);
  CHECK(bad("\"field\": \"q\"", "\"field\": {\"fp\": 10}") == ErrorKind::ParseError);
  CHECK(bad("{", "[") == ErrorKind::ParseError);
  // duplicate entry
  CHECK(bad("[0, 0, \"1\"],", "[0, 0, \"1\"], [0, 0, \"1\"],") == ErrorKind::ParseError);
  CHECK(kind_of([] { io::parse("{\"format\": \"qha/1\"", "."); }) == ErrorKind::ParseError);
}

TEST_CASE("parse errors name the offending field") {
  std::string s = io::emit(io::fixture("kz2", 0));
  s.replace(s.find("[1, 1, \"1\"]"), 11, "[1, 1, \"1/0\"]");
  try {
    io::parse(s, ".");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("tables.antipode[1]") != std::string::npos);
  }
}

TEST_CASE("companion references are hash checked") {
  fs::path dir = scratch_dir("hash");
  fs::path c2 = write_fixture(dir, "c2", 0);
  CHECK_NOTHROW(io::load(c2));
  // stale base: rewrite h2 with a different basis name
  std::string h2 = io::read_file(dir / "h2.qha.json");
  std::string changed = h2;
  changed.replace(changed.find("\"g\""), 3, "\"t\"");
  io::write_file(dir / "h2.qha.json", changed);
  CHECK(kind_of([&] { io::load(c2); }) == ErrorKind::HashMismatch);
  fs::remove(dir / "h2.qha.json");
  CHECK(kind_of([&] { io::load(c2); }) == ErrorKind::HashMismatch);
  io::write_file(dir / "h2.qha.json", h2);
  CHECK_NOTHROW(io::load(c2));
  fs::remove_all(dir);
}

TEST_CASE("loaded fixtures keep their structure") {
  fs::path dir = scratch_dir("values");
  io::Document hh = io::load(write_fixture(dir, "hh-bicomodule", 0));
  BicomoduleAlgebra a = std::get<BicomoduleAlgebra>(hh.value), ref = fixtures::hh();
  CHECK(a.lambda == ref.lambda);
  CHECK(a.rho == ref.rho);
  CHECK(a.phi_lr == ref.phi_lr);
  CHECK(a.phi_lambda_inv == ref.phi_lambda_inv);
  CHECK(verify_bicomodule_algebra(a).ok());
  io::Document c = io::load(write_fixture(dir, "h2-bimodule-coalgebra", 10007));
  CHECK(verify_module_coalgebra(std::get<ModuleCoalgebra>(c.value)).ok());
  CHECK(c.companions.at("base")->field == 10007);
  fs::remove_all(dir);
}

TEST_CASE("module files round-trip with their coaction") {
  fs::path dir = scratch_dir("module");
  fs::path a = write_fixture(dir, "hh-bicomodule", 0), c = write_fixture(dir, "h2-bimodule-coalgebra", 0);
  io::Document ad = io::load(a), cd = io::load(c);
  BicomoduleAlgebra A = std::get<BicomoduleAlgebra>(ad.value);
  ModuleCoalgebra C = std::get<ModuleCoalgebra>(cd.value);
  io::Document m;
  io::ModuleData data;
  data.structure = io::ModuleStructure::yd;
  data.module = induce_yd(regular_module(A.algebra, Side::left), A, C);
  m.value = data;
  m.basis = io::default_basis(data.module.dim, "m");
  m.refs["algebra"] = io::companion(dir, a, io::read_file(a));
  m.refs["coalgebra"] = io::companion(dir, c, io::read_file(c));
  std::string bytes = io::emit(m);
  io::Document back = io::parse(bytes, dir);
  const auto& bm = std::get<io::ModuleData>(back.value);
  CHECK(bm.structure == io::ModuleStructure::yd);
  CHECK(bm.module.action == data.module.action);
  CHECK(*bm.module.coaction == *data.module.coaction);
  CHECK(bm.module.coaction_side == Side::right);
  CHECK(io::emit(back) == bytes);
  CHECK(verify_yd(bm.module, A, C).ok());
  fs::remove_all(dir);
}

TEST_CASE("reports do not depend on the number of workers") {
  QuasiHopfAlgebra h = *fixtures::h2();
  h.phi.add({1, 1, 0}, Scalar(1));
  std::string one, four;
  set_jobs(1);
  one = io::report_json(verify_quasi_hopf(h), "check h2");
  set_jobs(4);
  four = io::report_json(verify_quasi_hopf(h), "check h2");
  set_jobs(1);
  CHECK(one == four);
  CHECK(one.find("\"exit\": 1") != std::string::npos);
  CHECK(one.find("\"witness\"") != std::string::npos);
}
