// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qhopf/coring.hpp"
#include "qhopf/error.hpp"
#include "qhopf/io.hpp"
#include "qhopf/smash.hpp"

using namespace qhopf;
namespace fs = std::filesystem;
using io::Document;

namespace {

struct Globals {
  std::string report;
  std::string field;
  int jobs = 1;
};

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorKind::UsageError, what); }

std::uint64_t parse_field_flag(const std::string& f) {
  if (f.empty() || f == "q") return 0;
  if (f.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      p = std::stoull(f.substr(3));
    } catch (...) {
      usage("bad field '" + f + "'");
    }
    if (!is_prime(p) || p >= (1ULL << 62)) throw Error(ErrorKind::BadField, "modulus " + f.substr(3) + " is not a supported prime");
    return p;
  }
  usage("bad field '" + f + "', expected q or fp:<p>");
}

class Runner {
 public:
  explicit Runner(Globals& g) : g_(g) {}

  Document load(const std::string& path) {
    Document d = io::load(path);
    if (!g_.field.empty() && parse_field_flag(g_.field) != d.field) usage(path + " is over another field than --field " + g_.field);
    return d;
  }

  // the part of a module coalgebra acting from one side; a side taken from a
  // bimodule coalgebra is verified on its own
  ModuleCoalgebra part(const ModuleCoalgebra& c, ModuleSide side) {
    if (c.side == side) return c;
    if (c.side != ModuleSide::bi) usage(std::string("expected a ") + to_string(side) + " module coalgebra");
    ModuleCoalgebra x = side == ModuleSide::left ? make_module_coalgebra(side, c.base, c.comult, c.counit, c.left_action, std::nullopt)
                                                 : make_module_coalgebra(side, c.base, c.comult, c.counit, std::nullopt, c.right_action);
    pre.merge(verify_module_coalgebra(x), std::string("C.") + to_string(side) + ".");
    return x;
  }

  CheckReport pre;

  template <class T>
  T get(const Document& d, const std::string& path, const char* what) {
    auto* v = std::get_if<T>(&d.value);
    if (!v) usage(path + " is not a " + what + " file");
    return *v;
  }

 private:
  Globals& g_;
};

std::vector<std::string> pair_names(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + "." + y);
  return out;
}

std::vector<std::string> dual_names(const std::vector<std::string>& a) {
  std::vector<std::string> out;
  for (const auto& x : a) out.push_back(x + "*");
  return out;
}

void write_doc(const std::string& path, Document d, const std::map<std::string, std::string>& ref_files) {
  fs::path dir = fs::path(path).parent_path();
  for (const auto& [role, file] : ref_files) d.refs[role] = io::companion(dir, file, io::read_file(file));
  io::write_file(path, io::emit(d));
  std::cout << "wrote " << path << "\n";
}

Document algebra_doc(const ProductAlgebra& p, std::vector<std::string> names) {
  Document d;
  d.field = p.algebra->structure().modulus();
  d.value = p.algebra;
  d.basis = std::move(names);
  return d;
}

FiniteModule plain_module(Runner& run, const std::string& path, const AlgebraRef& a, Side side) {
  if (path.empty()) return regular_module(a, side);
  Document d = run.load(path);
  FiniteModule m = run.get<io::ModuleData>(d, path, "module").module;
  if (!same_algebra(m.algebra, a)) usage(path + " is a module over another algebra");
  if (m.action_side != side) usage(path + " acts from the wrong side");
  m.coaction.reset();
  return m;
}

// a comodule algebra file, or one coaction of a bicomodule algebra file
ComoduleAlgebra comodule_part(const Document& d, const std::string& path, Side side) {
  if (auto* b = std::get_if<BicomoduleAlgebra>(&d.value)) return side == Side::left ? b->left() : b->right();
  auto* x = std::get_if<ComoduleAlgebra>(&d.value);
  if (!x) usage(path + " is not a comodule algebra file");
  if (x->side != side) usage(path + " coacts from the wrong side");
  return *x;
}

ModuleSide module_coalgebra_side(DoiHopfVariant v) {
  return v == DoiHopfVariant::right_left || v == DoiHopfVariant::right_right ? ModuleSide::right : ModuleSide::left;
}

Side comodule_side(DoiHopfVariant v) {
  return v == DoiHopfVariant::right_left || v == DoiHopfVariant::left_left ? Side::left : Side::right;
}

struct YdFiles {
  BicomoduleAlgebra a;
  ModuleCoalgebra c;
};

YdFiles yd_files(const Document& d, const std::string& path) {
  auto& m = std::get<io::ModuleData>(d.value);
  if (m.structure != io::ModuleStructure::yd && m.structure != io::ModuleStructure::yd_doi_hopf) usage(path + " is not a Yetter-Drinfeld module file");
  return {std::get<BicomoduleAlgebra>(d.companions.at("algebra")->value), std::get<ModuleCoalgebra>(d.companions.at("coalgebra")->value)};
}

DoiHopfContext module_context(const Document& d) {
  const auto& m = std::get<io::ModuleData>(d.value);
  const auto& c = std::get<ModuleCoalgebra>(d.companions.at("coalgebra")->value);
  return make_doi_hopf_context(m.variant, comodule_part(*d.companions.at("algebra"), "", comodule_side(m.variant)), c);
}

CheckReport check_document(const Document& d, const std::string& bytes) {
  CheckReport r;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, QuasiHopfRef>) r = verify_quasi_hopf(*v);
        else if constexpr (std::is_same_v<T, AlgebraRef>) r = verify_algebra(*v);
        else if constexpr (std::is_same_v<T, ComoduleAlgebra>) r = verify_comodule_algebra(v);
        else if constexpr (std::is_same_v<T, BicomoduleAlgebra>) r = verify_bicomodule_algebra(v);
        else if constexpr (std::is_same_v<T, ModuleCoalgebra>) r = verify_module_coalgebra(v);
        else if constexpr (std::is_same_v<T, io::Gauge>) {
          const QuasiHopfAlgebra& h = require_antipode(*v.base);
          GaugeTransformation g = make_gauge(h, v.F);
          r.expect("gauge.invertible", true);
          r.merge(verify_quasi_hopf(gauge_twist(h, g)), "twisted.");
        } else {
          const FiniteModule& m = v.module;
          switch (v.structure) {
            case io::ModuleStructure::plain: r = verify_module(m); break;
            case io::ModuleStructure::doi_hopf: r = verify_doi_hopf(m, module_context(d)); break;
            case io::ModuleStructure::yd: {
              YdFiles f = yd_files(d, "");
              r = verify_yd(m, f.a, f.c);
              break;
            }
            case io::ModuleStructure::yd_doi_hopf: {
              YdFiles f = yd_files(d, "");
              r = verify_doi_hopf(m, yd_context(f.a, f.c));
              break;
            }
          }
        }
      },
      d.value);
  bool canonical = io::emit(d) == bytes;
  r.expect("file.canonical", canonical, canonical ? "" : "not in canonical form", false);
  return r;
}

void compare_maps(CheckReport& r, const std::string& id, const LinMap& a, const LinMap& b) {
  r.expect(id, a == b);
}

std::string command_line(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--jobs" || a == "--report") {
      ++i;
      continue;
    }
    if (a.rfind("--jobs=", 0) == 0 || a.rfind("--report=", 0) == 0) continue;
    if (!s.empty()) s += " ";
    s += a;
  }
  return s;
}

bool file_level(ErrorKind k) {
  return k == ErrorKind::UsageError || k == ErrorKind::ParseError || k == ErrorKind::HashMismatch || k == ErrorKind::BadField;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of finite-dimensional quasi-Hopf structures"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--report", g.report, "write a JSON report");
  app.add_option("--field", g.field, "q or fp:<p>");
  app.add_option("--jobs", g.jobs, "worker threads for verification")->check(CLI::PositiveNumber);
  Runner run(g);
  std::function<CheckReport()> action;
  bool produces_report = true;

  auto sub = [](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::string file, gauge, out, a_file, b_file, c_file, module_file, diag_kind, coring_kind, variant_name, to, base_file, side = "bi", name;
  bool yd = false, witness = true;

  // check
  CLI::App* check = sub(&app, "check", "verify a structure file");
  check->add_option("file", file)->required();
  check->callback([&] {
    action = [&] {
      std::string bytes = io::read_file(file);
      Document d = run.load(file);
      return check_document(d, bytes);
    };
  });

  CLI::App* canon = sub(&app, "canon", "print the canonical form of a structure file");
  canon->add_option("file", file)->required();
  canon->callback([&] {
    produces_report = false;
    action = [&] {
      std::cout << io::emit(run.load(file));
      return CheckReport();
    };
  });

  // twist
  CLI::App* twist = sub(&app, "twist", "twist a quasi-Hopf algebra by a gauge transformation");
  twist->add_option("file", file)->required();
  twist->add_option("--gauge", gauge)->required();
  twist->add_option("-o,--out", out);
  twist->callback([&] {
    action = [&] {
      Document hd = run.load(file);
      QuasiHopfRef h = run.get<QuasiHopfRef>(hd, file, "quasi-hopf");
      io::Gauge gg = run.get<io::Gauge>(run.load(gauge), gauge, "gauge");
      if (!same_base(*h, *gg.base)) usage(gauge + " is a gauge over another algebra");
      QuasiHopfAlgebra t = gauge_twist(*h, make_gauge(*h, gg.F));
      CheckReport r = verify_quasi_hopf(t);
      if (!out.empty()) {
        Document d;
        d.field = hd.field;
        d.basis = hd.basis;
        d.value = std::make_shared<QuasiHopfAlgebra>(std::move(t));
        write_doc(out, d, {});
      }
      return r;
    };
  });

  CLI::App* dtwist = sub(&app, "dtwist", "compute and verify the Drinfeld twist");
  dtwist->add_option("file", file)->required();
  dtwist->add_option("-o,--out", out);
  dtwist->callback([&] {
    action = [&] {
      Document hd = run.load(file);
      QuasiHopfRef h = run.get<QuasiHopfRef>(hd, file, "quasi-hopf");
      DrinfeldTwist t = drinfeld_twist(*h);
      CheckReport r = verify_drinfeld_twist(*h, t);
      if (!out.empty()) {
        Document d;
        d.field = hd.field;
        d.basis = hd.basis;
        d.value = io::Gauge{h, t.f};
        write_doc(out, d, {{"base", file}});
      }
      return r;
    };
  });

  // build
  CLI::App* build = sub(&app, "build", "build a derived structure and verify it");
  build->require_subcommand(1);
  CLI::App* smash = sub(build, "smash", "C* >< B for a right module coalgebra C and a left comodule algebra B");
  CLI::App* rsmash = sub(build, "rsmash", "A >< C* for a right comodule algebra A and a left module coalgebra C");
  CLI::App* kop = sub(build, "koppinen", "Hom(C, B) with the Koppinen product, compared with C* >< B");
  CLI::App* diag = sub(build, "diagonal", "diagonal crossed products of a bicomodule algebra with C*");
  CLI::App* coring = sub(build, "coring", "the corings B (x) C, C (x) A and the Yetter-Drinfeld coring");
  CLI::App* induce = sub(build, "induce", "induced Doi-Hopf or Yetter-Drinfeld module");
  for (CLI::App* s : {smash, kop}) {
    s->add_option("--C", c_file)->required();
    s->add_option("--B", b_file)->required();
  }
  for (CLI::App* s : {rsmash, diag, coring, induce}) {
    s->add_option("--A", a_file)->required();
    s->add_option("--C", c_file)->required();
  }
  for (CLI::App* s : {smash, rsmash, kop, diag, induce}) s->add_option("-o,--out", out);
  diag->add_option("--kind", diag_kind, "left-l, left-r, right-l, right-r or all")->default_val("all");
  coring->add_option("--kind", coring_kind, "bc, ca or yd")->required();
  induce->add_option("--variant", variant_name, "Doi-Hopf variant");
  induce->add_flag("--yd", yd, "Yetter-Drinfeld module over a bicomodule algebra");
  induce->add_option("--module", module_file, "plain module to induce from (default: the regular module)");

  smash->callback([&] {
    action = [&] {
      Document cd = run.load(c_file), bd = run.load(b_file);
      ModuleCoalgebra c = run.part(run.get<ModuleCoalgebra>(cd, c_file, "module coalgebra"), ModuleSide::right);
      ProductAlgebra p = generalized_smash(dualize(c), comodule_part(bd, b_file, Side::left));
      CheckReport r = verify_product_algebra(p);
      if (!out.empty()) write_doc(out, algebra_doc(p, pair_names(dual_names(cd.basis), bd.basis)), {});
      return r;
    };
  });
  rsmash->callback([&] {
    action = [&] {
      Document ad = run.load(a_file), cd = run.load(c_file);
      ModuleCoalgebra c = run.part(run.get<ModuleCoalgebra>(cd, c_file, "module coalgebra"), ModuleSide::left);
      ProductAlgebra p = right_generalized_smash(comodule_part(ad, a_file, Side::right), dualize(c));
      CheckReport r = verify_product_algebra(p);
      if (!out.empty()) write_doc(out, algebra_doc(p, pair_names(ad.basis, dual_names(cd.basis))), {});
      return r;
    };
  });
  kop->callback([&] {
    action = [&] {
      Document cd = run.load(c_file), bd = run.load(b_file);
      ModuleCoalgebra c = run.part(run.get<ModuleCoalgebra>(cd, c_file, "module coalgebra"), ModuleSide::right);
      ComoduleAlgebra b = comodule_part(bd, b_file, Side::left);
      ProductAlgebra k = koppinen_smash(c, b);
      ProductAlgebra s = generalized_smash(dualize(c), b);
      CheckReport r = verify_product_algebra(k);
      r.merge(verify_algebra_map(alpha_morphism(c, b), s, k), "alpha.");
      if (!out.empty()) write_doc(out, algebra_doc(k, pair_names(dual_names(cd.basis), bd.basis)), {});
      return r;
    };
  });
  diag->callback([&] {
    action = [&] {
      Document ad = run.load(a_file), cd = run.load(c_file);
      BicomoduleAlgebra a = run.get<BicomoduleAlgebra>(ad, a_file, "bicomodule algebra");
      ModuleCoalgebra c = run.part(run.get<ModuleCoalgebra>(cd, c_file, "module coalgebra"), ModuleSide::bi);
      std::vector<CrossedKind> kinds;
      for (auto k : {CrossedKind::left_l, CrossedKind::left_r, CrossedKind::right_l, CrossedKind::right_r})
        if (diag_kind == "all" || diag_kind == to_string(k)) kinds.push_back(k);
      if (kinds.empty()) usage("unknown crossed product kind '" + diag_kind + "'");
      if (!out.empty() && kinds.size() != 1) usage("--out needs a single --kind");
      ModuleAlgebra m = dualize(c);
      CheckReport r;
      for (auto k : kinds) {
        ProductAlgebra p = diagonal_crossed_product(a, m, k);
        r.merge(verify_product_algebra(p), std::string(to_string(k)) + ".");
        if (!out.empty()) {
          bool left = k == CrossedKind::left_l || k == CrossedKind::left_r;
          auto names = left ? pair_names(dual_names(cd.basis), ad.basis) : pair_names(ad.basis, dual_names(cd.basis));
          write_doc(out, algebra_doc(p, names), {});
        }
      }
      return r;
    };
  });
  coring->callback([&] {
    action = [&] {
      Document ad = run.load(a_file), cd = run.load(c_file);
      const ModuleCoalgebra& c = run.get<ModuleCoalgebra>(cd, c_file, "module coalgebra");
      Coring x;
      if (coring_kind == "bc") x = build_coring_bc(comodule_part(ad, a_file, Side::left), run.part(c, ModuleSide::right));
      else if (coring_kind == "ca") x = build_coring_ca(comodule_part(ad, a_file, Side::right), run.part(c, ModuleSide::left));
      else if (coring_kind == "yd") x = build_coring_yd(run.get<BicomoduleAlgebra>(ad, a_file, "bicomodule algebra"), run.part(c, ModuleSide::bi));
      else usage("unknown coring kind '" + coring_kind + "'");
      return verify_coring(x);
    };
  });
  induce->callback([&] {
    action = [&] {
      if (yd == !variant_name.empty()) usage("give exactly one of --variant and --yd");
      Document ad = run.load(a_file), cd = run.load(c_file);
      const ModuleCoalgebra& c = run.get<ModuleCoalgebra>(cd, c_file, "module coalgebra");
      io::ModuleData m;
      CheckReport r;
      if (yd) {
        BicomoduleAlgebra a = run.get<BicomoduleAlgebra>(ad, a_file, "bicomodule algebra");
        m.structure = io::ModuleStructure::yd;
        m.module = induce_yd(plain_module(run, module_file, a.algebra, Side::left), a, c);
        r = verify_yd(m.module, a, c);
      } else {
        DoiHopfVariant v = parse_doi_hopf_variant(variant_name);
        DoiHopfContext ctx = make_doi_hopf_context(v, comodule_part(ad, a_file, comodule_side(v)), run.part(c, module_coalgebra_side(v)));
        Side side = v == DoiHopfVariant::left_right || v == DoiHopfVariant::left_left ? Side::left : Side::right;
        m.structure = io::ModuleStructure::doi_hopf;
        m.variant = v;
        m.module = induce_doi_hopf(plain_module(run, module_file, ctx.algebra.algebra, side), ctx);
        r = verify_doi_hopf(m.module, ctx);
      }
      if (!out.empty()) {
        Document d;
        d.field = ad.field;
        d.basis = io::default_basis(m.module.dim, "m");
        d.value = m;
        write_doc(out, d, {{"algebra", a_file}, {"coalgebra", c_file}});
      }
      return r;
    };
  });

  // convert
  CLI::App* convert = sub(&app, "convert", "move a module between equivalent descriptions");
  convert->require_subcommand(1);
  CLI::App* yd2dh = sub(convert, "yd2dh", "Yetter-Drinfeld module to a left-right Doi-Hopf module over H^op (x) H");
  CLI::App* dh2yd = sub(convert, "dh2yd", "the inverse of yd2dh");
  CLI::App* cvar = sub(convert, "variant", "read a Doi-Hopf module in another variant");
  CLI::App* r1r2 = sub(convert, "bicomodule-r1r2", "the two right H^op (x) H comodule algebras of a bicomodule algebra");
  for (CLI::App* s : {yd2dh, dh2yd, cvar}) s->add_option("--module", module_file)->required();
  for (CLI::App* s : {yd2dh, dh2yd}) s->add_option("-o,--out", out);
  cvar->add_option("--to", to)->required();
  r1r2->add_option("--A", a_file)->required();
  r1r2->add_option("-o,--out", out, "output directory");
  r1r2->add_flag("!--no-witness", witness, "skip the search for a twist between the two coactions");

  auto yd_convert = [&](bool forward) {
    return [&, forward] {
      action = [&, forward] {
        Document md = run.load(module_file);
        io::ModuleData m = run.get<io::ModuleData>(md, module_file, "module");
        io::ModuleStructure want = forward ? io::ModuleStructure::yd : io::ModuleStructure::yd_doi_hopf;
        if (m.structure != want) usage(module_file + " is not a " + std::string(io::to_string(want)) + " module");
        YdFiles f = yd_files(md, module_file);
        DoiHopfContext ctx = yd_context(f.a, f.c);
        io::ModuleData o = m;
        CheckReport r;
        if (forward) {
          r.merge(verify_yd(m.module, f.a, f.c), "input.");
          o.module = yd_to_doihopf(m.module, f.a, f.c);
          o.structure = io::ModuleStructure::yd_doi_hopf;
          r.merge(verify_doi_hopf(o.module, ctx), "output.");
          compare_maps(r, "roundtrip.coaction", *doihopf_to_yd(o.module, f.a, f.c).coaction, *m.module.coaction);
        } else {
          r.merge(verify_doi_hopf(m.module, ctx), "input.");
          o.module = doihopf_to_yd(m.module, f.a, f.c);
          o.structure = io::ModuleStructure::yd;
          r.merge(verify_yd(o.module, f.a, f.c), "output.");
          compare_maps(r, "roundtrip.coaction", *yd_to_doihopf(o.module, f.a, f.c).coaction, *m.module.coaction);
        }
        if (!out.empty()) {
          Document d = md;
          d.value = o;
          fs::path dir = fs::path(module_file).parent_path();
          write_doc(out, d, {{"algebra", (dir / md.refs.at("algebra").path).string()}, {"coalgebra", (dir / md.refs.at("coalgebra").path).string()}});
        }
        return r;
      };
    };
  };
  yd2dh->callback(yd_convert(true));
  dh2yd->callback(yd_convert(false));
  cvar->callback([&] {
    action = [&] {
      Document md = run.load(module_file);
      io::ModuleData m = run.get<io::ModuleData>(md, module_file, "module");
      if (m.structure != io::ModuleStructure::doi_hopf) usage(module_file + " is not a Doi-Hopf module");
      DoiHopfContext ctx = module_context(md);
      TranslatedModule t = translate_variant(m.module, ctx, parse_doi_hopf_variant(to));
      CheckReport r;
      r.merge(verify_doi_hopf(m.module, ctx), "input.");
      r.merge(verify_doi_hopf(t.module, t.context), "output.");
      TranslatedModule back = translate_variant(t.module, t.context, ctx.variant);
      compare_maps(r, "roundtrip.action", back.module.action, m.module.action);
      r.expect("roundtrip.coaction", back.module.coaction && *back.module.coaction == *m.module.coaction);
      return r;
    };
  });
  r1r2->callback([&] {
    action = [&] {
      Document ad = run.load(a_file);
      BicomoduleAlgebra a = run.get<BicomoduleAlgebra>(ad, a_file, "bicomodule algebra");
      CoactionPair pair = bicomodule_to_right_HopH(a, witness);
      CheckReport r;
      r.merge(verify_quasi_hopf(*pair.base), "base.");
      r.merge(verify_comodule_algebra(pair.first), "r1.");
      r.merge(verify_comodule_algebra(pair.second), "r2.");
      if (witness) {
        r.expect("witness.found", pair.witness.has_value());
        if (pair.witness) r.merge(verify_twist_witness(pair.first, pair.second, *pair.witness), "witness.");
      }
      if (!out.empty()) {
        fs::create_directories(out);
        Document base;
        base.field = ad.field;
        base.basis = pair_names(ad.companions.at("base")->basis, ad.companions.at("base")->basis);
        base.value = pair.base;
        fs::path bp = fs::path(out) / "base.qha.json";
        write_doc(bp.string(), base, {});
        for (auto [nm, x] : {std::pair{"r1", &pair.first}, std::pair{"r2", &pair.second}}) {
          Document d;
          d.field = ad.field;
          d.basis = ad.basis;
          d.value = *x;
          write_doc((fs::path(out) / (std::string(nm) + ".qha.json")).string(), d, {{"base", bp.string()}});
        }
      }
      return r;
    };
  });

  // verify
  CLI::App* verify = sub(&app, "verify", "run a structural verification suite");
  verify->require_subcommand(1);
  CLI::App* iso = sub(verify, "iso-2.9", "C* # H against the transposed smash product");
  CLI::App* prop = sub(verify, "prop-3.10", "smash products of the two coactions against the diagonal crossed products");
  CLI::App* rt = sub(verify, "roundtrip-3.8", "Yetter-Drinfeld modules against Doi-Hopf modules over H^op (x) H");
  CLI::App* rat = sub(verify, "rat-2.5", "Doi-Hopf modules as rational smash modules");
  CLI::App* adj = sub(verify, "adjunction-2.2", "the induction adjunctions");
  iso->add_option("--C", c_file)->required();
  for (CLI::App* s : {prop, rt, rat, adj}) {
    s->add_option("--A", a_file)->required();
    s->add_option("--C", c_file)->required();
  }
  for (CLI::App* s : {rt, rat, adj}) s->add_option("--module", module_file, "plain module to induce from (default: the regular module)");

  iso->callback([&] {
    action = [&] {
      ModuleCoalgebra c = run.part(run.get<ModuleCoalgebra>(run.load(c_file), c_file, "module coalgebra"), ModuleSide::right);
      return verify_phi_isomorphism(phi_isomorphism(c), require_antipode(*c.base));
    };
  });
  prop->callback([&] {
    action = [&] {
      BicomoduleAlgebra a = run.get<BicomoduleAlgebra>(run.load(a_file), a_file, "bicomodule algebra");
      ModuleCoalgebra c = run.part(run.get<ModuleCoalgebra>(run.load(c_file), c_file, "module coalgebra"), ModuleSide::bi);
      return compare_smash_with_crossed_products(a, c);
    };
  });
  rt->callback([&] {
    action = [&] {
      BicomoduleAlgebra a = run.get<BicomoduleAlgebra>(run.load(a_file), a_file, "bicomodule algebra");
      ModuleCoalgebra c = run.part(run.get<ModuleCoalgebra>(run.load(c_file), c_file, "module coalgebra"), ModuleSide::bi);
      FiniteModule m = induce_yd(plain_module(run, module_file, a.algebra, Side::left), a, c);
      CheckReport r;
      r.merge(verify_yd(m, a, c), "M.");
      FiniteModule f = yd_to_doihopf(m, a, c);
      r.merge(verify_doi_hopf(f, yd_context(a, c)), "F.");
      FiniteModule gf = doihopf_to_yd(f, a, c);
      r.merge(verify_yd(gf, a, c), "GF.");
      compare_maps(r, "GF.equals_M", *gf.coaction, *m.coaction);
      compare_maps(r, "GF.action", gf.action, m.action);
      compare_maps(r, "FGF.equals_F", *yd_to_doihopf(gf, a, c).coaction, *f.coaction);
      return r;
    };
  });
  rat->callback([&] {
    action = [&] {
      ComoduleAlgebra b = comodule_part(run.load(a_file), a_file, Side::left);
      ModuleCoalgebra c = run.part(run.get<ModuleCoalgebra>(run.load(c_file), c_file, "module coalgebra"), ModuleSide::right);
      DoiHopfContext ctx = make_doi_hopf_context(DoiHopfVariant::right_left, b, c);
      FiniteModule m = induce_doi_hopf(plain_module(run, module_file, b.algebra, Side::right), ctx);
      CheckReport r;
      r.merge(verify_doi_hopf(m, ctx), "M.");
      SmashModule s = to_smash_module(m, ctx);
      r.merge(verify_product_algebra(s.algebra), "smash.");
      r.merge(verify_module(s.module), "smash.module.");
      compare_maps(r, "rational.coaction", rational_check(s, ctx), *m.coaction);
      r.expect("rat.whole", static_cast<int>(compute_rat(s, ctx).size()) == m.dim);
      return r;
    };
  });
  adj->callback([&] {
    action = [&] {
      ComoduleAlgebra b = comodule_part(run.load(a_file), a_file, Side::left);
      ModuleCoalgebra c = run.part(run.get<ModuleCoalgebra>(run.load(c_file), c_file, "module coalgebra"), ModuleSide::right);
      DoiHopfContext ctx = make_doi_hopf_context(DoiHopfVariant::right_left, b, c);
      FiniteModule n = plain_module(run, module_file, b.algebra, Side::right);
      FiniteModule m = induce_doi_hopf(n, ctx);
      return verify_adjunction(m, n, ctx);
    };
  });

  // fixture
  CLI::App* fixture = sub(&app, "fixture", "built-in fixtures");
  fixture->require_subcommand(1);
  CLI::App* emit = sub(fixture, "emit", "write a fixture as a structure file");
  emit->add_option("name", name, "kz2, h2, c2, hh-bicomodule or h2-bimodule-coalgebra")->required();
  emit->add_option("-o,--out", out);
  emit->add_option("--base", base_file, "quasi-hopf file the fixture lives over (default h2)");
  emit->add_option("--side", side, "c2: left, right or bi")->default_val("bi");
  emit->callback([&] {
    produces_report = false;
    action = [&] {
      std::uint64_t p = parse_field_flag(g.field);
      ModuleSide ms = side == "left" ? ModuleSide::left : side == "right" ? ModuleSide::right : ModuleSide::bi;
      if (side != "left" && side != "right" && side != "bi") usage("bad --side '" + side + "'");
      fs::path dir = out.empty() ? fs::path() : fs::path(out).parent_path();
      bool dependent = name != "kz2" && name != "h2";
      std::optional<std::pair<Document, io::Companion>> base;
      if (dependent && !base_file.empty()) {
        Document b = run.load(base_file);
        base = std::pair{b, io::companion(dir, base_file, io::read_file(base_file))};
      } else if (dependent && !out.empty()) {
        fs::path bp = dir / "h2.qha.json";
        std::string bytes = io::emit(io::fixture("h2", p));
        io::write_file(bp, bytes);
        base = std::pair{io::fixture("h2", p), io::companion(dir, bp, bytes)};
      }
      std::string bytes = io::emit(io::fixture(name, p, base, ms));
      if (out.empty()) std::cout << bytes;
      else io::write_file(out, bytes);
      return CheckReport();
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (const char* env = std::getenv("QHA_JOBS")) {
    try {
      g.jobs = std::stoi(env);
    } catch (...) {
      std::cerr << "QHA_JOBS must be a positive integer\n";
      return 2;
    }
    if (g.jobs < 1) {
      std::cerr << "QHA_JOBS must be a positive integer\n";
      return 2;
    }
  }
  set_jobs(g.jobs);

  CheckReport r;
  try {
    if (!action) usage("no command");
    r = action();
    CheckReport all = run.pre;
    all.merge(r);
    r = all;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (file_level(e.kind())) return 2;
    r = CheckReport();
    r.expect("construct", false, e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (!produces_report) return 0;
  std::cout << r.summary();
  int passed = 0, failed = 0;
  for (const auto& rec : r.records()) (rec.pass ? passed : failed)++;
  std::cout << (r.ok() ? "OK" : "FAILED") << ": " << passed << " passed, " << failed << " not passed\n";
  if (!g.report.empty()) {
    try {
      io::write_file(g.report, io::report_json(r, command_line(argc, argv)));
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return r.ok() ? 0 : 1;
}
