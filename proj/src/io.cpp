// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhopf/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "qhopf/error.hpp"
#include "qhopf/fixtures.hpp"

namespace qhopf::io {

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr const char* kFormat = "qha/1";

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

// objects one key per line, arrays of scalars on one line
void put(std::string& out, const json& v, int indent) {
  auto pad = [&](int n) { out.append(static_cast<std::size_t>(n), ' '); };
  if (v.is_object()) {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      pad(indent + 2);
      out += json(it.key()).dump();
      out += ": ";
      put(out, it.value(), indent + 2);
    }
    out += "\n";
    pad(indent);
    out += "}";
  } else if (v.is_array()) {
    if (v.empty()) {
      out += "[]";
      return;
    }
    bool flat = true;
    for (const auto& x : v) flat = flat && x.is_primitive();
    if (flat) {
      out += "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].dump();
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",\n";
      pad(indent + 2);
      put(out, v[i], indent + 2);
    }
    out += "\n";
    pad(indent);
    out += "]";
  } else {
    out += v.dump();
  }
}

std::string canonical(const json& j) {
  std::string s;
  put(s, j, 0);
  s += "\n";
  return s;
}

json entries(const Tensor& t) {
  json a = json::array();
  t.for_each([&](const Index& idx, const Scalar& v) {
    json e = json::array();
    for (int i : idx) e.push_back(i);
    e.push_back(v.str());
    a.push_back(std::move(e));
  });
  return a;
}

Tensor map_tensor(const LinMap& f) {
  Dims d = f.source();
  d.insert(d.end(), f.target().begin(), f.target().end());
  Tensor t(d);
  Tensor::Key tv = volume_of(f.target());
  for (Tensor::Key k = 0; k < f.source_volume(); ++k)
    for (const auto& [tk, v] : f.column(k).entries()) t.add_key(k * tv + tk, v);
  return t;
}

Tensor read_tensor(const json& j, const Dims& dims, std::uint64_t p, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of entries");
  Tensor t(dims);
  std::size_t n = 0;
  for (const auto& e : j) {
    std::string at = where + "[" + std::to_string(n++) + "]";
    if (!e.is_array() || e.size() != dims.size() + 1) fail(at, "expected " + std::to_string(dims.size()) + " indices and a coefficient");
    Index idx;
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (!e[i].is_number_integer()) fail(at, "index is not an integer");
      long long v = e[i].get<long long>();
      if (v < 0 || v >= dims[i]) fail(at, "index " + std::to_string(v) + " out of range");
      idx.push_back(static_cast<int>(v));
    }
    const json& c = e.back();
    std::string text;
    if (c.is_string()) text = c.get<std::string>();
    else if (c.is_number_integer()) text = std::to_string(c.get<long long>());
    else fail(at, "coefficient must be a string or an integer");
    Scalar s;
    try {
      s = Scalar::parse(text, p);
    } catch (const Error& err) {
      std::string msg = err.what();
      fail(at, msg.substr(msg.find(": ") + 2));
    }
    if (!t.get(idx).is_zero()) fail(at, "duplicate entry");
    t.add(idx, s);
  }
  return t;
}

LinMap read_map(const json& j, const Dims& src, const Dims& tgt, std::uint64_t p, const std::string& where) {
  Dims d = src;
  d.insert(d.end(), tgt.begin(), tgt.end());
  Tensor t = read_tensor(j, d, p, where);
  LinMap f(src, tgt);
  Tensor::Key tv = volume_of(tgt);
  for (const auto& [k, v] : t.entries()) f.column(k / tv).add_key(k % tv, v);
  return f;
}

const json& need(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, "missing field '" + key + "'");
  return j.at(key);
}

std::string need_string(const json& j, const std::string& key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_string()) fail(where + "." + key, "expected a string");
  return v.get<std::string>();
}

int need_dim(const json& j, const std::string& key) {
  const json& v = need(need(j, "dims", "dims"), key, "dims");
  if (!v.is_number_integer() || v.get<long long>() <= 0 || v.get<long long>() > 4096) fail("dims." + key, "expected a positive dimension");
  return static_cast<int>(v.get<long long>());
}

const char* kind_names[] = {"quasi-hopf", "algebra", "comodule-algebra", "bicomodule-algebra", "module-coalgebra", "gauge", "module"};
const char* structure_names[] = {"plain", "doi-hopf", "yd", "yd-doi-hopf"};

FileKind parse_kind(const std::string& s) {
  for (int i = 0; i < 7; ++i)
    if (s == kind_names[i]) return static_cast<FileKind>(i);
  fail("kind", "unknown kind '" + s + "'");
}

ModuleStructure parse_structure(const std::string& s) {
  for (int i = 0; i < 4; ++i)
    if (s == structure_names[i]) return static_cast<ModuleStructure>(i);
  fail("structure", "unknown structure '" + s + "'");
}

Side parse_side(const std::string& s, const std::string& where) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  fail(where, "expected left or right");
}

ModuleSide parse_module_side(const std::string& s) {
  if (s == "left") return ModuleSide::left;
  if (s == "right") return ModuleSide::right;
  if (s == "bi") return ModuleSide::bi;
  fail("side", "expected left, right or bi");
}

const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

json field_json(std::uint64_t p) {
  if (!p) return "q";
  return json{{"fp", p}};
}

std::uint64_t parse_field(const json& j) {
  if (j.is_string() && j.get<std::string>() == "q") return 0;
  if (j.is_object() && j.size() == 1 && j.contains("fp") && j["fp"].is_number_unsigned()) {
    std::uint64_t p = j["fp"].get<std::uint64_t>();
    if (!is_prime(p) || p >= (1ULL << 62)) fail("field", "modulus " + std::to_string(p) + " is not a supported prime");
    return p;
  }
  fail("field", "expected \"q\" or {\"fp\": p}");
}

AlgebraRef algebra_of(const Document& d) {
  return std::visit(
      [](const auto& v) -> AlgebraRef {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, QuasiHopfRef>) return v->algebra;
        else if constexpr (std::is_same_v<T, AlgebraRef>) return v;
        else if constexpr (std::is_same_v<T, ComoduleAlgebra> || std::is_same_v<T, BicomoduleAlgebra>) return v.algebra;
        else return nullptr;
      },
      d.value);
}

int carrier_dim(const Document& d) {
  if (auto a = algebra_of(d)) return a->dim();
  if (auto* c = std::get_if<ModuleCoalgebra>(&d.value)) return c->dim;
  if (auto* m = std::get_if<ModuleData>(&d.value)) return m->module.dim;
  return std::get<Gauge>(d.value).base->dim();
}

QuasiHopfRef base_of(const Document& d) {
  auto it = d.companions.find("base");
  if (it == d.companions.end()) fail("refs", "missing companion 'base'");
  auto* h = std::get_if<QuasiHopfRef>(&it->second->value);
  if (!h) fail("refs.base", "base must be a quasi-hopf file");
  return *h;
}

AlgebraRef read_algebra(const json& t, int n, std::uint64_t p) {
  return FinAlgebra::make(read_tensor(need(t, "mult", "tables"), {n, n, n}, p, "tables.mult"),
                          read_tensor(need(t, "unit", "tables"), {n}, p, "tables.unit"));
}

void put_algebra(json& t, const FinAlgebra& a) {
  t["mult"] = entries(a.structure());
  t["unit"] = entries(a.unit());
}

// shape errors from the constructors are reported as parse errors
template <class F>
auto build(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ShapeMismatch) fail(what, e.what());
    throw;
  }
}

}  // namespace

const char* to_string(FileKind k) { return kind_names[static_cast<int>(k)]; }
const char* to_string(ModuleStructure s) { return structure_names[static_cast<int>(s)]; }

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr)) throw Error(ErrorKind::Internal, "sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorKind::UsageError, "cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& p, const std::string& bytes) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error(ErrorKind::UsageError, "cannot write " + p.string());
  out << bytes;
}

std::vector<std::string> default_basis(int n, const std::string& prefix) {
  std::vector<std::string> b;
  for (int i = 0; i < n; ++i) b.push_back(prefix + std::to_string(i));
  return b;
}

Companion companion(const fs::path& from_dir, const fs::path& file, const std::string& bytes) {
  fs::path rel = from_dir.empty() ? file : fs::relative(file, from_dir);
  if (rel.empty()) rel = file;
  return {rel.generic_string(), sha256_hex(bytes)};
}

Document parse(const std::string& text, const fs::path& dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!j.is_object()) fail("document", "expected an object");
  if (need_string(j, "format", "document") != kFormat) fail("format", "expected " + std::string(kFormat));
  FileKind kind = parse_kind(need_string(j, "kind", "document"));
  Document d;
  d.field = parse_field(need(j, "field", "document"));
  std::uint64_t p = d.field;
  const json& basis = need(j, "basis", "document");
  if (!basis.is_array()) fail("basis", "expected an array of names");
  for (const auto& b : basis) {
    if (!b.is_string()) fail("basis", "names must be strings");
    d.basis.push_back(b.get<std::string>());
  }
  if (j.contains("refs")) {
    const json& refs = j["refs"];
    if (!refs.is_object()) fail("refs", "expected an object");
    for (auto it = refs.begin(); it != refs.end(); ++it) {
      std::string where = "refs." + it.key();
      Companion c{need_string(it.value(), "path", where), need_string(it.value(), "sha256", where)};
      fs::path file = dir / c.path;
      std::ifstream probe(file, std::ios::binary);
      if (!probe) throw Error(ErrorKind::HashMismatch, where + ": companion " + file.string() + " not found");
      std::string bytes = read_file(file);
      if (sha256_hex(bytes) != c.sha256) throw Error(ErrorKind::HashMismatch, where + ": companion " + file.string() + " does not match its hash");
      auto sub = std::make_shared<Document>(parse(bytes, file.parent_path()));
      if (sub->field != p) fail(where, "companion is over a different field");
      d.refs[it.key()] = c;
      d.companions[it.key()] = std::move(sub);
    }
  }
  const json& t = need(j, "tables", "document");
  switch (kind) {
    case FileKind::quasi_hopf: {
      int n = need_dim(j, "H");
      d.value = build("tables", [&]() -> QuasiHopfRef {
        AlgebraRef a = read_algebra(t, n, p);
        QuasiBialgebra b = make_quasi_bialgebra(a, read_map(need(t, "comult", "tables"), {n}, {n, n}, p, "tables.comult"),
                                                read_map(need(t, "counit", "tables"), {n}, {}, p, "tables.counit"),
                                                read_tensor(need(t, "phi", "tables"), {n, n, n}, p, "tables.phi"));
        return std::make_shared<QuasiHopfAlgebra>(make_quasi_hopf(b, read_map(need(t, "antipode", "tables"), {n}, {n}, p, "tables.antipode"),
                                                                  read_tensor(need(t, "alpha", "tables"), {n}, p, "tables.alpha"),
                                                                  read_tensor(need(t, "beta", "tables"), {n}, p, "tables.beta")));
      });
      break;
    }
    case FileKind::algebra:
      d.value = build("tables", [&] { return read_algebra(t, need_dim(j, "A"), p); });
      break;
    case FileKind::comodule_algebra: {
      int n = need_dim(j, "A");
      QuasiHopfRef h = base_of(d);
      int dh = h->dim();
      Side side = parse_side(need_string(j, "side", "document"), "side");
      Dims cd = side == Side::right ? Dims{n, dh} : Dims{dh, n};
      Dims pd = side == Side::right ? Dims{n, dh, dh} : Dims{dh, dh, n};
      d.value = build("tables", [&] {
        return make_comodule_algebra(side, h, read_algebra(t, n, p), read_map(need(t, "coaction", "tables"), {n}, cd, p, "tables.coaction"),
                                     read_tensor(need(t, "phi", "tables"), pd, p, "tables.phi"));
      });
      break;
    }
    case FileKind::bicomodule_algebra: {
      int n = need_dim(j, "A");
      QuasiHopfRef h = base_of(d);
      int dh = h->dim();
      d.value = build("tables", [&] {
        AlgebraRef a = read_algebra(t, n, p);
        ComoduleAlgebra l = make_comodule_algebra(Side::left, h, a, read_map(need(t, "lambda", "tables"), {n}, {dh, n}, p, "tables.lambda"),
                                                  read_tensor(need(t, "phi_lambda", "tables"), {dh, dh, n}, p, "tables.phi_lambda"));
        ComoduleAlgebra r = make_comodule_algebra(Side::right, h, a, read_map(need(t, "rho", "tables"), {n}, {n, dh}, p, "tables.rho"),
                                                  read_tensor(need(t, "phi_rho", "tables"), {n, dh, dh}, p, "tables.phi_rho"));
        return make_bicomodule_algebra(l, r, read_tensor(need(t, "phi_lr", "tables"), {dh, n, dh}, p, "tables.phi_lr"));
      });
      break;
    }
    case FileKind::module_coalgebra: {
      int n = need_dim(j, "C");
      QuasiHopfRef h = base_of(d);
      int dh = h->dim();
      ModuleSide side = parse_module_side(need_string(j, "side", "document"));
      d.value = build("tables", [&] {
        std::optional<LinMap> la, ra;
        if (side != ModuleSide::right) la = read_map(need(t, "left_action", "tables"), {dh, n}, {n}, p, "tables.left_action");
        if (side != ModuleSide::left) ra = read_map(need(t, "right_action", "tables"), {n, dh}, {n}, p, "tables.right_action");
        return make_module_coalgebra(side, h, read_map(need(t, "comult", "tables"), {n}, {n, n}, p, "tables.comult"),
                                     read_map(need(t, "counit", "tables"), {n}, {}, p, "tables.counit"), la, ra);
      });
      break;
    }
    case FileKind::gauge: {
      QuasiHopfRef h = base_of(d);
      int dh = need_dim(j, "H");
      if (dh != h->dim()) fail("dims.H", "does not match the base");
      d.value = Gauge{h, read_tensor(need(t, "F", "tables"), {dh, dh}, p, "tables.F")};
      break;
    }
    case FileKind::module: {
      int n = need_dim(j, "M");
      auto it = d.companions.find("algebra");
      if (it == d.companions.end()) fail("refs", "missing companion 'algebra'");
      AlgebraRef a = algebra_of(*it->second);
      if (!a) fail("refs.algebra", "companion carries no algebra");
      ModuleData m;
      m.structure = parse_structure(need_string(j, "structure", "document"));
      Side side = parse_side(need_string(j, "side", "document"), "side");
      int da = a->dim();
      m.module = build("tables", [&] {
        return make_module(side, a, read_map(need(t, "action", "tables"), side == Side::left ? Dims{da, n} : Dims{n, da}, {n}, p, "tables.action"));
      });
      if (m.module.dim != n) fail("dims.M", "does not match the action");
      if (m.structure == ModuleStructure::doi_hopf) {
        try {
          m.variant = parse_doi_hopf_variant(need_string(j, "variant", "document"));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::UsageError) throw;
          fail("variant", e.what());
        }
        if (!std::holds_alternative<ComoduleAlgebra>(it->second->value) && !std::holds_alternative<BicomoduleAlgebra>(it->second->value))
          fail("refs.algebra", "a Doi-Hopf module needs a comodule algebra");
      }
      if (m.structure == ModuleStructure::yd || m.structure == ModuleStructure::yd_doi_hopf)
        if (!std::holds_alternative<BicomoduleAlgebra>(it->second->value)) fail("refs.algebra", "needs a bicomodule algebra");
      if (m.structure != ModuleStructure::plain) {
        auto ct = d.companions.find("coalgebra");
        if (ct == d.companions.end()) fail("refs", "missing companion 'coalgebra'");
        auto* c = std::get_if<ModuleCoalgebra>(&ct->second->value);
        if (!c) fail("refs.coalgebra", "expected a module coalgebra");
        m.module.coaction_side = parse_side(need_string(j, "coaction_side", "document"), "coaction_side");
        Dims td = m.module.coaction_side == Side::left ? Dims{c->dim, n} : Dims{n, c->dim};
        m.module.coaction = read_map(need(t, "coaction", "tables"), {n}, td, p, "tables.coaction");
      }
      d.value = std::move(m);
      break;
    }
  }
  if (static_cast<int>(d.basis.size()) != carrier_dim(d)) fail("basis", "expected " + std::to_string(carrier_dim(d)) + " names");
  return d;
}

Document load(const fs::path& p) {
  std::string bytes = read_file(p);
  return parse(bytes, p.parent_path());
}

std::string emit(const Document& d) {
  json j;
  j["format"] = kFormat;
  j["kind"] = to_string(d.kind());
  j["field"] = field_json(d.field);
  j["basis"] = d.basis;
  if (!d.refs.empty()) {
    json r = json::object();
    for (const auto& [role, c] : d.refs) r[role] = json{{"path", c.path}, {"sha256", c.sha256}};
    j["refs"] = r;
  }
  json t = json::object();
  json dims = json::object();
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, QuasiHopfRef>) {
          dims["H"] = v->dim();
          put_algebra(t, *v->algebra);
          t["comult"] = entries(map_tensor(v->comult));
          t["counit"] = entries(map_tensor(v->counit));
          t["phi"] = entries(v->phi);
          t["antipode"] = entries(map_tensor(v->antipode));
          t["alpha"] = entries(v->alpha);
          t["beta"] = entries(v->beta);
        } else if constexpr (std::is_same_v<T, AlgebraRef>) {
          dims["A"] = v->dim();
          put_algebra(t, *v);
        } else if constexpr (std::is_same_v<T, ComoduleAlgebra>) {
          dims["A"] = v.algebra->dim();
          j["side"] = side_name(v.side);
          put_algebra(t, *v.algebra);
          t["coaction"] = entries(map_tensor(v.coaction));
          t["phi"] = entries(v.phi);
        } else if constexpr (std::is_same_v<T, BicomoduleAlgebra>) {
          dims["A"] = v.algebra->dim();
          put_algebra(t, *v.algebra);
          t["lambda"] = entries(map_tensor(v.lambda));
          t["rho"] = entries(map_tensor(v.rho));
          t["phi_lambda"] = entries(v.phi_lambda);
          t["phi_rho"] = entries(v.phi_rho);
          t["phi_lr"] = entries(v.phi_lr);
        } else if constexpr (std::is_same_v<T, ModuleCoalgebra>) {
          dims["C"] = v.dim;
          j["side"] = to_string(v.side);
          t["comult"] = entries(map_tensor(v.comult));
          t["counit"] = entries(map_tensor(v.counit));
          if (v.left_action) t["left_action"] = entries(map_tensor(*v.left_action));
          if (v.right_action) t["right_action"] = entries(map_tensor(*v.right_action));
        } else if constexpr (std::is_same_v<T, Gauge>) {
          dims["H"] = v.base->dim();
          t["F"] = entries(v.F);
        } else {
          dims["M"] = v.module.dim;
          j["structure"] = to_string(v.structure);
          j["side"] = side_name(v.module.action_side);
          if (v.structure == ModuleStructure::doi_hopf) j["variant"] = to_string(v.variant);
          t["action"] = entries(map_tensor(v.module.action));
          if (v.structure != ModuleStructure::plain) {
            if (!v.module.coaction) throw Error(ErrorKind::UsageError, "module without coaction");
            j["coaction_side"] = side_name(v.module.coaction_side);
            t["coaction"] = entries(map_tensor(*v.module.coaction));
          }
        }
      },
      d.value);
  j["dims"] = dims;
  j["tables"] = t;
  return canonical(j);
}

std::vector<std::string> fixture_names() { return {"kz2", "h2", "c2", "hh-bicomodule", "h2-bimodule-coalgebra"}; }

Document fixture(const std::string& name, std::uint64_t p, const std::optional<std::pair<Document, Companion>>& base, ModuleSide c2_side) {
  Document d;
  d.field = p;
  if (name == "kz2" || name == "h2") {
    d.value = name == "kz2" ? fixtures::kz2(p) : fixtures::h2(p);
    d.basis = {"1", "g"};
    return d;
  }
  if (name != "c2" && name != "hh-bicomodule" && name != "h2-bimodule-coalgebra")
    throw Error(ErrorKind::UsageError, "unknown fixture '" + name + "'");
  Document b;
  Companion ref;
  if (base) {
    b = base->first;
    ref = base->second;
    if (b.field != p) throw Error(ErrorKind::BadField, "base file is over a different field");
  } else {
    b = fixture("h2", p);
    ref = {"h2.qha.json", sha256_hex(emit(b))};
  }
  auto* hp = std::get_if<QuasiHopfRef>(&b.value);
  if (!hp) throw Error(ErrorKind::UsageError, "base must be a quasi-hopf file");
  QuasiHopfRef h = *hp;
  d.refs["base"] = ref;
  d.companions["base"] = std::make_shared<Document>(b);
  if (name == "c2") {
    d.value = fixtures::c2(h, c2_side);
    d.basis = {"x", "y"};
  } else if (name == "hh-bicomodule") {
    d.value = regular_bicomodule_algebra(h);
    d.basis = b.basis;
  } else {
    d.value = fixtures::regular_module_coalgebra(h, ModuleSide::bi);
    d.basis = b.basis;
  }
  return d;
}

std::string tensor_json(const Tensor& t) { return json{{"dims", t.dims()}, {"entries", entries(t)}}.dump(); }

std::string report_json(const CheckReport& r, const std::string& command) {
  json recs = json::array();
  int passed = 0, failed = 0, warned = 0;
  for (const auto& rec : r.records()) {
    json x;
    x["id"] = rec.id;
    x["pass"] = rec.pass;
    x["fatal"] = rec.fatal;
    if (!rec.witness.empty()) x["witness"] = rec.witness;
    if (!rec.note.empty()) x["note"] = rec.note;
    if (rec.lhs) x["lhs"] = json{{"dims", rec.lhs->dims()}, {"entries", entries(*rec.lhs)}};
    if (rec.rhs) x["rhs"] = json{{"dims", rec.rhs->dims()}, {"entries", entries(*rec.rhs)}};
    recs.push_back(std::move(x));
    if (rec.pass) ++passed;
    else if (rec.fatal) ++failed;
    else ++warned;
  }
  json j;
  j["command"] = command;
  j["records"] = recs;
  j["summary"] = json{{"passed", passed}, {"failed", failed}, {"warnings", warned}, {"total", passed + failed + warned}};
  j["exit"] = r.ok() ? 0 : 1;
  return canonical(j);
}

}  // namespace qhopf::io
