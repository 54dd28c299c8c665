// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qhopf/doi_hopf.hpp"

namespace qhopf::io {

// .qha.json structure files: UTF-8 JSON, sorted keys, sparse tables of
// entries [i, j, ..., "coefficient"] sorted by index. Structures over another
// structure reference it by relative path and SHA-256 of its bytes.
enum class FileKind { quasi_hopf, algebra, comodule_algebra, bicomodule_algebra, module_coalgebra, gauge, module };
const char* to_string(FileKind k);

struct Companion {
  std::string path;  // relative to the referencing file
  std::string sha256;
};

// module over the algebra of its "algebra" companion; the structure says which
// compatibility its coaction (by the "coalgebra" companion) satisfies
enum class ModuleStructure { plain, doi_hopf, yd, yd_doi_hopf };
const char* to_string(ModuleStructure s);

struct ModuleData {
  FiniteModule module;
  ModuleStructure structure = ModuleStructure::plain;
  DoiHopfVariant variant = DoiHopfVariant::right_left;
};

struct Gauge {
  BialgebraRef base;
  Tensor F;
};

using Value = std::variant<QuasiHopfRef, AlgebraRef, ComoduleAlgebra, BicomoduleAlgebra, ModuleCoalgebra, Gauge, ModuleData>;

struct Document {
  std::uint64_t field = 0;
  std::vector<std::string> basis;
  std::map<std::string, Companion> refs;
  std::map<std::string, std::shared_ptr<const Document>> companions;  // filled by load
  Value value;

  FileKind kind() const { return static_cast<FileKind>(value.index()); }
};

std::string sha256_hex(const std::string& bytes);
std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& bytes);

// parses and shape-validates; companions are resolved relative to `dir` and
// their hashes checked. Throws ParseError or HashMismatch.
Document parse(const std::string& text, const std::filesystem::path& dir);
Document load(const std::filesystem::path& p);
// canonical bytes
std::string emit(const Document& d);

// e0, e1, ...
std::vector<std::string> default_basis(int n, const std::string& prefix = "e");
Companion companion(const std::filesystem::path& from_dir, const std::filesystem::path& file, const std::string& bytes);

// the fixture set: kz2, h2, c2, hh-bicomodule, h2-bimodule-coalgebra.
// `base` is the document c2 lives over (h2 when empty) and `base_ref` its
// companion entry.
std::vector<std::string> fixture_names();
Document fixture(const std::string& name, std::uint64_t p, const std::optional<std::pair<Document, Companion>>& base = std::nullopt,
                 ModuleSide c2_side = ModuleSide::bi);

// JSON form of a report, deterministic for a given command
std::string report_json(const CheckReport& r, const std::string& command);
std::string tensor_json(const Tensor& t);

}  // namespace qhopf::io
