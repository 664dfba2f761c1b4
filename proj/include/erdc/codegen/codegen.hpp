/*
 * Copyright 2026 The erdc Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "erdc/codegen/plan.hpp"

namespace erdc::codegen {

/// The backend has no template for a kind the module needs.
class UnsupportedByBackend : public GenerationError {
 public:
  UnsupportedByBackend(std::string backend, SymbolKind kind);
  SymbolKind kind() const { return kind_; }

 private:
  SymbolKind kind_;
};

/// One generated symbol, described independently of the target language.
struct ManifestEntry {
  std::string symbol;
  SymbolKind kind = SymbolKind::EntityType;
  /// Parameter types, e.g. {"LecturerKey", "Int", "String", "optional Int"}.
  std::vector<std::string> params;
  std::string result;
  /// Takes a key list (relationships whose mandatory side needs partners).
  bool list = false;
  /// Not exported to application code.
  bool internal = false;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

/// Generated call sites of one obligation.
struct ObligationSites {
  std::size_t index = 0;
  CheckObligation obligation;
  std::vector<std::string> symbols;

  friend bool operator==(const ObligationSites&, const ObligationSites&) = default;
};

struct GenFile {
  std::string path;  // relative to the output directory
  std::string text;

  friend bool operator==(const GenFile&, const GenFile&) = default;
};

struct GenModule {
  std::string moduleName;
  std::string backend;
  std::vector<GenFile> files;
  std::vector<ManifestEntry> manifest;
  std::vector<ObligationSites> obligations;

  friend bool operator==(const GenModule&, const GenModule&) = default;
};

/// What a template renders: a type, a field of it, or an operation.
struct RenderItem {
  const AccessPlan* plan = nullptr;
  const TypePlan* type = nullptr;
  const FieldPlan* field = nullptr;
  const Operation* operation = nullptr;
};

using Template = std::function<std::string(const RenderItem&)>;

/// Text templates keyed by symbol kind. Kinds without a template are
/// unsupported; generating a module that needs one fails.
struct Backend {
  std::string name;
  /// File extension of the generated module, e.g. ".hpp".
  std::string extension;
  std::function<std::string(const AccessPlan&)> prelude;
  std::function<std::string(const AccessPlan&)> postlude;
  std::map<SymbolKind, Template> templates;
  /// Kinds in the order their renderings appear in the file.
  std::vector<SymbolKind> emitOrder;
  /// Shell command checking a generated file; `{file}` and `{include}`
  /// are replaced by the file path and the runtime include directory.
  std::optional<std::string> compileProbe;
};

/// The C++20 backend targeting erdc::db.
const Backend& cppBackend();

/// Registered backends by name.
const Backend* findBackend(std::string_view name);
std::vector<std::string> backendNames();

ManifestEntry manifestEntryOf(const Operation& op);
std::vector<ManifestEntry> buildManifest(const AccessPlan& plan);
std::vector<ObligationSites> obligationSites(const AccessPlan& plan);

GenModule generateAccessModule(const LoweredErd& lowered, const Backend& backend);

/// "newLecture: new-operation (LecturerKey, Int, String, optional Int) -> Lecture"
std::string renderManifestEntry(const ManifestEntry& e);
std::string renderManifest(const GenModule& gen);

/// Writes the module files, manifest.txt and schema.sql below `outDir`.
void writeModule(const GenModule& gen, const std::string& ddl, const std::filesystem::path& outDir);

struct ProbeResult {
  int exitCode = 0;
  std::string output;
  bool ok() const { return exitCode == 0; }
};

/// Runs the backend's compile probe on `file`. Throws GenerationError if
/// the backend has none.
ProbeResult runCompileProbe(const Backend& backend, const std::filesystem::path& file,
                            const std::filesystem::path& includeDir);

}  // namespace erdc::codegen
