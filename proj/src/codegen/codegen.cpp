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
#include "erdc/codegen/codegen.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <set>

#include <sys/wait.h>

#include "overloaded.hpp"

namespace erdc::codegen {

UnsupportedByBackend::UnsupportedByBackend(std::string backend, SymbolKind kind)
    : GenerationError("backend '" + backend + "' does not support " + std::string(symbolKindName(kind)) +
                      " symbols"),
      kind_(kind) {}

namespace {

std::string fieldTypeName(const AttributeDecl& a) {
  Param p;
  p.kind = ParamKind::Attribute;
  p.attribute = a;
  p.optional = a.nullable;
  return paramTypeName(p);
}

std::vector<ManifestEntry> typeEntries(const TypePlan& t) {
  std::vector<ManifestEntry> out;
  std::vector<std::string> fields;
  if (!t.junction) fields.push_back(t.keyType);
  for (const auto& f : t.fields) fields.push_back(fieldTypeName(f.attribute));
  out.push_back({t.name, t.junction ? SymbolKind::JunctionType : SymbolKind::EntityType, fields, {}, false, false});
  if (!t.junction) out.push_back({t.keyType, SymbolKind::KeyType, {}, {}, false, false});
  for (const auto& f : t.fields)
    out.push_back({f.getter, SymbolKind::Getter, {t.name}, fieldTypeName(f.attribute), false, false});
  for (const auto& f : t.fields)
    if (!f.setter.empty())
      out.push_back({f.setter, SymbolKind::Setter, {t.name, fieldTypeName(f.attribute)}, t.name, false, false});
  if (!t.junction) out.push_back({t.keyAccessor, SymbolKind::KeyAccessor, {t.name}, t.keyType, false, false});
  out.push_back({t.predicate, SymbolKind::Predicate, {}, "[" + t.name + "]", false, false});
  std::vector<std::string> entryParams;
  if (t.junction) {
    for (const auto& f : t.fields) entryParams.push_back(fieldTypeName(f.attribute));
  } else {
    entryParams.push_back(t.keyType);
  }
  out.push_back({t.entryPredicate, SymbolKind::EntryPredicate, entryParams, "[" + t.name + "]", false, true});
  return out;
}

}  // namespace

ManifestEntry manifestEntryOf(const Operation& op) {
  ManifestEntry e;
  e.symbol = op.symbol;
  e.kind = op.symbolKind;
  for (const auto& p : op.params) {
    e.params.push_back(paramTypeName(p));
    if (p.kind == ParamKind::KeyList) e.list = true;
  }
  e.result = op.result;
  return e;
}

std::vector<ManifestEntry> buildManifest(const AccessPlan& plan) {
  std::vector<ManifestEntry> out;
  for (const auto& t : plan.types)
    for (auto& e : typeEntries(t)) out.push_back(std::move(e));
  for (const auto& op : plan.operations) out.push_back(manifestEntryOf(op));
  return out;
}

std::vector<ObligationSites> obligationSites(const AccessPlan& plan) {
  std::vector<ObligationSites> out;
  for (std::size_t i = 0; i < plan.lowered.obligations.size(); ++i)
    out.push_back({i, plan.lowered.obligations[i], {}});
  for (const auto& op : plan.operations)
    for (std::size_t i : obligationsOf(op)) out.at(i).symbols.push_back(op.symbol);
  return out;
}

GenModule generateAccessModule(const LoweredErd& lowered, const Backend& backend) {
  const AccessPlan plan = buildAccessPlan(lowered);

  // Items per kind, in plan order.
  std::map<SymbolKind, std::vector<RenderItem>> items;
  for (const auto& t : plan.types) {
    RenderItem type{&plan, &t, nullptr, nullptr};
    items[t.junction ? SymbolKind::JunctionType : SymbolKind::EntityType].push_back(type);
    if (!t.junction) {
      items[SymbolKind::KeyType].push_back(type);
      items[SymbolKind::KeyAccessor].push_back(type);
    }
    items[SymbolKind::Predicate].push_back(type);
    items[SymbolKind::EntryPredicate].push_back(type);
    for (const auto& f : t.fields) {
      RenderItem field{&plan, &t, &f, nullptr};
      items[SymbolKind::Getter].push_back(field);
      if (!f.setter.empty()) items[SymbolKind::Setter].push_back(field);
    }
  }
  for (const auto& op : plan.operations) items[op.symbolKind].push_back({&plan, nullptr, nullptr, &op});

  for (const auto& [kind, list] : items) {
    const bool ordered =
        std::find(backend.emitOrder.begin(), backend.emitOrder.end(), kind) != backend.emitOrder.end();
    if (!list.empty() && (!backend.templates.count(kind) || !ordered))
      throw UnsupportedByBackend(backend.name, kind);
  }

  std::string text;
  if (backend.prelude) text += backend.prelude(plan);
  for (SymbolKind kind : backend.emitOrder) {
    auto it = items.find(kind);
    if (it == items.end()) continue;
    const Template& tpl = backend.templates.at(kind);
    for (const auto& item : it->second) text += tpl(item);
  }
  if (backend.postlude) text += backend.postlude(plan);

  GenModule gen;
  gen.moduleName = plan.moduleName;
  gen.backend = backend.name;
  gen.files.push_back({plan.moduleName + "/" + plan.moduleName + backend.extension, std::move(text)});
  gen.manifest = buildManifest(plan);
  gen.obligations = obligationSites(plan);
  return gen;
}

std::string renderManifestEntry(const ManifestEntry& e) {
  std::string s = e.symbol + ": " + std::string(symbolKindName(e.kind));
  switch (e.kind) {
    case SymbolKind::EntityType:
    case SymbolKind::JunctionType: {
      s += " (";
      for (std::size_t i = 0; i < e.params.size(); ++i) s += (i ? ", " : "") + e.params[i];
      s += ")";
      break;
    }
    case SymbolKind::KeyType: break;
    default: {
      s += " (";
      for (std::size_t i = 0; i < e.params.size(); ++i) s += (i ? ", " : "") + e.params[i];
      s += ") -> " + e.result;
    }
  }
  if (e.list) s += " [list]";
  if (e.internal) s += " [internal]";
  return s;
}

std::string renderManifest(const GenModule& gen) {
  std::string s = "manifest erdc/1\n";
  s += "module " + gen.moduleName + "\n";
  s += "backend " + gen.backend + "\n";
  for (const auto& f : gen.files) s += "file " + f.path + "\n";
  if (!gen.manifest.empty()) {
    s += "\nsymbols\n";
    for (const auto& e : gen.manifest) s += renderManifestEntry(e) + "\n";
  }
  if (!gen.obligations.empty()) {
    s += "\nobligations\n";
    for (const auto& o : gen.obligations) {
      s += std::to_string(o.index) + " " + describeObligation(o.obligation) + ":";
      for (const auto& sym : o.symbols) s += " " + sym;
      s += "\n";
    }
  }
  return s;
}

namespace {

void writeFile(const std::filesystem::path& p, const std::string& text) {
  std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
  out.close();
  if (!out) throw Error("cannot write " + p.string());
}

}  // namespace

void writeModule(const GenModule& gen, const std::string& ddl, const std::filesystem::path& outDir) {
  try {
    for (const auto& f : gen.files) writeFile(outDir / f.path, f.text);
    writeFile(outDir / "manifest.txt", renderManifest(gen));
    writeFile(outDir / "schema.sql", ddl);
  } catch (const std::filesystem::filesystem_error& e) {
    throw Error(e.what());
  }
}

namespace {

std::string shellQuote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  return out + "'";
}

void replaceAll(std::string& s, const std::string& from, const std::string& to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size()))
    s.replace(pos, from.size(), to);
}

}  // namespace

ProbeResult runCompileProbe(const Backend& backend, const std::filesystem::path& file,
                            const std::filesystem::path& includeDir) {
  if (!backend.compileProbe) throw GenerationError("backend '" + backend.name + "' has no compile probe");
  std::string cmd = *backend.compileProbe;
  replaceAll(cmd, "{file}", shellQuote(file.string()));
  replaceAll(cmd, "{include}", shellQuote(includeDir.string()));
  cmd += " 2>&1";
  ProbeResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) throw Error("cannot run compile probe: " + cmd);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : 128;
  return r;
}

const Backend* findBackend(std::string_view name) {
  if (name == cppBackend().name) return &cppBackend();
  return nullptr;
}

std::vector<std::string> backendNames() { return {cppBackend().name}; }

}  // namespace erdc::codegen
