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
#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "erdc/codegen/codegen.hpp"
#include "erdc/codegen/ddl.hpp"
#include "erdc/db/consistency.hpp"
#include "erdc/db/snapshot.hpp"
#include "erdc/dsl.hpp"
#include "erdc/lower.hpp"
#include "erdc/term.hpp"
#include "erdc/validate.hpp"
#include "erdc/xml.hpp"

#ifndef ERDC_VERSION
#define ERDC_VERSION "0.0.0"
#endif

namespace erdc::cli {

namespace {

struct IoFailure : Error {
  using Error::Error;
};

std::string readInput(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoFailure("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Format formatOf(const std::string& path, Format requested) {
  if (requested != Format::Auto) return requested;
  const std::string ext = std::filesystem::path(path).extension().string();
  if (ext == ".erd") return Format::Dsl;
  if (ext == ".erdx" || ext == ".xml") return Format::Xml;
  if (ext == ".erdterm") return Format::Term;
  throw IoFailure("cannot tell the format of " + path + "; use --format");
}

/// Parses and validates. Diagnostics go to `diag`; nullopt on errors.
std::optional<ErdTerm> loadErd(const std::string& path, Format format, Streams io, std::ostream& diag) {
  const std::string src = readInput(path, io.in);
  std::vector<Diagnostic> diags;
  ErdTerm erd;
  switch (formatOf(path, format)) {
    case Format::Dsl: erd = parseDsl(src, path); break;
    case Format::Term: erd = parseErdTerm(src); break;
    case Format::Xml: {
      XmlImport x = importXml(src);
      erd = std::move(x.erd);
      diags = std::move(x.warnings);
      break;
    }
    case Format::Auto: break;
  }
  for (auto& d : validateErd(erd)) diags.push_back(std::move(d));
  for (const auto& d : diags) diag << formatDiagnostic(d) << "\n";
  if (hasErrors(diags)) return std::nullopt;
  return erd;
}

template <class F>
int guarded(Streams io, F body) {
  try {
    return body();
  } catch (const IoFailure& e) {
    io.err << "erdc: " << e.what() << "\n";
    return kIoFailure;
  } catch (const ParseError& e) {
    io.err << "erdc: " << e.what() << "\n";
    return kIoFailure;
  } catch (const XmlError& e) {
    io.err << "erdc: " << e.what() << "\n";
    return kIoFailure;
  } catch (const SchemaError& e) {
    io.err << "erdc: " << e.what() << "\n";
    return kIoFailure;
  } catch (const db::IOError& e) {
    io.err << "erdc: " << e.what() << "\n";
    return kIoFailure;
  } catch (const db::CorruptStoreError& e) {
    io.err << "erdc: " << e.what() << "\n";
    return kIoFailure;
  } catch (const db::SchemaMismatch& e) {
    io.err << "erdc: " << e.what() << "\n";
    return kIoFailure;
  } catch (const Error& e) {
    io.err << "erdc: " << e.what() << "\n";
    return kInvalid;
  }
}

void writeText(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << text;
  f.close();
  if (!f) throw IoFailure("cannot write " + path);
}

}  // namespace

int cmdCheck(const std::string& input, Format format, Streams io) {
  return guarded(io, [&] { return loadErd(input, format, io, io.out) ? kOk : kInvalid; });
}

int cmdLower(const std::string& input, const std::string& output, Format format, Streams io) {
  return guarded(io, [&] {
    auto erd = loadErd(input, format, io, io.err);
    if (!erd) return kInvalid;
    const std::string text = serializeLowered(lowerErd(*erd));
    if (output.empty() || output == "-")
      io.out << text;
    else
      writeText(output, text);
    return kOk;
  });
}

int cmdCompile(const std::string& input, const std::string& outDir, const std::string& backend, Format format,
               Streams io) {
  return guarded(io, [&] {
    const codegen::Backend* b = codegen::findBackend(backend);
    if (!b) {
      io.err << "erdc: unknown backend '" << backend << "'\n";
      return kIoFailure;
    }
    auto erd = loadErd(input, format, io, io.err);
    if (!erd) return kInvalid;
    const LoweredErd lowered = lowerErd(*erd);
    const codegen::GenModule gen = codegen::generateAccessModule(lowered, *b);
    const std::string ddl = codegen::generateDDL(lowered);
    try {
      codegen::writeModule(gen, ddl, outDir);
    } catch (const Error& e) {
      throw IoFailure(e.what());
    }
    const std::filesystem::path dir(outDir);
    for (const auto& f : gen.files) io.out << (dir / f.path).string() << "\n";
    io.out << (dir / "manifest.txt").string() << "\n" << (dir / "schema.sql").string() << "\n";
    return kOk;
  });
}

int cmdVerify(const std::string& lowered, const std::string& snapshot, Streams io) {
  return guarded(io, [&] {
    LoweredErd model;
    try {
      model = parseLowered(readInput(lowered, io.in));
    } catch (const Error& e) {
      throw IoFailure(e.what());
    }
    const db::Store store = db::loadStore(snapshot);
    db::requireSchema(model, store);
    const auto violations = db::checkConsistency(model, store);
    for (const auto& v : violations) io.out << db::formatViolation(v) << "\n";
    if (!violations.empty()) io.err << violations.size() << " violation(s)\n";
    return violations.empty() ? kOk : kViolations;
  });
}

int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Compiles entity-relationship models into typed data-access code", "erdc"};
  app.set_version_flag("--version", std::string("erdc ") + ERDC_VERSION);
  app.require_subcommand(1);

  std::string format = "auto";
  const std::map<std::string, Format> formats = {
      {"auto", Format::Auto}, {"dsl", Format::Dsl}, {"xml", Format::Xml}, {"term", Format::Term}};
  app.add_option("--format", format, "Input format (dsl, xml or term)")
      ->check(CLI::IsMember({"auto", "dsl", "xml", "term"}));

  std::string input;
  std::string output;
  std::string backend = "cpp";
  std::string snapshot;

  auto* check = app.add_subcommand("check", "Validate a model and print its diagnostics");
  check->add_option("file", input, "Model file or - for stdin")->required();

  auto* lower = app.add_subcommand("lower", "Write the lowered relational form");
  lower->add_option("file", input, "Model file or - for stdin")->required();
  lower->add_option("-o,--output", output, "Output file (default stdout)");

  auto* compile = app.add_subcommand("compile", "Generate the access module, manifest and schema");
  compile->add_option("file", input, "Model file or - for stdin")->required();
  compile->add_option("-o,--output", output, "Output directory")->required();
  compile->add_option("--backend", backend, "Code generation backend");

  auto* verify = app.add_subcommand("verify", "Check a store snapshot against a lowered model");
  verify->add_option("lowered", input, "Lowered model")->required();
  verify->add_option("snapshot", snapshot, "Store snapshot")->required();

  for (auto* sub : {check, lower, compile})
    sub->add_option("--format", format, "Input format (dsl, xml or term)")
        ->check(CLI::IsMember({"auto", "dsl", "xml", "term"}));

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    io.out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    io.out << "erdc " << ERDC_VERSION << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    io.err << "erdc: " << e.what() << "\n";
    return kIoFailure;
  }

  const Format f = formats.at(format);
  if (check->parsed()) return cmdCheck(input, f, io);
  if (lower->parsed()) return cmdLower(input, output, f, io);
  if (compile->parsed()) return cmdCompile(input, output, backend, f, io);
  return cmdVerify(input, snapshot, io);
}

}  // namespace erdc::cli
