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
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "erdc/codegen/codegen.hpp"
#include "erdc/codegen/ddl.hpp"
#include "erdc/db/consistency.hpp"
#include "erdc/db/snapshot.hpp"
#include "erdc/dsl.hpp"
#include "erdc/lower.hpp"
#include "erdc/term.hpp"
#include "erdc/validate.hpp"
#include "erdc/xml.hpp"

namespace py = pybind11;

namespace {

struct Loaded {
  erdc::ErdTerm erd;
  std::vector<erdc::Diagnostic> warnings;
};

Loaded load(const std::string& text, const std::string& format, const std::string& file) {
  if (format == "dsl") return {erdc::parseDsl(text, file), {}};
  if (format == "term") return {erdc::parseErdTerm(text), {}};
  if (format == "xml") {
    erdc::XmlImport x = erdc::importXml(text);
    return {std::move(x.erd), std::move(x.warnings)};
  }
  throw py::value_error("unknown format '" + format + "'; expected dsl, xml or term");
}

std::string render(const erdc::ErdTerm& erd, const std::string& format) {
  if (format == "dsl") return erdc::renderDsl(erd);
  if (format == "term") return erdc::serializeErd(erd);
  if (format == "xml") return erdc::renderXml(erd);
  throw py::value_error("unknown format '" + format + "'; expected dsl, xml or term");
}

erdc::LoweredErd lowered(const std::string& text, const std::string& format) {
  return erdc::lowerErd(load(text, format, "").erd);
}

const erdc::codegen::Backend& backendNamed(const std::string& name) {
  const auto* b = erdc::codegen::findBackend(name);
  if (!b) throw py::value_error("unknown backend '" + name + "'");
  return *b;
}

py::handle exceptionType(py::module_& m, const char* name, py::handle base) {
  return py::exception<erdc::Error>(m, name, base).release();
}

}  // namespace

PYBIND11_MODULE(_erdc, m) {
  m.doc() = "ERD compiler: front ends, lowering, code generation and store verification.";
  m.attr("__version__") = "0.1.0";

  static py::handle error = exceptionType(m, "Error", PyExc_Exception);
  static py::handle parseError = exceptionType(m, "ParseError", error);
  static py::handle xmlError = exceptionType(m, "XmlError", error);
  static py::handle schemaError = exceptionType(m, "SchemaError", error);
  static py::handle unsupported = exceptionType(m, "UnsupportedRelationship", error);
  static py::handle generationError = exceptionType(m, "GenerationError", error);
  static py::handle corruptStore = exceptionType(m, "CorruptStoreError", error);

  py::register_exception_translator([](std::exception_ptr p) {
    auto raise = [](py::handle type, const char* what, auto&& attrs) {
      py::object exc = py::reinterpret_borrow<py::object>(type)(what);
      attrs(exc);
      PyErr_SetObject(type.ptr(), exc.ptr());
    };
    auto none = [](py::object&) {};
    try {
      if (p) std::rethrow_exception(p);
    } catch (const erdc::ParseError& e) {
      raise(parseError, e.what(), [&](py::object& x) {
        x.attr("line") = e.line();
        x.attr("column") = e.column();
        x.attr("expected") = e.expected();
      });
    } catch (const erdc::XmlError& e) {
      raise(xmlError, e.what(), [&](py::object& x) { x.attr("line") = e.line(); });
    } catch (const erdc::SchemaError& e) {
      raise(schemaError, e.what(), [&](py::object& x) {
        x.attr("element") = e.element();
        x.attr("attribute") = e.attribute();
      });
    } catch (const erdc::UnsupportedRelationship& e) {
      raise(unsupported, e.what(), [&](py::object& x) { x.attr("relationship") = e.relationship(); });
    } catch (const erdc::codegen::GenerationError& e) {
      raise(generationError, e.what(), none);
    } catch (const erdc::db::CorruptStoreError& e) {
      raise(corruptStore, e.what(), none);
    } catch (const erdc::Error& e) {
      raise(error, e.what(), none);
    }
  });

  py::class_<erdc::Diagnostic>(m, "Diagnostic")
      .def_property_readonly("severity",
                             [](const erdc::Diagnostic& d) { return std::string(erdc::severityName(d.severity)); })
      .def_property_readonly("code", [](const erdc::Diagnostic& d) { return std::string(erdc::codeName(d.code)); })
      .def_readonly("message", &erdc::Diagnostic::message)
      .def_property_readonly("declaration",
                             [](const erdc::Diagnostic& d) -> py::object {
                               if (!d.location) return py::none();
                               return py::str(d.location->declaration);
                             })
      .def_property_readonly("member",
                             [](const erdc::Diagnostic& d) -> py::object {
                               if (!d.location || d.location->member.empty()) return py::none();
                               return py::str(d.location->member);
                             })
      .def("__str__", &erdc::formatDiagnostic)
      .def("__repr__", [](const erdc::Diagnostic& d) { return "<Diagnostic " + erdc::formatDiagnostic(d) + ">"; });

  m.def(
      "convert",
      [](const std::string& text, const std::string& source, const std::string& target) {
        return render(load(text, source, "").erd, target);
      },
      py::arg("text"), py::arg("source") = "dsl", py::arg("target") = "term",
      "Reads an ERD in one format (dsl, xml, term) and renders it in another.");

  m.def(
      "check",
      [](const std::string& text, const std::string& format, const std::string& file) {
        Loaded l = load(text, format, file);
        std::vector<erdc::Diagnostic> out = std::move(l.warnings);
        for (auto& d : erdc::validateErd(l.erd)) out.push_back(std::move(d));
        return out;
      },
      py::arg("text"), py::arg("format") = "dsl", py::arg("file") = "",
      "Validates an ERD. Returns import warnings followed by validation diagnostics.");

  m.def(
      "lower", [](const std::string& text, const std::string& format) {
        return erdc::serializeLowered(lowered(text, format));
      },
      py::arg("text"), py::arg("format") = "dsl", "Lowers an ERD and returns the lowered term.");

  m.def(
      "manifest",
      [](const std::string& text, const std::string& format, const std::string& backend) {
        return erdc::codegen::renderManifest(
            erdc::codegen::generateAccessModule(lowered(text, format), backendNamed(backend)));
      },
      py::arg("text"), py::arg("format") = "dsl", py::arg("backend") = "cpp");

  m.def(
      "generate",
      [](const std::string& text, const std::string& format, const std::string& backend) {
        const auto gen = erdc::codegen::generateAccessModule(lowered(text, format), backendNamed(backend));
        py::dict files;
        for (const auto& f : gen.files) files[py::str(f.path)] = f.text;
        return files;
      },
      py::arg("text"), py::arg("format") = "dsl", py::arg("backend") = "cpp",
      "Generates the access module; returns {relative path: source text}.");

  m.def(
      "ddl", [](const std::string& text, const std::string& format) {
        return erdc::codegen::generateDDL(lowered(text, format));
      },
      py::arg("text"), py::arg("format") = "dsl");

  m.def(
      "verify",
      [](const std::string& loweredText, const std::string& snapshot) {
        const erdc::LoweredErd model = erdc::parseLowered(loweredText);
        const erdc::db::Store store = erdc::db::parseSnapshot(snapshot);
        erdc::db::requireSchema(model, store);
        std::vector<std::string> out;
        for (const auto& v : erdc::db::checkConsistency(model, store)) out.push_back(erdc::db::formatViolation(v));
        return out;
      },
      py::arg("lowered"), py::arg("snapshot"),
      "Checks a store snapshot against a lowered model; returns one line per violation.");

  m.def(
      "empty_snapshot",
      [](const std::string& loweredText) {
        return erdc::db::renderSnapshot(erdc::db::emptyStore(erdc::parseLowered(loweredText)));
      },
      py::arg("lowered"));

  m.def("backends", &erdc::codegen::backendNames);
}
