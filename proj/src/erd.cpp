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
#include "erdc/erd.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>

#include "erdc/diagnostic.hpp"
#include "erdc/errors.hpp"
#include "overloaded.hpp"

namespace erdc {

bool operator==(const FloatDom& a, const FloatDom& b) {
  if (!a.defaultValue || !b.defaultValue) return a.defaultValue.has_value() == b.defaultValue.has_value();
  const double x = *a.defaultValue, y = *b.defaultValue;
  if (std::isnan(x) || std::isnan(y)) return std::isnan(x) && std::isnan(y) && std::signbit(x) == std::signbit(y);
  return std::bit_cast<std::uint64_t>(x) == std::bit_cast<std::uint64_t>(y);
}

bool hasDefault(const Domain& d) {
  return std::visit(Overloaded{
                        [](const KeyDom&) { return false; },
                        [](const auto& dom) { return dom.defaultValue.has_value(); },
                    },
                    d);
}

std::string domainName(const Domain& d) {
  return std::visit(Overloaded{
                        [](const IntDom&) -> std::string { return "Int"; },
                        [](const FloatDom&) -> std::string { return "Float"; },
                        [](const CharDom&) -> std::string { return "Char"; },
                        [](const StringDom&) -> std::string { return "String"; },
                        [](const BoolDom&) -> std::string { return "Bool"; },
                        [](const DateDom&) -> std::string { return "Date"; },
                        [](const UserDefinedDom& u) { return u.typeName; },
                        [](const KeyDom& k) { return "Key(" + k.target + ")"; },
                    },
                    d);
}

std::string_view keyClassName(KeyClass k) {
  switch (k) {
    case KeyClass::NoKey: return "NoKey";
    case KeyClass::PKey: return "PKey";
    case KeyClass::Unique: return "Unique";
  }
  return "NoKey";
}

std::int64_t Cardinality::min() const {
  return std::visit(Overloaded{
                        [](const Exactly& e) { return e.n; },
                        [](const Range& r) { return r.min; },
                    },
                    repr_);
}

std::optional<std::int64_t> Cardinality::max() const {
  return std::visit(Overloaded{
                        [](const Exactly& e) { return std::optional(e.n); },
                        [](const Range& r) { return r.max; },
                    },
                    repr_);
}

const EntityDecl* ErdTerm::findEntity(std::string_view n) const {
  for (const auto& e : entities)
    if (e.name == n) return &e;
  return nullptr;
}

bool isIdentifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

bool isQualifiedIdentifier(std::string_view s) {
  std::size_t start = 0;
  for (;;) {
    const auto dot = s.find('.', start);
    if (!isIdentifier(s.substr(start, dot - start))) return false;
    if (dot == std::string_view::npos) return true;
    start = dot + 1;
  }
}

// errors.hpp

namespace {
std::string describe(const SourceSpan& s, const std::string& expected) {
  std::string where = s.file.empty() ? "" : s.file + ":";
  return where + std::to_string(s.startLine) + ":" + std::to_string(s.startCol) +
         ": expected " + expected;
}
}  // namespace

ParseError::ParseError(SourceSpan span, std::string expected)
    : Error(describe(span, expected)), span_(std::move(span)), expected_(std::move(expected)) {}

XmlError::XmlError(std::size_t line, const std::string& message)
    : Error("XML error at line " + std::to_string(line) + ": " + message), line_(line) {}

SchemaError::SchemaError(std::string element, std::string attribute, const std::string& message)
    : Error("<" + element + ">" + (attribute.empty() ? "" : " attribute '" + attribute + "'") +
            ": " + message),
      element_(std::move(element)),
      attribute_(std::move(attribute)) {}

UnsupportedRelationship::UnsupportedRelationship(std::string relationship)
    : Error("relationship '" + relationship +
            "' has both minimum cardinalities greater than zero"),
      relationship_(std::move(relationship)) {}

// diagnostic.hpp

std::string_view severityName(Severity s) {
  return s == Severity::Error ? "error" : "warning";
}

std::string_view codeName(DiagCode c) {
  switch (c) {
    case DiagCode::InvalidIdentifier: return "INVALID_IDENTIFIER";
    case DiagCode::DuplicateEntity: return "DUPLICATE_ENTITY";
    case DiagCode::DuplicateRelationship: return "DUPLICATE_RELATIONSHIP";
    case DiagCode::NameClash: return "NAME_CLASH";
    case DiagCode::DuplicateAttribute: return "DUPLICATE_ATTRIBUTE";
    case DiagCode::EmptyEntity: return "EMPTY_ENTITY";
    case DiagCode::PKeyNullable: return "PKEY_NULLABLE";
    case DiagCode::KeyDomInInput: return "KEYDOM_IN_INPUT";
    case DiagCode::RelationshipArity: return "RELATIONSHIP_ARITY";
    case DiagCode::DuplicateRole: return "DUPLICATE_ROLE";
    case DiagCode::UnknownEntity: return "UNKNOWN_ENTITY";
    case DiagCode::InvalidCardinality: return "INVALID_CARDINALITY";
    case DiagCode::UnsupportedBothMinPositive: return "UNSUPPORTED_BOTH_MIN_POSITIVE";
    case DiagCode::FkNameCollision: return "FK_NAME_COLLISION";
    case DiagCode::PKeyDemoted: return "PKEY_DEMOTED";
    case DiagCode::ExactlyZero: return "EXACTLY_ZERO";
    case DiagCode::UnknownXmlElement: return "UNKNOWN_XML_ELEMENT";
    case DiagCode::UnknownXmlAttribute: return "UNKNOWN_XML_ATTRIBUTE";
  }
  return "UNKNOWN";
}

bool hasErrors(const std::vector<Diagnostic>& diags) {
  for (const auto& d : diags)
    if (d.severity == Severity::Error) return true;
  return false;
}

std::string formatDiagnostic(const Diagnostic& d) {
  std::string loc = "-";
  if (d.location) {
    loc = d.location->declaration;
    if (!d.location->member.empty()) loc += "." + d.location->member;
    if (loc.empty()) loc = "-";
  }
  return std::string(severityName(d.severity)) + " " + std::string(codeName(d.code)) + " " +
         loc + " " + d.message;
}

}  // namespace erdc
