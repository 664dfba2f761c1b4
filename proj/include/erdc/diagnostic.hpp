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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace erdc {

enum class Severity { Error, Warning };

std::string_view severityName(Severity s);

/// Closed set of diagnostic codes. The spelling returned by codeName is
/// the stable machine-readable form printed by the CLI.
enum class DiagCode {
  InvalidIdentifier,
  DuplicateEntity,
  DuplicateRelationship,
  NameClash,
  DuplicateAttribute,
  EmptyEntity,
  PKeyNullable,
  KeyDomInInput,
  RelationshipArity,
  DuplicateRole,
  UnknownEntity,
  InvalidCardinality,
  UnsupportedBothMinPositive,
  FkNameCollision,
  PKeyDemoted,
  ExactlyZero,
  UnknownXmlElement,
  UnknownXmlAttribute,
};

std::string_view codeName(DiagCode c);

/// Where a diagnostic points: an entity or relationship, and optionally an
/// attribute or role within it.
struct DiagLocation {
  std::string declaration;
  std::string member;

  friend bool operator==(const DiagLocation&, const DiagLocation&) = default;
};

struct Diagnostic {
  Severity severity = Severity::Error;
  DiagCode code = DiagCode::InvalidIdentifier;
  std::string message;
  std::optional<DiagLocation> location;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

bool hasErrors(const std::vector<Diagnostic>& diags);

/// `severity code location message`, location rendered as `decl.member`,
/// `decl`, or `-` when absent.
std::string formatDiagnostic(const Diagnostic& d);

}  // namespace erdc
