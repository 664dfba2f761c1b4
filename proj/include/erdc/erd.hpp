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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace erdc {

// Attribute domains. Each alternative carries an optional default of the
// matching type, so a default can never disagree with its domain.
struct IntDom {
  std::optional<std::int64_t> defaultValue;
  friend bool operator==(const IntDom&, const IntDom&) = default;
};
/// Defaults compare by bit pattern, except that NaNs of equal sign are
/// equal whatever their payload.
struct FloatDom {
  std::optional<double> defaultValue;
  friend bool operator==(const FloatDom& a, const FloatDom& b);
};
struct CharDom {
  std::optional<char32_t> defaultValue;
  friend bool operator==(const CharDom&, const CharDom&) = default;
};
struct StringDom {
  std::optional<std::string> defaultValue;
  friend bool operator==(const StringDom&, const StringDom&) = default;
};
struct BoolDom {
  std::optional<bool> defaultValue;
  friend bool operator==(const BoolDom&, const BoolDom&) = default;
};
/// Dates are seconds since the Unix epoch.
struct DateDom {
  std::optional<std::int64_t> defaultValue;
  friend bool operator==(const DateDom&, const DateDom&) = default;
};
/// An application type known only by its qualified name. The default, if
/// any, is opaque text that no generated check interprets.
struct UserDefinedDom {
  std::string typeName;
  std::optional<std::string> defaultValue;
  friend bool operator==(const UserDefinedDom&, const UserDefinedDom&) = default;
};
/// Foreign key into `target`. Introduced by lowering; carries no default.
struct KeyDom {
  std::string target;
  friend bool operator==(const KeyDom&, const KeyDom&) = default;
};

using Domain = std::variant<IntDom, FloatDom, CharDom, StringDom, BoolDom,
                            DateDom, UserDefinedDom, KeyDom>;

bool hasDefault(const Domain& d);
/// "Int", "Float", ..., the user type name, or "Key(<target>)".
std::string domainName(const Domain& d);

enum class KeyClass { NoKey, PKey, Unique };

std::string_view keyClassName(KeyClass k);

struct AttributeDecl {
  std::string name;
  Domain domain;
  KeyClass keyClass = KeyClass::NoKey;
  bool nullable = false;

  friend bool operator==(const AttributeDecl&, const AttributeDecl&) = default;
};

struct EntityDecl {
  std::string name;
  std::vector<AttributeDecl> attributes;

  friend bool operator==(const EntityDecl&, const EntityDecl&) = default;
};

struct Exactly {
  std::int64_t n = 0;
  friend bool operator==(const Exactly&, const Exactly&) = default;
};
struct Range {
  std::int64_t min = 0;
  std::optional<std::int64_t> max;  // nullopt is unbounded
  friend bool operator==(const Range&, const Range&) = default;
};

class Cardinality {
 public:
  Cardinality() = default;
  Cardinality(Exactly e) : repr_(e) {}
  Cardinality(Range r) : repr_(r) {}

  std::int64_t min() const;
  std::optional<std::int64_t> max() const;
  bool isExactly() const { return std::holds_alternative<Exactly>(repr_); }
  const std::variant<Exactly, Range>& repr() const { return repr_; }

  /// At most one partner (max <= 1).
  bool isSimple() const {
    auto m = max();
    return m.has_value() && *m <= 1;
  }

  /// Structural equality: Exactly 1 and Range 1 (Just 1) differ here even
  /// though they are semantically identical. Use sameBounds for the latter.
  friend bool operator==(const Cardinality&, const Cardinality&) = default;
  bool sameBounds(const Cardinality& other) const {
    return min() == other.min() && max() == other.max();
  }

 private:
  std::variant<Exactly, Range> repr_{Range{0, std::nullopt}};
};

struct RelEnd {
  std::string entity;
  std::string role;
  Cardinality cardinality;

  friend bool operator==(const RelEnd&, const RelEnd&) = default;
};

/// Binary relationships only; other arities are representable so that the
/// front ends can report them, and validateErd rejects them.
struct RelationshipDecl {
  std::string name;
  std::vector<RelEnd> ends;

  friend bool operator==(const RelationshipDecl&, const RelationshipDecl&) = default;
};

struct ErdTerm {
  std::string name;
  std::vector<EntityDecl> entities;
  std::vector<RelationshipDecl> relationships;

  const EntityDecl* findEntity(std::string_view name) const;

  friend bool operator==(const ErdTerm&, const ErdTerm&) = default;
};

/// ASCII letter followed by letters, digits, or underscores.
bool isIdentifier(std::string_view s);

/// Identifiers joined by '.', e.g. "Data.Time.ClockTime".
bool isQualifiedIdentifier(std::string_view s);

}  // namespace erdc
