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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "erdc/errors.hpp"
#include "erdc/lower.hpp"

namespace erdc::codegen {

/// The model cannot be turned into an access module, e.g. because two
/// generated symbols would share a name.
class GenerationError : public Error {
 public:
  using Error::Error;
};

enum class SymbolKind {
  EntityType,
  KeyType,
  JunctionType,
  Getter,
  Setter,
  KeyAccessor,
  Predicate,
  EntryPredicate,
  GetOperation,
  NewOperation,
  UpdateOperation,
  LinkOperation,
  Role,
  CheckEntry,
  CheckEntity,
  CheckAll,
};

/// Manifest spelling, e.g. "new-operation".
std::string_view symbolKindName(SymbolKind k);
inline constexpr std::size_t kSymbolKindCount = 16;

enum class ParamKind {
  ForeignKey,          // key of another entity, stored in `column`
  OptionalForeignKey,  // same, may be absent (null)
  KeyList,             // keys of partner entities linked after insertion
  Attribute,           // value of `column`; optional params may be absent
  Entity,              // a whole entity row including its key
  EntityKey,           // key of `entity`
};

struct Param {
  std::string name;
  ParamKind kind = ParamKind::Attribute;
  /// Entity whose key or row the parameter carries (key and entity kinds).
  std::string entity;
  /// Attribute parameters: the declaration (its domain holds the default).
  AttributeDecl attribute;
  /// Column filled by the parameter on insert; empty for lists.
  std::string column;
  bool optional = false;

  friend bool operator==(const Param&, const Param&) = default;
};

/// Manifest rendering of a parameter type, e.g. "LecturerKey",
/// "optional Int", "[StudentKey]".
std::string paramTypeName(const Param& p);

/// Where an instruction takes a value from.
struct Operand {
  enum class Source {
    Param,       // effective value of parameter `index` (defaults applied)
    ParamField,  // column `field` of entity parameter `index`
    Field,       // column `field` of the current row
    OldField,    // column `field` of the current row as last loaded
    Key,         // key of the current row
    NewKey,      // key allocated by Insert
    Element,     // current element of the enclosing ForEach
  };
  Source source = Source::Param;
  std::size_t index = 0;
  std::string field;

  static Operand param(std::size_t i) { return {Source::Param, i, {}}; }
  static Operand paramField(std::size_t i, std::string f) { return {Source::ParamField, i, std::move(f)}; }
  static Operand fieldOf(std::string f) { return {Source::Field, 0, std::move(f)}; }
  static Operand oldField(std::string f) { return {Source::OldField, 0, std::move(f)}; }
  static Operand key() { return {Source::Key, 0, {}}; }
  static Operand newKey() { return {Source::NewKey, 0, {}}; }
  static Operand element() { return {Source::Element, 0, {}}; }

  friend bool operator==(const Operand&, const Operand&) = default;
};

std::string describeOperand(const Operand& o);

enum class CheckKind { Unique, Exists, Cardinality, PairDuplicate };

/// One integrity check, realized by the runtime's generic checks. A null
/// operand value makes Unique, Exists and Cardinality checks pass.
struct Check {
  CheckKind kind = CheckKind::Unique;
  /// Index into LoweredErd::obligations.
  std::size_t obligation = 0;
  /// Unique: entity; Exists: target; Cardinality: FK holder; PairDuplicate:
  /// junction.
  std::string relation;
  /// Unique: attribute; Cardinality: FK column.
  std::string column;
  Operand value;
  /// PairDuplicate: right key (value is the left key).
  Operand value2;
  std::int64_t min = 0;
  std::optional<std::int64_t> max;
  /// Pending change to the counted references (Cardinality).
  int delta = 0;
  /// Unique: ignore the current row.
  bool excludeSelf = false;
  /// PairDuplicate: occurrences tolerated (1 when the pair is stored).
  std::size_t allowed = 0;

  friend bool operator==(const Check&, const Check&) = default;
};

/// Inserts a row built from the parameters; FK columns without a
/// parameter are null. Sets the current row and NewKey.
struct Insert {
  std::string relation;
  friend bool operator==(const Insert&, const Insert&) = default;
};

/// getEntry; sets the current and the old row.
struct Load {
  std::string relation;
  Operand key;
  friend bool operator==(const Load&, const Load&) = default;
};

/// Changes a column of the current row (in memory).
struct Assign {
  std::string field;
  Operand value;
  friend bool operator==(const Assign&, const Assign&) = default;
};

/// updateEntry of the current row.
struct Write {
  std::string relation;
  friend bool operator==(const Write&, const Write&) = default;
};

/// addFact of a (left, right) junction row.
struct AddPair {
  std::string relation;
  Operand left;
  Operand right;
  friend bool operator==(const AddPair&, const AddPair&) = default;
};

struct ForEach;

using Instr = std::variant<Check, Insert, Load, Assign, Write, AddPair, ForEach>;

/// Runs `body` for each element of list parameter `param`.
struct ForEach {
  std::size_t param = 0;
  std::vector<Instr> body;
  friend bool operator==(const ForEach&, const ForEach&) = default;
};

enum class OpKind { Get, New, Update, Link, NewPair, CheckEntry, CheckRelation, CheckAll, Role };

/// Role lookups: keys of `resultEntity` related to the parameter key.
struct RoleLookup {
  enum class Via {
    HolderScan,  // result rows hold FK `column` pointing at the argument
    OwnColumn,   // the argument row holds FK `column` pointing at results
    Junction,    // rows of `relation` with `column` = argument, read `otherColumn`
    None,        // degenerate relationship; always empty
  };
  Via via = Via::None;
  std::string relation;
  std::string column;
  std::string otherColumn;
  friend bool operator==(const RoleLookup&, const RoleLookup&) = default;
};

/// An exported transaction or query of the access module.
struct Operation {
  OpKind kind = OpKind::Get;
  SymbolKind symbolKind = SymbolKind::GetOperation;
  std::string symbol;
  /// Entity or junction the operation belongs to; empty for CheckAll.
  std::string relation;
  std::vector<Param> params;
  /// Manifest result type, e.g. "Lecture", "()", "[LectureKey]".
  std::string result;
  std::vector<Instr> body;
  /// CheckAll: check operations in order.
  std::vector<std::string> calls;
  /// Role only.
  RoleLookup role;
  std::string resultEntity;
  /// Relationship that induced the operation (Link, NewPair, Role, and
  /// New operations with list parameters note theirs in the manifest).
  std::string relationship;

  friend bool operator==(const Operation&, const Operation&) = default;
};

/// Field of an entity or junction type: the stored column.
struct FieldPlan {
  AttributeDecl attribute;
  /// KeyDom columns: the referenced entity.
  std::string keyTarget;
  std::string getter;
  /// Empty for FK columns, which only change through link operations.
  std::string setter;

  friend bool operator==(const FieldPlan&, const FieldPlan&) = default;
};

struct TypePlan {
  std::string name;
  bool junction = false;
  /// Key type (entities only).
  std::string keyType;
  std::string keyAccessor;
  std::string predicate;
  std::string entryPredicate;
  std::vector<FieldPlan> fields;

  friend bool operator==(const TypePlan&, const TypePlan&) = default;
};

/// Everything a backend renders: one module per lowered ERD.
struct AccessPlan {
  std::string moduleName;
  LoweredErd lowered;
  std::vector<TypePlan> types;
  std::vector<Operation> operations;

  const Operation* find(std::string_view symbol) const;
  const TypePlan* findType(std::string_view name) const;

  friend bool operator==(const AccessPlan&, const AccessPlan&) = default;
};

/// Builds the plan. Throws GenerationError on symbol collisions.
AccessPlan buildAccessPlan(const LoweredErd& lowered);

/// Generated name helpers, e.g. entity "Lecture" and attribute "Title"
/// give "lectureTitle".
std::string lowerFirst(std::string_view s);
std::string upperFirst(std::string_view s);

/// Obligation indices checked anywhere in `op`, ascending and unique.
std::vector<std::size_t> obligationsOf(const Operation& op);

}  // namespace erdc::codegen
