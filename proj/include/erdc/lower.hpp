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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "erdc/erd.hpp"

namespace erdc {

/// How a binary relationship is implemented relationally. Ends are
/// normalized so that side A is the simple side (max <= 1) whenever there
/// is one.
enum class RelKind {
  SimpleSimple01_11,       // (0,1):(1,1)  A holds a non-null unique FK to B
  SimpleSimple01_01,       // (0,1):(0,1)  A holds a nullable unique FK to B
  SimpleComplexNullable,   // (0,1):(minB,maxB)  each B holds a nullable FK to A
  SimpleComplexMandatory,  // (1,1):(0,maxB)  each B holds a non-null FK to A
  ComplexComplex,          // n:m  junction relation
  Degenerate,              // an end with maximum 0; nothing to store
  Unsupported,             // both minima positive
};

std::string_view relKindName(RelKind k);

struct RelClass {
  RelKind kind = RelKind::Unsupported;
  /// Index into RelationshipDecl::ends of side A.
  std::size_t sideA = 0;
  /// Bounds of side B (how many B per A); meaningful for the
  /// simple-complex kinds.
  std::int64_t minB = 0;
  std::optional<std::int64_t> maxB;

  friend bool operator==(const RelClass&, const RelClass&) = default;
};

/// Requires exactly two ends. Exactly(n) is treated as Range(n, n).
RelClass classifyRelationship(const RelationshipDecl& rel);

/// `<target>_<role>_Key`, the column that stores a foreign key.
std::string foreignKeyName(std::string_view targetEntity, std::string_view role);

struct ForeignKeyPlacement {
  std::string holder;
  std::string target;
  std::string column;
  bool nullable = false;
  bool unique = false;
};

/// Where the FK of an FK-implemented relationship lives; nullopt for
/// junction, degenerate and unsupported kinds.
std::optional<ForeignKeyPlacement> placeForeignKey(const RelationshipDecl& rel,
                                                   const RelClass& cls);

/// Name of the implicit internal key column of every lowered entity. Not a
/// valid ERD identifier, so it cannot clash with user attributes.
inline constexpr std::string_view kInternalKeyColumn = "_key";

/// An entity after lowering. Its internal key is implicit: it is column 0
/// of the stored relation and is never part of `attributes`.
struct LoweredEntity {
  std::string name;
  std::vector<AttributeDecl> attributes;

  friend bool operator==(const LoweredEntity&, const LoweredEntity&) = default;
};

/// Relation introduced for an n:m relationship. Rows are ordered
/// (leftKey, rightKey) pairs; left is the first declared end.
struct JunctionEntity {
  std::string name;
  AttributeDecl leftKey;
  AttributeDecl rightKey;
  std::string sourceRelationship;

  friend bool operator==(const JunctionEntity&, const JunctionEntity&) = default;
};

enum class ObligationKind {
  UniqueAttr,
  ForeignKeyExists,
  MinCardinality,
  MaxCardinality,
  PairDuplicate,
};

std::string_view obligationKindName(ObligationKind k);

/// An integrity check induced by the model. For cardinality obligations
/// `entity`/`attribute` name the FK holder and column; the bound applies to
/// the number of holder rows referencing each row of the FK's target.
struct CheckObligation {
  ObligationKind kind = ObligationKind::UniqueAttr;
  std::int64_t bound = 0;  // Min/MaxCardinality only
  std::string entity;
  std::string attribute;

  friend bool operator==(const CheckObligation&, const CheckObligation&) = default;
};

std::string describeObligation(const CheckObligation& o);

/// Records how one input relationship was realized, so that generated
/// code can implement its roles.
struct RelationshipImpl {
  std::string relationship;
  RelKind kind = RelKind::Degenerate;
  /// ends[0] is side A, ends[1] side B (for junctions: left, right).
  std::array<RelEnd, 2> ends;
  /// Relation that stores the link (FK holder or junction); empty for
  /// degenerate relationships.
  std::string holder;
  /// FK column in `holder`; empty for junctions and degenerate ones.
  std::string column;

  friend bool operator==(const RelationshipImpl&, const RelationshipImpl&) = default;
};

struct LoweredErd {
  std::string name;
  std::vector<LoweredEntity> entities;
  std::vector<JunctionEntity> junctions;
  std::vector<RelationshipImpl> relationships;
  std::vector<CheckObligation> obligations;

  const LoweredEntity* findEntity(std::string_view name) const;
  const JunctionEntity* findJunction(std::string_view name) const;
  /// Attributes of an entity or junction, in stored column order after the
  /// internal key (junctions have no internal key).
  std::vector<AttributeDecl> columnsOf(std::string_view relation) const;

  friend bool operator==(const LoweredErd&, const LoweredErd&) = default;
};

/// Applies the relationship case split. Precondition: validateErd reports
/// no errors. Throws UnsupportedRelationship for a relationship whose
/// minima are both positive and LoweringError for other violations of the
/// precondition (unknown entities, FK name collisions, ...).
LoweredErd lowerErd(const ErdTerm& erd);

/// Canonical `.lowered` text, mirroring the `.erdterm` syntax.
std::string serializeLowered(const LoweredErd& lowered);
LoweredErd parseLowered(std::string_view src);

}  // namespace erdc
