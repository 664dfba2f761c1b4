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
#include <optional>
#include <string>
#include <vector>

#include "erdc/db/store.hpp"
#include "erdc/db/transaction.hpp"
#include "erdc/lower.hpp"

namespace erdc::db {

struct Violation {
  CheckObligation obligation;
  /// Position of the obligation in LoweredErd::obligations.
  std::size_t obligationIndex = 0;
  /// Relation of the row that fails the check. For cardinality obligations
  /// this is the referenced relation, not the FK holder.
  std::string offendingEntity;
  /// Key of the failing row; absent for junction rows.
  std::optional<Key> offendingKey;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string formatViolation(const Violation& v);

/// Stored columns of an entity (with the key column) or junction.
std::vector<Column> storeColumns(const LoweredErd& lowered, std::string_view relation);

/// Empty store with one relation per lowered entity and junction.
Store emptyStore(const LoweredErd& lowered);

/// Throws SchemaMismatch unless every lowered relation is present with the
/// expected columns. Other relations are ignored.
void requireSchema(const LoweredErd& lowered, const Store& store);

/// Scans every row of every lowered relation (entities in declaration
/// order, then junctions; rows in stored order) and reports each
/// obligation that fails for it, in obligation order.
std::vector<Violation> checkConsistency(const LoweredErd& lowered, const Store& store);

TErrorKind errorKindFor(ObligationKind k);

}  // namespace erdc::db
