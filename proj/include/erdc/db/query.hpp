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

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "erdc/db/store.hpp"

namespace erdc::db {

using RowPredicate = std::function<bool(const Row&)>;

/// Immutable relational expression. Columns of a result are named
/// "<relation>.<column>"; lookups by bare column name pick the first match.
class Query {
 public:
  struct Node;

  static Query scan(std::string relation);
  /// Rows of `left` paired with rows of `right` whose named columns are
  /// equal. An empty `on` list gives the cross product.
  static Query join(Query left, Query right,
                    std::vector<std::pair<std::string, std::string>> on = {});
  static Query filter(Query q, RowPredicate p);
  /// Same behavior as filter; kept for the constraint-style restriction.
  static Query filterC(Query q, RowPredicate p);
  /// Conjunction of column equalities; a cheap and inspectable filter.
  static Query filterEq(Query q, std::vector<std::pair<std::string, Value>> equalities);
  static Query project(Query q, std::vector<std::string> columns);

  const Node& node() const { return *node_; }

 private:
  explicit Query(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

inline Query scan(std::string relation) { return Query::scan(std::move(relation)); }

/// Join on the given column pairs (cross product when none are given).
inline Query operator*(Query l, Query r) { return Query::join(std::move(l), std::move(r)); }
inline Query operator|(Query q, RowPredicate p) { return Query::filter(std::move(q), std::move(p)); }

struct ResultSet {
  std::vector<std::string> columns;
  std::vector<Row> rows;

  /// Index of a qualified or bare column name; throws UnknownColumn.
  std::size_t index(std::string_view column) const;
};

ResultSet evaluate(const Query& q, const Store& store);

enum class QueryMode { All, One };

using QueryResult = std::variant<std::vector<Row>, std::optional<Row>>;

/// Rows in scan order; joins enumerate left rows in the outer loop.
/// Throws UnknownRelation / UnknownColumn.
QueryResult runQ(const Query& q, QueryMode mode, const Store& store);
std::vector<Row> runAll(const Query& q, const Store& store);
std::optional<Row> runOne(const Query& q, const Store& store);

}  // namespace erdc::db
