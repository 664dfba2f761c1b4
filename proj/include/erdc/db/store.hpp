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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "erdc/db/value.hpp"
#include "erdc/erd.hpp"
#include "erdc/errors.hpp"

namespace erdc::db {

class UnknownRelation : public Error {
 public:
  explicit UnknownRelation(const std::string& name);
};

class UnknownColumn : public Error {
 public:
  UnknownColumn(const std::string& relation, const std::string& column);
};

/// A row or value does not fit a relation's schema, or a store does not
/// fit a model.
class SchemaMismatch : public Error {
 public:
  using Error::Error;
};

/// Schema column. Domain defaults play no role in the store.
struct Column {
  std::string name;
  Domain domain;
  bool nullable = false;

  friend bool operator==(const Column&, const Column&) = default;
};

/// Whether `v` may be stored in `c`: NullV only when nullable, otherwise
/// the value kind must match the domain (OpaqueV tags must name the
/// user-defined type).
bool conforms(const Value& v, const Column& c);

/// Rows of one named relation. A keyed relation has the internal key as
/// column 0 and keeps its rows in ascending key order.
class Relation {
 public:
  Relation() = default;
  Relation(std::vector<Column> columns, bool keyed) : columns_(std::move(columns)), keyed_(keyed) {}

  const std::vector<Column>& columns() const { return columns_; }
  bool keyed() const { return keyed_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::int64_t nextKey() const { return nextKey_; }

  std::optional<std::size_t> columnIndex(std::string_view name) const;
  const Row* findByKey(Key k) const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  friend class Store;
  std::vector<Column> columns_;
  bool keyed_ = false;
  std::vector<Row> rows_;
  std::int64_t nextKey_ = 1;
};

/// Named relations. Mutators validate against the schema and throw
/// SchemaMismatch / UnknownRelation; they are the primitive effects that
/// transactions are built from.
class Store {
 public:
  /// Creates an empty relation. For keyed relations the internal key column
  /// is prepended to `columns`.
  void createRelation(const std::string& name, std::vector<Column> columns, bool keyed);
  /// Installs a relation wholesale (snapshot loading). Validates rows.
  void putRelation(const std::string& name, Relation rel, std::int64_t nextKey);

  bool hasRelation(std::string_view name) const;
  const Relation& relation(std::string_view name) const;
  const std::map<std::string, Relation, std::less<>>& relations() const { return relations_; }

  /// Inserts values (without the key) under a fresh key and returns it.
  Key insertNew(std::string_view relation, Row values);
  /// Inserts a complete row. For keyed relations the row carries its key,
  /// which must be unused and positive; nextKey advances past it.
  void addFact(std::string_view relation, Row row);
  /// Removes every row equal to `row`; returns how many were removed.
  std::size_t deleteFact(std::string_view relation, const Row& row);
  /// Replaces the non-key columns of the row with key `k`. False if absent.
  bool updateEntry(std::string_view relation, Key k, Row values);
  /// Removes the row with key `k`. False if absent. Keys are never reused.
  bool deleteEntry(std::string_view relation, Key k);

  friend bool operator==(const Store&, const Store&) = default;

 private:
  Relation& mutableRelation(std::string_view name);
  static void checkRow(std::string_view relation, const Relation& rel, const Row& row,
                       std::size_t firstColumn);

  std::map<std::string, Relation, std::less<>> relations_;
};

}  // namespace erdc::db
