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
#include "erdc/db/store.hpp"

#include <algorithm>

#include "erdc/lower.hpp"
#include "overloaded.hpp"

namespace erdc::db {

UnknownRelation::UnknownRelation(const std::string& name) : Error("unknown relation '" + name + "'") {}

UnknownColumn::UnknownColumn(const std::string& relation, const std::string& column)
    : Error("relation '" + relation + "' has no column '" + column + "'") {}

bool conforms(const Value& v, const Column& c) {
  if (v.isNull()) return c.nullable;
  const ValueKind k = v.kind();
  return std::visit(Overloaded{
                        [&](const IntDom&) { return k == ValueKind::Int; },
                        [&](const FloatDom&) { return k == ValueKind::Float; },
                        [&](const CharDom&) { return k == ValueKind::Char; },
                        [&](const StringDom&) { return k == ValueKind::String; },
                        [&](const BoolDom&) { return k == ValueKind::Bool; },
                        [&](const DateDom&) { return k == ValueKind::Date; },
                        [&](const UserDefinedDom& u) {
                          return k == ValueKind::Opaque && v.asOpaque().tag == u.typeName;
                        },
                        [&](const KeyDom&) { return k == ValueKind::Key && v.asKey().value >= 1; },
                    },
                    c.domain);
}

std::optional<std::size_t> Relation::columnIndex(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i)
    if (columns_[i].name == name) return i;
  return std::nullopt;
}

const Row* Relation::findByKey(Key k) const {
  if (!keyed_) return nullptr;
  auto it = std::lower_bound(rows_.begin(), rows_.end(), k,
                             [](const Row& r, Key key) { return r[0].asKey() < key; });
  if (it == rows_.end() || (*it)[0].asKey() != k) return nullptr;
  return &*it;
}

void Store::createRelation(const std::string& name, std::vector<Column> columns, bool keyed) {
  if (relations_.count(name)) throw SchemaMismatch("relation '" + name + "' already exists");
  if (keyed)
    columns.insert(columns.begin(), Column{std::string(kInternalKeyColumn), KeyDom{name}, false});
  relations_.emplace(name, Relation(std::move(columns), keyed));
}

void Store::putRelation(const std::string& name, Relation rel, std::int64_t nextKey) {
  if (rel.keyed_) {
    if (rel.columns_.empty() || rel.columns_[0].name != kInternalKeyColumn)
      throw SchemaMismatch("keyed relation '" + name + "' lacks the key column");
  }
  std::optional<Key> prev;
  for (const Row& r : rel.rows_) {
    checkRow(name, rel, r, 0);
    if (rel.keyed_) {
      const Key k = r[0].asKey();
      if (prev && !(*prev < k))
        throw SchemaMismatch("relation '" + name + "': keys not strictly increasing");
      if (k.value >= nextKey)
        throw SchemaMismatch("relation '" + name + "': key " + std::to_string(k.value) +
                             " not below nextKey");
      prev = k;
    }
  }
  if (nextKey < 1) throw SchemaMismatch("relation '" + name + "': nextKey must be positive");
  rel.nextKey_ = nextKey;
  relations_.insert_or_assign(name, std::move(rel));
}

bool Store::hasRelation(std::string_view name) const { return relations_.find(name) != relations_.end(); }

const Relation& Store::relation(std::string_view name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw UnknownRelation(std::string(name));
  return it->second;
}

Relation& Store::mutableRelation(std::string_view name) {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw UnknownRelation(std::string(name));
  return it->second;
}

void Store::checkRow(std::string_view relation, const Relation& rel, const Row& row,
                     std::size_t firstColumn) {
  const std::size_t want = rel.columns_.size() - firstColumn;
  if (row.size() != want)
    throw SchemaMismatch("relation '" + std::string(relation) + "' expects " + std::to_string(want) +
                         " values, got " + std::to_string(row.size()));
  for (std::size_t i = 0; i < row.size(); ++i) {
    const Column& c = rel.columns_[i + firstColumn];
    if (!conforms(row[i], c))
      throw SchemaMismatch("value " + row[i].debugString() + " does not fit column '" +
                           std::string(relation) + "." + c.name + "' of domain " +
                           domainName(c.domain) + (c.nullable ? " (nullable)" : ""));
  }
}

Key Store::insertNew(std::string_view relation, Row values) {
  Relation& rel = mutableRelation(relation);
  if (!rel.keyed_) throw SchemaMismatch("relation '" + std::string(relation) + "' has no internal key");
  checkRow(relation, rel, values, 1);
  const Key k{rel.nextKey_};
  values.insert(values.begin(), Value(k));
  rel.rows_.push_back(std::move(values));
  ++rel.nextKey_;
  return k;
}

void Store::addFact(std::string_view relation, Row row) {
  Relation& rel = mutableRelation(relation);
  checkRow(relation, rel, row, 0);
  if (!rel.keyed_) {
    rel.rows_.push_back(std::move(row));
    return;
  }
  const Key k = row[0].asKey();
  if (rel.findByKey(k))
    throw SchemaMismatch("relation '" + std::string(relation) + "' already has key " +
                         std::to_string(k.value));
  auto it = std::upper_bound(rel.rows_.begin(), rel.rows_.end(), k,
                             [](Key key, const Row& r) { return key < r[0].asKey(); });
  rel.rows_.insert(it, std::move(row));
  rel.nextKey_ = std::max(rel.nextKey_, k.value + 1);
}

std::size_t Store::deleteFact(std::string_view relation, const Row& row) {
  Relation& rel = mutableRelation(relation);
  checkRow(relation, rel, row, 0);
  return std::erase(rel.rows_, row);
}

bool Store::updateEntry(std::string_view relation, Key k, Row values) {
  Relation& rel = mutableRelation(relation);
  if (!rel.keyed_) throw SchemaMismatch("relation '" + std::string(relation) + "' has no internal key");
  checkRow(relation, rel, values, 1);
  Row* target = const_cast<Row*>(rel.findByKey(k));
  if (!target) return false;
  values.insert(values.begin(), Value(k));
  *target = std::move(values);
  return true;
}

bool Store::deleteEntry(std::string_view relation, Key k) {
  Relation& rel = mutableRelation(relation);
  if (!rel.keyed_) throw SchemaMismatch("relation '" + std::string(relation) + "' has no internal key");
  const Row* target = rel.findByKey(k);
  if (!target) return false;
  rel.rows_.erase(rel.rows_.begin() + (target - rel.rows_.data()));
  return true;
}

}  // namespace erdc::db
