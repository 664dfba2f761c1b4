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
#include "erdc/db/consistency.hpp"

#include <map>

#include "overloaded.hpp"

namespace erdc::db {

std::string formatViolation(const Violation& v) {
  std::string where = v.offendingEntity;
  if (v.offendingKey) where += "#" + std::to_string(v.offendingKey->value);
  return describeObligation(v.obligation) + " at " + where + ": " + v.message;
}

namespace {

Domain withoutDefault(const Domain& d) {
  return std::visit(Overloaded{
                        [](const UserDefinedDom& u) -> Domain { return UserDefinedDom{u.typeName, std::nullopt}; },
                        [](const KeyDom& k) -> Domain { return k; },
                        [](const auto& x) -> Domain { return std::decay_t<decltype(x)>{}; },
                    },
                    d);
}

std::string keyTarget(const Column& c) {
  if (const auto* k = std::get_if<KeyDom>(&c.domain)) return k->target;
  return {};
}

}  // namespace

std::vector<Column> storeColumns(const LoweredErd& lowered, std::string_view relation) {
  std::vector<Column> cols;
  if (lowered.findEntity(relation))
    cols.push_back(Column{std::string(kInternalKeyColumn), KeyDom{std::string(relation)}, false});
  else if (!lowered.findJunction(relation))
    throw SchemaMismatch("model has no relation '" + std::string(relation) + "'");
  for (const auto& a : lowered.columnsOf(relation))
    cols.push_back(Column{a.name, withoutDefault(a.domain), a.nullable});
  return cols;
}

Store emptyStore(const LoweredErd& lowered) {
  Store s;
  for (const auto& e : lowered.entities) {
    auto cols = storeColumns(lowered, e.name);
    cols.erase(cols.begin());
    s.createRelation(e.name, std::move(cols), true);
  }
  for (const auto& j : lowered.junctions) s.createRelation(j.name, storeColumns(lowered, j.name), false);
  return s;
}

void requireSchema(const LoweredErd& lowered, const Store& store) {
  auto check = [&](const std::string& name, bool keyed) {
    if (!store.hasRelation(name)) throw SchemaMismatch("store lacks relation '" + name + "'");
    const Relation& rel = store.relation(name);
    if (rel.keyed() != keyed)
      throw SchemaMismatch("relation '" + name + (keyed ? "' must" : "' must not") + " be keyed");
    if (rel.columns() != storeColumns(lowered, name))
      throw SchemaMismatch("relation '" + name + "' has columns that differ from the model");
  };
  for (const auto& e : lowered.entities) check(e.name, true);
  for (const auto& j : lowered.junctions) check(j.name, false);
}

TErrorKind errorKindFor(ObligationKind k) {
  switch (k) {
    case ObligationKind::UniqueAttr: return TErrorKind::UniqueError;
    case ObligationKind::ForeignKeyExists: return TErrorKind::KeyNotExistsError;
    case ObligationKind::MinCardinality: return TErrorKind::MinError;
    case ObligationKind::MaxCardinality: return TErrorKind::MaxError;
    case ObligationKind::PairDuplicate: return TErrorKind::DuplicateKeyError;
  }
  return TErrorKind::UserDefinedError;
}

std::vector<Violation> checkConsistency(const LoweredErd& lowered, const Store& store) {
  requireSchema(lowered, store);
  std::vector<Violation> out;

  auto column = [&](const std::string& rel, const std::string& col) {
    const Relation& r = store.relation(rel);
    const auto i = r.columnIndex(col);
    if (!i) throw SchemaMismatch("relation '" + rel + "' has no column '" + col + "'");
    return *i;
  };

  // For cardinality obligations: how often each key is referenced.
  std::vector<std::map<std::int64_t, std::int64_t>> refCounts(lowered.obligations.size());
  std::vector<std::string> refTarget(lowered.obligations.size());
  for (std::size_t i = 0; i < lowered.obligations.size(); ++i) {
    const auto& o = lowered.obligations[i];
    if (o.kind != ObligationKind::MinCardinality && o.kind != ObligationKind::MaxCardinality) continue;
    const std::size_t c = column(o.entity, o.attribute);
    refTarget[i] = keyTarget(store.relation(o.entity).columns()[c]);
    for (const Row& r : store.relation(o.entity).rows())
      if (!r[c].isNull()) ++refCounts[i][r[c].asKey().value];
  }

  auto scanRelation = [&](const std::string& name, bool keyed) {
    const Relation& rel = store.relation(name);
    for (const Row& row : rel.rows()) {
      const std::optional<Key> key = keyed ? std::optional<Key>(row[0].asKey()) : std::nullopt;
      for (std::size_t i = 0; i < lowered.obligations.size(); ++i) {
        const auto& o = lowered.obligations[i];
        auto report = [&](std::string message) {
          out.push_back(Violation{o, i, name, key, std::move(message)});
        };
        switch (o.kind) {
          case ObligationKind::UniqueAttr: {
            if (o.entity != name) break;
            const std::size_t c = column(name, o.attribute);
            if (row[c].isNull()) break;
            for (const Row& other : rel.rows()) {
              if (&other != &row && other[c] == row[c]) {
                report("value " + row[c].debugString() + " also occurs in another row");
                break;
              }
            }
            break;
          }
          case ObligationKind::ForeignKeyExists: {
            if (o.entity != name) break;
            const std::size_t c = column(name, o.attribute);
            if (row[c].isNull()) break;
            const std::string target = keyTarget(rel.columns()[c]);
            if (!store.relation(target).findByKey(row[c].asKey()))
              report("no entry for " + target + " with key " + std::to_string(row[c].asKey().value));
            break;
          }
          case ObligationKind::PairDuplicate: {
            if (o.entity != name) break;
            std::size_t n = 0;
            for (const Row& other : rel.rows()) n += (other[0] == row[0] && other[1] == row[1]);
            if (n > 1) report("pair occurs " + std::to_string(n) + " times");
            break;
          }
          case ObligationKind::MinCardinality:
          case ObligationKind::MaxCardinality: {
            if (refTarget[i] != name || !key) break;
            const auto it = refCounts[i].find(key->value);
            const std::int64_t n = it == refCounts[i].end() ? 0 : it->second;
            const bool isMin = o.kind == ObligationKind::MinCardinality;
            if (isMin ? n < o.bound : n > o.bound)
              report("referenced by " + std::to_string(n) + " " + o.entity + " rows, " +
                     (isMin ? "minimum" : "maximum") + " is " + std::to_string(o.bound));
            break;
          }
        }
      }
    }
  };
  for (const auto& e : lowered.entities) scanRelation(e.name, true);
  for (const auto& j : lowered.junctions) scanRelation(j.name, false);
  return out;
}

}  // namespace erdc::db
