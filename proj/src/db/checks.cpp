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
#include "erdc/db/checks.hpp"

#include "erdc/lower.hpp"

namespace erdc::db {

namespace {

std::string keyText(Key k) { return std::to_string(k.value); }

}  // namespace

Transaction getEntry(Key key, const std::string& relation) {
  const std::string column(kInternalKeyColumn);
  return bindT(queryOneT(Query::filterEq(scan(relation), {{column, Value(key)}})),
               [key, relation](const Datum& d) {
                 const auto& row = std::get<std::optional<Row>>(d);
                 if (!row)
                   return errorT({TErrorKind::KeyNotExistsError,
                                  "no entry for " + relation + " with key " + keyText(key)});
                 return returnT(*row);
               });
}

Transaction uniqueCheck(Value value, const std::string& relation, const std::string& column,
                        std::optional<Key> exceptKey) {
  if (value.isNull()) return returnT();
  Query q = Query::filterEq(scan(relation), {{column, value}});
  return bindT(queryAllT(std::move(q)), [=](const Datum& d) {
    for (const Row& r : std::get<std::vector<Row>>(d)) {
      if (exceptKey && r[0] == Value(*exceptKey)) continue;
      return errorT({TErrorKind::UniqueError, relation + "." + column + " value " +
                                                  value.debugString() + " already exists"});
    }
    return returnT();
  });
}

Transaction existsDBKey(Value key, const std::string& relation) {
  if (key.isNull()) return returnT();
  const std::string column(kInternalKeyColumn);
  return bindT(queryOneT(Query::filterEq(scan(relation), {{column, key}})), [=](const Datum& d) {
    if (std::get<std::optional<Row>>(d)) return returnT();
    return errorT({TErrorKind::KeyNotExistsError,
                   "no entry for " + relation + " with key " + key.debugString()});
  });
}

Transaction cardinalityCheck(Key refKey, const std::string& relation, const std::string& fkColumn,
                             std::int64_t min, std::optional<std::int64_t> max, int delta) {
  Query q = Query::filterEq(scan(relation), {{fkColumn, Value(refKey)}});
  return bindT(queryAllT(std::move(q)), [=](const Datum& d) {
    const auto n = static_cast<std::int64_t>(std::get<std::vector<Row>>(d).size()) + delta;
    const std::string where = relation + "." + fkColumn + " references key " + keyText(refKey) + " ";
    if (n < min)
      return errorT({TErrorKind::MinError,
                     where + std::to_string(n) + " times, minimum is " + std::to_string(min)});
    if (max && n > *max)
      return errorT({TErrorKind::MaxError,
                     where + std::to_string(n) + " times, maximum is " + std::to_string(*max)});
    return returnT();
  });
}

Transaction cardinalityCheck(const Value& refKey, const std::string& relation,
                             const std::string& fkColumn, std::int64_t min,
                             std::optional<std::int64_t> max, int delta) {
  if (refKey.isNull()) return returnT();
  return cardinalityCheck(refKey.asKey(), relation, fkColumn, min, max, delta);
}

Transaction pairDuplicateCheck(const std::string& relation, Key left, Key right, std::size_t allowed) {
  RowPredicate same = [left, right](const Row& r) {
    return r[0] == Value(left) && r[1] == Value(right);
  };
  return bindT(queryAllT(Query::filter(scan(relation), same)), [=](const Datum& d) {
    if (std::get<std::vector<Row>>(d).size() <= allowed) return returnT();
    return errorT({TErrorKind::DuplicateKeyError, relation + " already links " + keyText(left) +
                                                      " with " + keyText(right)});
  });
}

}  // namespace erdc::db
