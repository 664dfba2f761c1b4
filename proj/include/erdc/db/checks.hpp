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

#include "erdc/db/transaction.hpp"

namespace erdc::db {

/// Yields the Row with this key; KeyNotExistsError otherwise.
Transaction getEntry(Key key, const std::string& relation);

/// UniqueError if a row other than `exceptKey` holds `value` in `column`.
/// NullV never conflicts.
Transaction uniqueCheck(Value value, const std::string& relation, const std::string& column,
                        std::optional<Key> exceptKey = std::nullopt);

/// KeyNotExistsError unless `key` names a row of `relation`. NullV passes,
/// so nullable foreign keys can be handed over unchanged.
Transaction existsDBKey(Value key, const std::string& relation);

/// Counts rows of `relation` whose `fkColumn` equals `refKey`, adds
/// `delta`, and raises MinError / MaxError when outside [min, max].
Transaction cardinalityCheck(Key refKey, const std::string& relation, const std::string& fkColumn,
                             std::int64_t min, std::optional<std::int64_t> max, int delta);

/// As above; passes when `refKey` is NullV.
Transaction cardinalityCheck(const Value& refKey, const std::string& relation,
                             const std::string& fkColumn, std::int64_t min,
                             std::optional<std::int64_t> max, int delta);

/// DuplicateKeyError if the ordered pair occurs more than `allowed` times
/// in the junction relation.
Transaction pairDuplicateCheck(const std::string& relation, Key left, Key right,
                               std::size_t allowed = 0);

}  // namespace erdc::db
