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
#include "erdc/db/typed.hpp"

namespace erdc::db {

Key keyOf(const Datum& d) {
  if (const auto* v = std::get_if<Value>(&d)) return v->asKey();
  if (const auto* r = std::get_if<Row>(&d); r && r->size() == 1) return (*r)[0].asKey();
  throw Error("result is not a key: " + debugString(d));
}

const Row& rowOf(const Datum& d, std::size_t columns) {
  const auto* r = std::get_if<Row>(&d);
  if (!r || r->size() != columns)
    throw Error("result is not a row of " + std::to_string(columns) + " values: " + debugString(d));
  return *r;
}

}  // namespace erdc::db
