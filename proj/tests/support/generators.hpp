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
#include <random>
#include <string>
#include <vector>

#include "erdc/db/store.hpp"
#include "erdc/erd.hpp"
#include "erdc/lower.hpp"

namespace erdc::testing {

using Rng = std::mt19937_64;

struct ErdShape {
  int maxEntities = 4;
  int maxAttributes = 4;
  int maxRelationships = 4;
  /// Only finite float defaults (the DSL cannot spell the others).
  bool finiteFloats = false;
  /// Only characters XML 1.0 can carry (no C0 controls but tab, LF, CR).
  bool xmlChars = false;
  /// Relationships with other than two ends.
  bool oddArity = false;
};

int uniform(Rng& rng, int lo, int hi);
bool chance(Rng& rng, double p);

std::string randomText(Rng& rng, bool xmlChars, std::size_t maxLen = 8);
char32_t randomScalar(Rng& rng, bool xmlChars);
double randomDouble(Rng& rng, bool finite);
std::int64_t randomInt(Rng& rng);
/// Seconds inside years 1..9999.
std::int64_t randomEpoch(Rng& rng);

Domain randomDomain(Rng& rng, const ErdShape& shape);

/// Structurally arbitrary ERD over valid identifiers (not necessarily
/// passing validation).
ErdTerm randomErd(Rng& rng, const ErdShape& shape);

/// An ERD that validates without errors and lowers. Global role names
/// keep foreign key names and generated symbols distinct.
ErdTerm randomValidErd(Rng& rng, int maxEntities = 4, int maxRelationships = 4);

/// A store fitting `lowered` with at most `maxRows` rows per relation,
/// seeded with occasional integrity violations.
db::Store randomStoreFor(Rng& rng, const LoweredErd& lowered, int maxRows, double noise = 0.15);

/// A store with arbitrary relations and every value kind.
db::Store randomAnyStore(Rng& rng);

}  // namespace erdc::testing
