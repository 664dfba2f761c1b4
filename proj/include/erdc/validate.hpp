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

#include <vector>

#include "erdc/diagnostic.hpp"
#include "erdc/erd.hpp"

namespace erdc {

/// Checks structural well-formedness and that every relationship can be
/// lowered. Never throws and never stops at the first problem: the result
/// lists every finding in declaration order (ERD name, then entities, then
/// relationships). An empty result means the ERD is accepted.
std::vector<Diagnostic> validateErd(const ErdTerm& erd);

}  // namespace erdc
