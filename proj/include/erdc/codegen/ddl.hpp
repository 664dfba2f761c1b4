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

#include <string>

#include "erdc/lower.hpp"

namespace erdc::codegen {

/// ANSI SQL schema: one CREATE TABLE per entity (in declaration order)
/// and junction. Identifiers are double-quoted. Column types are INTEGER,
/// REAL, TEXT and BOOLEAN; dates and keys are INTEGER, user-defined types
/// TEXT. Finite defaults become DEFAULT clauses. Throws GenerationError
/// for text defaults containing NUL.
std::string generateDDL(const LoweredErd& lowered);

}  // namespace erdc::codegen
