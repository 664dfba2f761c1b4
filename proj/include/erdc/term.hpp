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
#include <string_view>

#include "erdc/erd.hpp"

namespace erdc {

/// Renders `erd` in the canonical `.erdterm` syntax:
///
///   ERD "Uni"
///    [Entity "Lecture" [Attribute "Id" (IntDom Nothing) Unique False]]
///    [Relationship "Teaching" [REnd "Lecturer" "taught_by" (Exactly 1), ...]]
///
/// Every entity and every relationship is printed on a single line; an ERD
/// without entities and relationships renders as `ERD "X" [] []`.
std::string serializeErd(const ErdTerm& erd);

/// Inverse of serializeErd. Whitespace between tokens is free-form.
/// Throws ParseError on malformed input.
ErdTerm parseErdTerm(std::string_view src);

}  // namespace erdc
