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

/// Parses the `.erd` language:
///
///   erd          ::= "erd" ident "{" (entity | relationship)* "}"
///   entity       ::= "entity" ident "{" (attr ";")* "}"
///   attr         ::= ident ":" type ["pkey"|"unique"] ["default" literal] ["null"]
///   type         ::= "Int"|"Float"|"Char"|"String"|"Bool"|"Date"|qualifiedIdent
///   relationship ::= "relationship" ident "{" (end ";")* "}"
///   end          ::= ident "as" ident card
///   card         ::= "exactly" nat | "range" nat ".." (nat | "*")
///
/// Literals: integers, decimal floats, 'c' chars, "..." strings,
/// true/false. Date defaults are quoted ISO-8601 strings; user-defined
/// defaults are quoted strings kept verbatim. `//` starts a comment.
///
/// Throws ParseError carrying the span of the offending token; `file` is
/// copied into that span.
ErdTerm parseDsl(std::string_view src, const std::string& file = {});

/// Renders an ERD in the DSL such that parseDsl gives back an equal term.
/// KeyDom attributes have no DSL spelling; rendering one throws Error.
std::string renderDsl(const ErdTerm& erd);

}  // namespace erdc
