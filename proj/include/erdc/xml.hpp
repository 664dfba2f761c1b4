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
#include <vector>

#include "erdc/diagnostic.hpp"
#include "erdc/erd.hpp"

namespace erdc {

struct XmlImport {
  ErdTerm erd;
  /// Unknown elements and attributes, which are otherwise ignored.
  std::vector<Diagnostic> warnings;
};

/// Reads the `.erdx` subset:
///
///   <erd name="Uni">
///     <entity name="Lecture">
///       <attribute name="Id" domain="Int" key="Unique"/>
///       <attribute name="Hours" domain="Int" default="4" null="true"/>
///       <attribute name="Born" domain="UserDefined" type="Data.Time"/>
///     </entity>
///     <relationship name="Teaching">
///       <end entity="Lecturer" role="taught_by" exactly="1"/>
///       <end entity="Lecture" role="teaches" min="0" max="*"/>
///     </relationship>
///   </erd>
///
/// `key` defaults to NoKey, `null` to false, `max` to "*". Throws XmlError
/// for malformed XML and SchemaError for a missing or invalid attribute.
XmlImport importXml(std::string_view src);

/// Emits the subset such that importXml returns an equal term and no
/// warnings. KeyDom attributes are written as domain="Key" target="...".
/// Throws Error for C0 control characters other than tab, LF and CR,
/// which XML 1.0 cannot carry.
std::string renderXml(const ErdTerm& erd);

}  // namespace erdc
