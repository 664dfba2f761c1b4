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

#include <string_view>
#include <variant>
#include <vector>

#include "erdc/codegen/plan.hpp"
#include "erdc/db/transaction.hpp"

namespace erdc::codegen {

/// Argument of an interpreted operation: a single value (keys, attributes;
/// NullV for an absent optional), or a vector holding a key list or a
/// whole row, depending on the parameter kind.
using Arg = std::variant<db::Value, std::vector<db::Value>>;

/// Transaction with the behavior the backends render for `symbol`.
/// Get and New operations yield the entity Row, roles a list of one-column
/// key rows, everything else Unit. Throws erdc::Error for an unknown symbol
/// or ill-typed arguments. `plan` must outlive the transaction.
db::Transaction interpret(const AccessPlan& plan, std::string_view symbol, std::vector<Arg> args);

/// Default of an attribute's domain as a stored value, or NullV.
db::Value defaultValue(const AttributeDecl& a);

}  // namespace erdc::codegen
