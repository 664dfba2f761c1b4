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
#include "erdc/db/value.hpp"

#include <bit>

#include "erdc/errors.hpp"
#include "overloaded.hpp"
#include "text.hpp"

namespace erdc::db {

const char* valueKindName(ValueKind k) {
  switch (k) {
    case ValueKind::Null: return "Null";
    case ValueKind::Int: return "Int";
    case ValueKind::Float: return "Float";
    case ValueKind::Char: return "Char";
    case ValueKind::String: return "String";
    case ValueKind::Bool: return "Bool";
    case ValueKind::Date: return "Date";
    case ValueKind::Key: return "Key";
    case ValueKind::Opaque: return "Opaque";
  }
  return "?";
}

namespace {

template <class T>
const T& get(const Value::Repr& r, ValueKind want) {
  if (const T* p = std::get_if<T>(&r)) return *p;
  throw Error(std::string("value is ") + valueKindName(static_cast<ValueKind>(r.index())) +
              ", not " + valueKindName(want));
}

}  // namespace

std::int64_t Value::asInt() const { return get<std::int64_t>(repr_, ValueKind::Int); }
double Value::asFloat() const { return get<double>(repr_, ValueKind::Float); }
char32_t Value::asChar() const { return get<char32_t>(repr_, ValueKind::Char); }
const std::string& Value::asString() const { return get<std::string>(repr_, ValueKind::String); }
bool Value::asBool() const { return get<bool>(repr_, ValueKind::Bool); }
Date Value::asDate() const { return get<Date>(repr_, ValueKind::Date); }
Key Value::asKey() const { return get<Key>(repr_, ValueKind::Key); }
const Opaque& Value::asOpaque() const { return get<Opaque>(repr_, ValueKind::Opaque); }

std::string Value::debugString() const {
  return std::visit(Overloaded{
                        [](Null) { return std::string("null"); },
                        [](std::int64_t v) { return std::to_string(v); },
                        [](double v) { return text::formatDouble(v); },
                        [](char32_t v) { return text::quoteChar(v); },
                        [](const std::string& v) { return text::quoteString(v); },
                        [](bool v) { return std::string(v ? "true" : "false"); },
                        [](Date v) { return text::formatIsoDate(v.seconds); },
                        [](Key v) { return "key#" + std::to_string(v.value); },
                        [](const Opaque& v) { return v.tag + "(" + text::quoteString(v.payload) + ")"; },
                    },
                    repr_);
}

bool operator==(const Value& a, const Value& b) {
  if (a.repr_.index() != b.repr_.index()) return false;
  if (const double* x = std::get_if<double>(&a.repr_))
    return std::bit_cast<std::uint64_t>(*x) == std::bit_cast<std::uint64_t>(std::get<double>(b.repr_));
  return a.repr_ == b.repr_;
}

std::string debugString(const Row& row) {
  std::string out = "(";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ", ";
    out += row[i].debugString();
  }
  return out + ")";
}

}  // namespace erdc::db
