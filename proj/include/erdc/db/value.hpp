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

#include <concepts>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace erdc::db {

/// Internal surrogate key. Issued keys start at 1; 0 is never issued.
struct Key {
  std::int64_t value = 0;
  friend auto operator<=>(const Key&, const Key&) = default;
};

/// Seconds since the Unix epoch.
struct Date {
  std::int64_t seconds = 0;
  friend auto operator<=>(const Date&, const Date&) = default;
};

/// Value of a user-defined domain: the qualified type name and an
/// uninterpreted payload.
struct Opaque {
  std::string tag;
  std::string payload;
  friend bool operator==(const Opaque&, const Opaque&) = default;
};

struct Null {
  friend bool operator==(Null, Null) { return true; }
};

enum class ValueKind { Null, Int, Float, Char, String, Bool, Date, Key, Opaque };

const char* valueKindName(ValueKind k);

class Value {
 public:
  using Repr = std::variant<Null, std::int64_t, double, char32_t, std::string, bool, Date, Key, Opaque>;

  Value() = default;
  Value(Null) {}
  template <std::integral T>
    requires(!std::same_as<T, bool> && !std::same_as<T, char32_t> && !std::same_as<T, char>)
  Value(T v) : repr_(static_cast<std::int64_t>(v)) {}
  Value(bool v) : repr_(v) {}
  Value(double v) : repr_(v) {}
  Value(char32_t v) : repr_(v) {}
  Value(std::string v) : repr_(std::move(v)) {}
  Value(const char* v) : repr_(std::string(v)) {}
  Value(Date v) : repr_(v) {}
  Value(Key v) : repr_(v) {}
  Value(Opaque v) : repr_(std::move(v)) {}

  ValueKind kind() const { return static_cast<ValueKind>(repr_.index()); }
  bool isNull() const { return kind() == ValueKind::Null; }

  // Accessors throw erdc::Error when the value has another kind.
  std::int64_t asInt() const;
  double asFloat() const;
  char32_t asChar() const;
  const std::string& asString() const;
  bool asBool() const;
  Date asDate() const;
  Key asKey() const;
  const Opaque& asOpaque() const;

  const Repr& repr() const { return repr_; }

  /// Human-readable form for messages, e.g. 42, "text", key#3, null.
  std::string debugString() const;

  /// Floats compare by bit pattern, so NaN equals itself and -0.0 differs
  /// from 0.0; everything else compares by value.
  friend bool operator==(const Value& a, const Value& b);

 private:
  Repr repr_;
};

using Row = std::vector<Value>;

std::string debugString(const Row& row);

}  // namespace erdc::db
