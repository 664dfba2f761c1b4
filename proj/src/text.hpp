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

// Lexical helpers shared by the term, DSL, lowered and snapshot formats.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "erdc/errors.hpp"

namespace erdc::text {

void appendUtf8(std::string& out, char32_t cp);

/// Decodes one scalar value starting at `pos`, advancing it. Returns nullopt
/// on an invalid or truncated sequence (and leaves `pos` unchanged).
std::optional<char32_t> decodeUtf8(std::string_view s, std::size_t& pos);

/// Exactly one UTF-8 encoded scalar value, or nullopt.
std::optional<char32_t> singleScalar(std::string_view s);

bool isScalarValue(char32_t cp);

/// Shortest decimal form that reads back to the same double. Finite values
/// always contain '.', 'e' so they cannot be mistaken for integers.
std::string formatDouble(double v);
std::optional<double> parseDouble(std::string_view s);
std::optional<std::int64_t> parseInt(std::string_view s);

/// Haskell/Curry style literals: "..." and '.' with \\ \" \' \n \t \r and
/// decimal \NNN escapes for the remaining control characters.
std::string quoteString(std::string_view s);
std::string quoteChar(char32_t c);

/// ISO-8601 "YYYY-MM-DDTHH:MM:SSZ" for an epoch second count.
std::string formatIsoDate(std::int64_t epochSeconds);
/// Accepts YYYY-MM-DD, YYYY-MM-DDTHH:MM[:SS], with optional Z or +HH:MM /
/// -HH:MM offset (no offset means UTC).
std::optional<std::int64_t> parseIsoDate(std::string_view s);

/// Cursor over source text with 1-based line/column tracking.
class Scanner {
 public:
  explicit Scanner(std::string_view src, std::string file = {})
      : src_(src), file_(std::move(file)) {}

  bool atEnd() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  char get();
  bool consume(char c);
  bool consume(std::string_view s);
  std::size_t pos() const { return pos_; }
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

  /// Skips whitespace and, if enabled, `//` line comments.
  void skipSpace(bool lineComments = false);

  /// Letters, digits and underscores starting with a letter. Empty if the
  /// cursor is not at an identifier start.
  std::string_view identifier();

  /// Reads a "..." literal at the cursor (which must be at '"').
  std::string stringLiteral();
  /// Reads a '.' literal at the cursor (which must be at '\'').
  char32_t charLiteral();

  /// Optional '-' followed by digits with optional fraction/exponent.
  /// Returns the raw lexeme; `isFloat` reports whether '.'/'e' occurred.
  /// A '.' is only part of the number when followed by a digit, so `0..5`
  /// lexes as 0, .., 5.
  std::string_view number(bool& isFloat);

  [[noreturn]] void fail(const std::string& expected) const;
  [[noreturn]] void failAt(std::size_t line, std::size_t col, const std::string& expected) const;

 private:
  char32_t escape();

  std::string_view src_;
  std::string file_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace erdc::text
