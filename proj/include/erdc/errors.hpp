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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace erdc {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 1-based line/column positions; `file` may be empty for in-memory input.
struct SourceSpan {
  std::string file;
  std::size_t startLine = 1;
  std::size_t startCol = 1;
  std::size_t endLine = 1;
  std::size_t endCol = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class ParseError : public Error {
 public:
  ParseError(SourceSpan span, std::string expected);

  const SourceSpan& span() const { return span_; }
  std::size_t line() const { return span_.startLine; }
  std::size_t column() const { return span_.startCol; }
  /// What the parser wanted at the error position.
  const std::string& expected() const { return expected_; }

 private:
  SourceSpan span_;
  std::string expected_;
};

/// Input is not well-formed XML.
class XmlError : public Error {
 public:
  XmlError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed XML that violates the ERD element schema.
class SchemaError : public Error {
 public:
  SchemaError(std::string element, std::string attribute, const std::string& message);
  const std::string& element() const { return element_; }
  const std::string& attribute() const { return attribute_; }

 private:
  std::string element_;
  std::string attribute_;
};

class UnsupportedRelationship : public Error {
 public:
  explicit UnsupportedRelationship(std::string relationship);
  const std::string& relationship() const { return relationship_; }

 private:
  std::string relationship_;
};

/// Lowering could not proceed (name collisions, unknown entities, ...).
class LoweringError : public Error {
 public:
  using Error::Error;
};

}  // namespace erdc
