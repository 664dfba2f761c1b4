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

// Building blocks of the Curry-style term syntax, shared by the `.erdterm`
// and `.lowered` formats.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "erdc/erd.hpp"
#include "text.hpp"

namespace erdc::term {

std::string renderDomain(const Domain& d);
std::string renderAttribute(const AttributeDecl& a);
std::string renderCardinality(const Cardinality& c);
std::string renderInt(std::int64_t v);  // negative values in parentheses

class TermParser {
 public:
  explicit TermParser(std::string_view src) : sc_(src) {}

  void expectWord(std::string_view word);
  bool peekWord(std::string_view word);
  void expect(char c);
  bool accept(char c);
  std::string string();
  std::int64_t integer();
  std::int64_t natural();
  double floating();
  bool boolean();

  /// `[]` or `[item, item, ...]`.
  template <class F>
  void list(F&& item) {
    expect('[');
    if (accept(']')) return;
    do {
      item();
    } while (accept(','));
    expect(']');
  }

  Domain domain();
  AttributeDecl attribute();
  Cardinality cardinality();
  KeyClass keyClass();

  void finish();
  [[noreturn]] void fail(const std::string& expected) { sc_.fail(expected); }

 private:
  std::string_view word();

  text::Scanner sc_;
};

}  // namespace erdc::term
