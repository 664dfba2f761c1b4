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
#include "erdc/codegen/ddl.hpp"

#include <cmath>

#include "erdc/codegen/plan.hpp"
#include "overloaded.hpp"
#include "text.hpp"

namespace erdc::codegen {

namespace {

std::string quoteIdent(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string quoteText(std::string_view s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\0') throw GenerationError("NUL cannot appear in an SQL string literal");
    if (c == '\'') out += '\'';
    out += c;
  }
  return out + "'";
}

std::string sqlType(const Domain& d) {
  return std::visit(Overloaded{
                        [](const IntDom&) { return "INTEGER"; },
                        [](const FloatDom&) { return "REAL"; },
                        [](const CharDom&) { return "TEXT"; },
                        [](const StringDom&) { return "TEXT"; },
                        [](const BoolDom&) { return "BOOLEAN"; },
                        [](const DateDom&) { return "INTEGER"; },
                        [](const UserDefinedDom&) { return "TEXT"; },
                        [](const KeyDom&) { return "INTEGER"; },
                    },
                    d);
}

std::optional<std::string> sqlDefault(const Domain& d) {
  using R = std::optional<std::string>;
  return std::visit(
      Overloaded{
          [](const IntDom& x) -> R {
            if (!x.defaultValue) return std::nullopt;
            return std::to_string(*x.defaultValue);
          },
          [](const FloatDom& x) -> R {
            if (!x.defaultValue || !std::isfinite(*x.defaultValue)) return std::nullopt;
            return text::formatDouble(*x.defaultValue);
          },
          [](const CharDom& x) -> R {
            if (!x.defaultValue) return std::nullopt;
            std::string s;
            text::appendUtf8(s, *x.defaultValue);
            return quoteText(s);
          },
          [](const StringDom& x) -> R {
            if (!x.defaultValue) return std::nullopt;
            return quoteText(*x.defaultValue);
          },
          [](const BoolDom& x) -> R {
            if (!x.defaultValue) return std::nullopt;
            return *x.defaultValue ? "TRUE" : "FALSE";
          },
          [](const DateDom& x) -> R {
            if (!x.defaultValue) return std::nullopt;
            return std::to_string(*x.defaultValue);
          },
          [](const UserDefinedDom& x) -> R {
            if (!x.defaultValue) return std::nullopt;
            return quoteText(*x.defaultValue);
          },
          [](const KeyDom&) -> R { return std::nullopt; },
      },
      d);
}

std::string columnLine(const AttributeDecl& a) {
  std::string s = "  " + quoteIdent(a.name) + " " + sqlType(a.domain);
  if (!a.nullable) s += " NOT NULL";
  if (a.keyClass != KeyClass::NoKey) s += " UNIQUE";
  if (auto d = sqlDefault(a.domain)) s += " DEFAULT " + *d;
  return s;
}

std::string table(const std::string& name, bool keyed, const std::vector<AttributeDecl>& cols,
                  const std::vector<std::string>& extra) {
  std::vector<std::string> lines;
  if (keyed) lines.push_back("  " + quoteIdent(kInternalKeyColumn) + " INTEGER PRIMARY KEY");
  for (const auto& a : cols) lines.push_back(columnLine(a));
  for (const auto& e : extra) lines.push_back("  " + e);
  for (const auto& a : cols)
    if (const auto* k = std::get_if<KeyDom>(&a.domain))
      lines.push_back("  FOREIGN KEY (" + quoteIdent(a.name) + ") REFERENCES " + quoteIdent(k->target) +
                      " (" + quoteIdent(kInternalKeyColumn) + ")");
  std::string out = "CREATE TABLE " + quoteIdent(name) + " (\n";
  for (std::size_t i = 0; i < lines.size(); ++i) out += lines[i] + (i + 1 < lines.size() ? ",\n" : "\n");
  return out + ");\n";
}

}  // namespace

std::string generateDDL(const LoweredErd& lowered) {
  std::string out = "-- Schema for ERD " + quoteIdent(lowered.name) + ", generated by erdc.\n";
  for (const auto& e : lowered.entities) out += "\n" + table(e.name, true, e.attributes, {});
  for (const auto& j : lowered.junctions)
    out += "\n" + table(j.name, false, {j.leftKey, j.rightKey},
                        {"UNIQUE (" + quoteIdent(j.leftKey.name) + ", " + quoteIdent(j.rightKey.name) + ")"});
  return out;
}

}  // namespace erdc::codegen
