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
#include "erdc/term.hpp"

#include <cmath>
#include <limits>

#include "overloaded.hpp"
#include "term_parser.hpp"

namespace erdc {
namespace term {

std::string renderInt(std::int64_t v) {
  return v < 0 ? "(" + std::to_string(v) + ")" : std::to_string(v);
}

namespace {

template <class T, class F>
std::string maybe(const std::optional<T>& v, F&& render) {
  return v ? "(Just " + render(*v) + ")" : "Nothing";
}

std::string renderFloat(double v) {
  const auto s = text::formatDouble(v);
  return v < 0 || s.front() == '-' ? "(" + s + ")" : s;
}

}  // namespace

std::string renderDomain(const Domain& d) {
  return std::visit(
      Overloaded{
          [](const IntDom& x) { return "(IntDom " + maybe(x.defaultValue, renderInt) + ")"; },
          [](const FloatDom& x) {
            return "(FloatDom " + maybe(x.defaultValue, renderFloat) + ")";
          },
          [](const CharDom& x) {
            return "(CharDom " + maybe(x.defaultValue, text::quoteChar) + ")";
          },
          [](const StringDom& x) {
            return "(StringDom " +
                   maybe(x.defaultValue, [](const std::string& s) { return text::quoteString(s); }) +
                   ")";
          },
          [](const BoolDom& x) {
            return "(BoolDom " +
                   maybe(x.defaultValue, [](bool b) { return std::string(b ? "True" : "False"); }) +
                   ")";
          },
          [](const DateDom& x) { return "(DateDom " + maybe(x.defaultValue, renderInt) + ")"; },
          [](const UserDefinedDom& x) {
            return "(UserDefined " + text::quoteString(x.typeName) + " " +
                   maybe(x.defaultValue, [](const std::string& s) { return text::quoteString(s); }) +
                   ")";
          },
          [](const KeyDom& x) { return "(KeyDom " + text::quoteString(x.target) + ")"; },
      },
      d);
}

std::string renderAttribute(const AttributeDecl& a) {
  return "Attribute " + text::quoteString(a.name) + " " + renderDomain(a.domain) + " " +
         std::string(keyClassName(a.keyClass)) + " " + (a.nullable ? "True" : "False");
}

std::string renderCardinality(const Cardinality& c) {
  return std::visit(Overloaded{
                        [](const Exactly& e) { return "(Exactly " + renderInt(e.n) + ")"; },
                        [](const Range& r) {
                          return "(Range " + renderInt(r.min) + " " + maybe(r.max, renderInt) + ")";
                        },
                    },
                    c.repr());
}

std::string_view TermParser::word() {
  sc_.skipSpace();
  return sc_.identifier();
}

bool TermParser::peekWord(std::string_view w) {
  sc_.skipSpace();
  text::Scanner probe = sc_;
  return probe.identifier() == w;
}

void TermParser::expectWord(std::string_view w) {
  sc_.skipSpace();
  text::Scanner probe = sc_;
  if (probe.identifier() != w) sc_.fail("'" + std::string(w) + "'");
  sc_ = probe;
}

void TermParser::expect(char c) {
  sc_.skipSpace();
  if (!sc_.consume(c)) sc_.fail(std::string("'") + c + "'");
}

bool TermParser::accept(char c) {
  sc_.skipSpace();
  return sc_.consume(c);
}

std::string TermParser::string() {
  sc_.skipSpace();
  if (sc_.peek() != '"') sc_.fail("string literal");
  return sc_.stringLiteral();
}

std::int64_t TermParser::integer() {
  sc_.skipSpace();
  if (sc_.peek() == '(') {
    sc_.get();
    const auto v = integer();
    expect(')');
    return v;
  }
  bool isFloat = false;
  text::Scanner probe = sc_;
  const auto lexeme = probe.number(isFloat);
  if (lexeme.empty() || isFloat) sc_.fail("integer");
  const auto v = text::parseInt(lexeme);
  if (!v) sc_.fail("integer in 64-bit range");
  sc_ = probe;
  return *v;
}

std::int64_t TermParser::natural() {
  sc_.skipSpace();
  if (sc_.peek() == '-' || sc_.peek() == '(') sc_.fail("natural number");
  return integer();
}

double TermParser::floating() {
  sc_.skipSpace();
  if (sc_.peek() == '(') {
    sc_.get();
    const auto v = floating();
    expect(')');
    return v;
  }
  bool isFloat = false;
  text::Scanner probe = sc_;
  const bool negative = probe.consume('-');
  for (const double special : {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::infinity()}) {
    if (probe.consume(std::isnan(special) ? "nan" : "inf")) {
      sc_ = probe;
      return negative ? -special : special;
    }
  }
  probe = sc_;
  const auto lexeme = probe.number(isFloat);
  const auto v = lexeme.empty() ? std::nullopt : text::parseDouble(lexeme);
  if (!v) sc_.fail("float");
  sc_ = probe;
  return *v;
}

bool TermParser::boolean() {
  sc_.skipSpace();
  text::Scanner probe = sc_;
  const auto w = probe.identifier();
  if (w != "True" && w != "False") sc_.fail("True or False");
  sc_ = probe;
  return w == "True";
}

namespace {

template <class T, class F>
std::optional<T> parseMaybe(TermParser& p, F&& value) {
  if (p.peekWord("Nothing")) {
    p.expectWord("Nothing");
    return std::nullopt;
  }
  p.expect('(');
  p.expectWord("Just");
  T v = value();
  p.expect(')');
  return v;
}

}  // namespace

Domain TermParser::domain() {
  expect('(');
  sc_.skipSpace();
  text::Scanner probe = sc_;
  const auto ctor = std::string(probe.identifier());
  Domain d;
  if (ctor == "IntDom") {
    sc_ = probe;
    d = IntDom{parseMaybe<std::int64_t>(*this, [&] { return integer(); })};
  } else if (ctor == "FloatDom") {
    sc_ = probe;
    d = FloatDom{parseMaybe<double>(*this, [&] { return floating(); })};
  } else if (ctor == "CharDom") {
    sc_ = probe;
    d = CharDom{parseMaybe<char32_t>(*this, [&] {
      sc_.skipSpace();
      return sc_.charLiteral();
    })};
  } else if (ctor == "StringDom") {
    sc_ = probe;
    d = StringDom{parseMaybe<std::string>(*this, [&] { return string(); })};
  } else if (ctor == "BoolDom") {
    sc_ = probe;
    d = BoolDom{parseMaybe<bool>(*this, [&] { return boolean(); })};
  } else if (ctor == "DateDom") {
    sc_ = probe;
    d = DateDom{parseMaybe<std::int64_t>(*this, [&] { return integer(); })};
  } else if (ctor == "UserDefined") {
    sc_ = probe;
    UserDefinedDom u;
    u.typeName = string();
    u.defaultValue = parseMaybe<std::string>(*this, [&] { return string(); });
    d = std::move(u);
  } else if (ctor == "KeyDom") {
    sc_ = probe;
    d = KeyDom{string()};
  } else {
    sc_.fail("domain constructor");
  }
  expect(')');
  return d;
}

KeyClass TermParser::keyClass() {
  sc_.skipSpace();
  text::Scanner probe = sc_;
  const auto w = probe.identifier();
  KeyClass k;
  if (w == "NoKey") {
    k = KeyClass::NoKey;
  } else if (w == "PKey") {
    k = KeyClass::PKey;
  } else if (w == "Unique") {
    k = KeyClass::Unique;
  } else {
    sc_.fail("NoKey, PKey or Unique");
  }
  sc_ = probe;
  return k;
}

AttributeDecl TermParser::attribute() {
  expectWord("Attribute");
  AttributeDecl a;
  a.name = string();
  a.domain = domain();
  a.keyClass = keyClass();
  a.nullable = boolean();
  return a;
}

Cardinality TermParser::cardinality() {
  expect('(');
  Cardinality c;
  if (peekWord("Exactly")) {
    expectWord("Exactly");
    c = Exactly{natural()};
  } else if (peekWord("Range")) {
    expectWord("Range");
    Range r;
    r.min = natural();
    r.max = parseMaybe<std::int64_t>(*this, [&] { return natural(); });
    c = r;
  } else {
    sc_.fail("Exactly or Range");
  }
  expect(')');
  return c;
}

void TermParser::finish() {
  sc_.skipSpace();
  if (!sc_.atEnd()) sc_.fail("end of input");
}

}  // namespace term

namespace {

std::string renderEntity(const EntityDecl& e) {
  std::string s = "Entity " + text::quoteString(e.name) + " [";
  for (std::size_t i = 0; i < e.attributes.size(); ++i) {
    if (i) s += ", ";
    s += term::renderAttribute(e.attributes[i]);
  }
  return s + "]";
}

std::string renderRelationship(const RelationshipDecl& r) {
  std::string s = "Relationship " + text::quoteString(r.name) + " [";
  for (std::size_t i = 0; i < r.ends.size(); ++i) {
    if (i) s += ", ";
    const auto& end = r.ends[i];
    s += "REnd " + text::quoteString(end.entity) + " " + text::quoteString(end.role) + " " +
         term::renderCardinality(end.cardinality);
  }
  return s + "]";
}

template <class T, class F>
void renderBlock(std::string& out, const std::vector<T>& items, F&& render) {
  if (items.empty()) {
    out += " []";
    return;
  }
  out += "\n [";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",\n  ";
    out += render(items[i]);
  }
  out += "]";
}

}  // namespace

std::string serializeErd(const ErdTerm& erd) {
  std::string out = "ERD " + text::quoteString(erd.name);
  renderBlock(out, erd.entities, renderEntity);
  renderBlock(out, erd.relationships, renderRelationship);
  out += "\n";
  return out;
}

ErdTerm parseErdTerm(std::string_view src) {
  term::TermParser p(src);
  ErdTerm erd;
  p.expectWord("ERD");
  erd.name = p.string();
  p.list([&] {
    EntityDecl e;
    p.expectWord("Entity");
    e.name = p.string();
    p.list([&] { e.attributes.push_back(p.attribute()); });
    erd.entities.push_back(std::move(e));
  });
  p.list([&] {
    RelationshipDecl r;
    p.expectWord("Relationship");
    r.name = p.string();
    p.list([&] {
      RelEnd end;
      p.expectWord("REnd");
      end.entity = p.string();
      end.role = p.string();
      end.cardinality = p.cardinality();
      r.ends.push_back(std::move(end));
    });
    erd.relationships.push_back(std::move(r));
  });
  p.finish();
  return erd;
}

}  // namespace erdc
