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
#include "erdc/dsl.hpp"

#include <cmath>

#include "erdc/errors.hpp"
#include "overloaded.hpp"
#include "text.hpp"

namespace erdc {

namespace {

class DslParser {
 public:
  DslParser(std::string_view src, const std::string& file) : sc_(src, file), file_(file) {}

  ErdTerm parse() {
    ErdTerm erd;
    keyword("erd");
    erd.name = ident("ERD name");
    punct('{');
    for (;;) {
      skip();
      if (sc_.peek() == '}') break;
      text::Scanner probe = sc_;
      const auto w = probe.identifier();
      if (w == "entity") {
        sc_ = probe;
        erd.entities.push_back(entity());
      } else if (w == "relationship") {
        sc_ = probe;
        erd.relationships.push_back(relationship());
      } else {
        fail("'entity', 'relationship' or '}'");
      }
    }
    punct('}');
    skip();
    if (!sc_.atEnd()) fail("end of input");
    return erd;
  }

 private:
  void skip() { sc_.skipSpace(true); }

  [[noreturn]] void fail(const std::string& expected) {
    skip();
    // Span covers the offending token (or a single character).
    const std::size_t line = sc_.line(), col = sc_.col();
    text::Scanner probe = sc_;
    if (probe.identifier().empty()) probe.get();
    throw ParseError(SourceSpan{file_, line, col, probe.line(), probe.col()}, expected);
  }

  std::string ident(const std::string& what) {
    skip();
    const auto id = sc_.identifier();
    if (id.empty()) fail(what);
    return std::string(id);
  }

  bool peekKeyword(std::string_view kw) {
    skip();
    text::Scanner probe = sc_;
    return probe.identifier() == kw;
  }

  void keyword(std::string_view kw) {
    if (!peekKeyword(kw)) fail("'" + std::string(kw) + "'");
    sc_.identifier();
  }

  bool acceptKeyword(std::string_view kw) {
    if (!peekKeyword(kw)) return false;
    sc_.identifier();
    return true;
  }

  void punct(char c) {
    skip();
    if (!sc_.consume(c)) fail(std::string("'") + c + "'");
  }

  bool acceptPunct(char c) {
    skip();
    return sc_.consume(c);
  }

  EntityDecl entity() {
    EntityDecl e;
    e.name = ident("entity name");
    punct('{');
    while (!acceptPunct('}')) {
      e.attributes.push_back(attribute());
      punct(';');
    }
    return e;
  }

  AttributeDecl attribute() {
    AttributeDecl a;
    a.name = ident("attribute name or '}'");
    punct(':');
    a.domain = type();
    if (acceptKeyword("pkey")) {
      a.keyClass = KeyClass::PKey;
    } else if (acceptKeyword("unique")) {
      a.keyClass = KeyClass::Unique;
    }
    if (acceptKeyword("default")) literal(a.domain);
    if (acceptKeyword("null")) a.nullable = true;
    return a;
  }

  Domain type() {
    std::string name = ident("type");
    while (sc_.peek() == '.') {
      sc_.get();
      const auto part = sc_.identifier();
      if (part.empty()) fail("identifier after '.'");
      name += ".";
      name += part;
    }
    if (name == "Int") return IntDom{};
    if (name == "Float") return FloatDom{};
    if (name == "Char") return CharDom{};
    if (name == "String") return StringDom{};
    if (name == "Bool") return BoolDom{};
    if (name == "Date") return DateDom{};
    return UserDefinedDom{name, std::nullopt};
  }

  std::string stringLit(const std::string& what) {
    skip();
    if (sc_.peek() != '"') fail(what);
    return sc_.stringLiteral();
  }

  void literal(Domain& d) {
    skip();
    std::visit(Overloaded{
                   [&](IntDom& x) {
                     bool isFloat = false;
                     text::Scanner probe = sc_;
                     const auto lex = probe.number(isFloat);
                     const auto v = isFloat ? std::nullopt : text::parseInt(lex);
                     if (!v) fail("Int literal");
                     sc_ = probe;
                     x.defaultValue = v;
                   },
                   [&](FloatDom& x) {
                     bool isFloat = false;
                     text::Scanner probe = sc_;
                     const auto lex = probe.number(isFloat);
                     const auto v = lex.empty() ? std::nullopt : text::parseDouble(lex);
                     if (!v) fail("Float literal");
                     sc_ = probe;
                     x.defaultValue = v;
                   },
                   [&](CharDom& x) {
                     if (sc_.peek() != '\'') fail("Char literal");
                     x.defaultValue = sc_.charLiteral();
                   },
                   [&](StringDom& x) { x.defaultValue = stringLit("String literal"); },
                   [&](BoolDom& x) {
                     if (acceptKeyword("true")) {
                       x.defaultValue = true;
                     } else if (acceptKeyword("false")) {
                       x.defaultValue = false;
                     } else {
                       fail("Bool literal");
                     }
                   },
                   [&](DateDom& x) {
                     skip();
                     const std::size_t line = sc_.line(), col = sc_.col();
                     const auto s = stringLit("quoted ISO-8601 date");
                     const auto secs = text::parseIsoDate(s);
                     if (!secs)
                       sc_.failAt(line, col, "ISO-8601 date such as \"2008-01-01T00:00:00Z\"");
                     x.defaultValue = secs;
                   },
                   [&](UserDefinedDom& x) { x.defaultValue = stringLit("quoted default value"); },
                   [&](KeyDom&) { fail("no default for key domain"); },
               },
               d);
  }

  std::int64_t nat() {
    skip();
    bool isFloat = false;
    text::Scanner probe = sc_;
    if (probe.peek() == '-') fail("natural number");
    const auto lex = probe.number(isFloat);
    const auto v = isFloat ? std::nullopt : text::parseInt(lex);
    if (!v) fail("natural number");
    sc_ = probe;
    return *v;
  }

  RelationshipDecl relationship() {
    RelationshipDecl r;
    r.name = ident("relationship name");
    punct('{');
    while (!acceptPunct('}')) {
      RelEnd end;
      end.entity = ident("entity name or '}'");
      keyword("as");
      end.role = ident("role name");
      if (acceptKeyword("exactly")) {
        end.cardinality = Exactly{nat()};
      } else if (acceptKeyword("range")) {
        Range range;
        range.min = nat();
        skip();
        if (!sc_.consume("..")) fail("'..'");
        if (!acceptPunct('*')) range.max = nat();
        end.cardinality = range;
      } else {
        fail("'exactly' or 'range'");
      }
      punct(';');
      r.ends.push_back(std::move(end));
    }
    return r;
  }

  text::Scanner sc_;
  std::string file_;
};

void requireIdent(const std::string& s, const char* what) {
  if (!isIdentifier(s)) throw Error(std::string(what) + " '" + s + "' cannot be written in the DSL");
}

std::string renderType(const AttributeDecl& a) {
  return std::visit(Overloaded{
                        [](const UserDefinedDom& u) {
                          if (!isQualifiedIdentifier(u.typeName) || u.typeName == "Int" ||
                              u.typeName == "Float" || u.typeName == "Char" ||
                              u.typeName == "String" || u.typeName == "Bool" ||
                              u.typeName == "Date")
                            throw Error("user-defined type '" + u.typeName +
                                        "' cannot be written in the DSL");
                          return u.typeName;
                        },
                        [&](const KeyDom&) -> std::string {
                          throw Error("attribute '" + a.name +
                                      "' has a key domain, which the DSL cannot express");
                        },
                        [&](const auto&) { return domainName(a.domain); },
                    },
                    a.domain);
}

std::string renderDefault(const Domain& d) {
  return std::visit(
      Overloaded{
          [](const IntDom& x) { return std::to_string(*x.defaultValue); },
          [](const FloatDom& x) {
            if (!std::isfinite(*x.defaultValue))
              throw Error("non-finite Float default cannot be written in the DSL");
            return text::formatDouble(*x.defaultValue);
          },
          [](const CharDom& x) { return text::quoteChar(*x.defaultValue); },
          [](const StringDom& x) { return text::quoteString(*x.defaultValue); },
          [](const BoolDom& x) { return std::string(*x.defaultValue ? "true" : "false"); },
          [](const DateDom& x) { return text::quoteString(text::formatIsoDate(*x.defaultValue)); },
          [](const UserDefinedDom& x) { return text::quoteString(*x.defaultValue); },
          [](const KeyDom&) -> std::string { return {}; },
      },
      d);
}

}  // namespace

ErdTerm parseDsl(std::string_view src, const std::string& file) {
  return DslParser(src, file).parse();
}

std::string renderDsl(const ErdTerm& erd) {
  requireIdent(erd.name, "ERD name");
  std::string out = "erd " + erd.name + " {\n";
  for (const auto& e : erd.entities) {
    requireIdent(e.name, "entity name");
    out += "  entity " + e.name + " {\n";
    for (const auto& a : e.attributes) {
      requireIdent(a.name, "attribute name");
      out += "    " + a.name + ": " + renderType(a);
      if (a.keyClass == KeyClass::PKey) out += " pkey";
      if (a.keyClass == KeyClass::Unique) out += " unique";
      if (hasDefault(a.domain)) out += " default " + renderDefault(a.domain);
      if (a.nullable) out += " null";
      out += ";\n";
    }
    out += "  }\n";
  }
  for (const auto& r : erd.relationships) {
    requireIdent(r.name, "relationship name");
    out += "  relationship " + r.name + " {\n";
    for (const auto& end : r.ends) {
      requireIdent(end.entity, "entity name");
      requireIdent(end.role, "role name");
      out += "    " + end.entity + " as " + end.role + " ";
      if (end.cardinality.min() < 0 || end.cardinality.max().value_or(0) < 0)
        throw Error("negative cardinality cannot be written in the DSL");
      if (end.cardinality.isExactly()) {
        out += "exactly " + std::to_string(end.cardinality.min());
      } else {
        const auto max = end.cardinality.max();
        out += "range " + std::to_string(end.cardinality.min()) + ".." +
               (max ? std::to_string(*max) : "*");
      }
      out += ";\n";
    }
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

}  // namespace erdc
