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
#include "erdc/xml.hpp"

#include <expat.h>

#include <cstring>
#include <memory>
#include <utility>

#include "erdc/errors.hpp"
#include "overloaded.hpp"
#include "text.hpp"

namespace erdc {

namespace {

struct Node {
  std::string tag;
  std::vector<std::pair<std::string, std::string>> attrs;
  std::vector<Node> children;
};

struct TreeBuilder {
  Node document;
  std::vector<Node*> open{&document};

  static void start(void* self, const XML_Char* name, const XML_Char** atts) {
    auto& b = *static_cast<TreeBuilder*>(self);
    Node n;
    n.tag = name;
    for (const XML_Char** a = atts; *a; a += 2) n.attrs.emplace_back(a[0], a[1]);
    b.open.back()->children.push_back(std::move(n));
    b.open.push_back(&b.open.back()->children.back());
  }

  static void end(void* self, const XML_Char*) { static_cast<TreeBuilder*>(self)->open.pop_back(); }
};

Node parseDocument(std::string_view src) {
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(XML_ParserCreate("UTF-8"),
                                                                                        &XML_ParserFree);
  if (!parser) throw XmlError(0, "cannot create XML parser");
  TreeBuilder builder;
  XML_SetUserData(parser.get(), &builder);
  XML_SetElementHandler(parser.get(), &TreeBuilder::start, &TreeBuilder::end);
  if (XML_Parse(parser.get(), src.data(), static_cast<int>(src.size()), XML_TRUE) == XML_STATUS_ERROR) {
    throw XmlError(static_cast<std::size_t>(XML_GetCurrentLineNumber(parser.get())),
                   XML_ErrorString(XML_GetErrorCode(parser.get())));
  }
  return std::move(builder.document);
}

class Element {
 public:
  Element(std::string tag, const Node& node, std::vector<Diagnostic>& warnings,
          std::initializer_list<const char*> known)
      : tag_(std::move(tag)), node_(node) {
    for (const auto& [name, value] : node.attrs) {
      bool ok = false;
      for (const char* k : known) ok = ok || name == k;
      if (!ok)
        warnings.push_back({Severity::Warning, DiagCode::UnknownXmlAttribute,
                            "ignored attribute '" + name + "' on <" + tag_ + ">", DiagLocation{tag_, name}});
    }
  }

  std::optional<std::string> optional(const char* name) const {
    for (const auto& [n, v] : node_.attrs)
      if (n == name) return v;
    return std::nullopt;
  }

  std::string required(const char* name) const {
    auto v = optional(name);
    if (!v) throw SchemaError(tag_, name, "required attribute missing");
    return *v;
  }

  [[noreturn]] void invalid(const char* name, const std::string& why) const {
    throw SchemaError(tag_, name, why);
  }

  std::int64_t integer(const char* name, const std::string& raw) const {
    auto v = text::parseInt(raw);
    if (!v) invalid(name, "'" + raw + "' is not an integer");
    return *v;
  }

  bool boolean(const char* name, bool fallback) const {
    auto v = optional(name);
    if (!v) return fallback;
    if (*v == "true") return true;
    if (*v == "false") return false;
    invalid(name, "expected true or false");
  }

  const std::string& tag() const { return tag_; }

 private:
  std::string tag_;
  const Node& node_;
};

/// Child elements with the given tag; anything else is reported.
template <class F>
void children(const Node& node, const std::string& parent, std::initializer_list<const char*> known,
              std::vector<Diagnostic>& warnings, F&& each) {
  for (const Node& child : node.children) {
    bool ok = false;
    for (const char* k : known) ok = ok || child.tag == k;
    if (ok) {
      each(child.tag, child);
    } else {
      warnings.push_back({Severity::Warning, DiagCode::UnknownXmlElement,
                          "ignored element <" + child.tag + "> inside <" + parent + ">",
                          DiagLocation{parent, child.tag}});
    }
  }
}

Domain parseDomain(const Element& el) {
  const std::string dom = el.required("domain");
  const auto def = el.optional("default");
  auto checkDefault = [&](bool ok, const char* what) {
    if (!ok) el.invalid("default", "'" + *def + "' is not a valid " + what);
  };
  if (dom == "Int") {
    IntDom d;
    if (def) {
      d.defaultValue = text::parseInt(*def);
      checkDefault(d.defaultValue.has_value(), "Int");
    }
    return d;
  }
  if (dom == "Float") {
    FloatDom d;
    if (def) {
      d.defaultValue = text::parseDouble(*def);
      checkDefault(d.defaultValue.has_value(), "Float");
    }
    return d;
  }
  if (dom == "Char") {
    CharDom d;
    if (def) {
      d.defaultValue = text::singleScalar(*def);
      checkDefault(d.defaultValue.has_value(), "Char (exactly one character)");
    }
    return d;
  }
  if (dom == "String") return StringDom{def};
  if (dom == "Bool") {
    BoolDom d;
    if (def) {
      checkDefault(*def == "true" || *def == "false", "Bool");
      d.defaultValue = *def == "true";
    }
    return d;
  }
  if (dom == "Date") {
    DateDom d;
    if (def) {
      d.defaultValue = text::parseIsoDate(*def);
      checkDefault(d.defaultValue.has_value(), "ISO-8601 date");
    }
    return d;
  }
  if (dom == "UserDefined") return UserDefinedDom{el.required("type"), def};
  if (dom == "Key") {
    if (def) el.invalid("default", "key domains have no default");
    return KeyDom{el.required("target")};
  }
  el.invalid("domain", "unknown domain '" + dom + "'");
}

KeyClass parseKey(const Element& el) {
  const auto k = el.optional("key");
  if (!k || *k == "NoKey") return KeyClass::NoKey;
  if (*k == "PKey") return KeyClass::PKey;
  if (*k == "Unique") return KeyClass::Unique;
  el.invalid("key", "expected NoKey, PKey or Unique");
}

Cardinality parseCardinality(const Element& el) {
  const auto exactly = el.optional("exactly");
  const auto min = el.optional("min");
  const auto max = el.optional("max");
  if (exactly) {
    if (min || max) el.invalid("exactly", "cannot be combined with min/max");
    return Exactly{el.integer("exactly", *exactly)};
  }
  if (!min) throw SchemaError(el.tag(), "min", "either 'exactly' or 'min' is required");
  Range r;
  r.min = el.integer("min", *min);
  if (max && *max != "*") r.max = el.integer("max", *max);
  return r;
}

}  // namespace

XmlImport importXml(std::string_view src) {
  const Node document = parseDocument(src);
  XmlImport out;
  auto& warnings = out.warnings;
  const Node* root = &document.children.at(0);
  if (root->tag != "erd") throw SchemaError(root->tag, "", "root element must be <erd>");

  const Element erdEl("erd", *root, warnings, {"name"});
  out.erd.name = erdEl.required("name");
  children(*root, "erd", {"entity", "relationship"}, warnings,
           [&](const std::string& tag, const Node& node) {
             if (tag == "entity") {
               const Element el("entity", node, warnings, {"name"});
               EntityDecl e;
               e.name = el.required("name");
               children(node, "entity", {"attribute"}, warnings,
                        [&](const std::string&, const Node& an) {
                          const Element ael("attribute", an, warnings,
                                            {"name", "domain", "key", "null", "default", "type",
                                             "target"});
                          AttributeDecl a;
                          a.name = ael.required("name");
                          a.domain = parseDomain(ael);
                          a.keyClass = parseKey(ael);
                          a.nullable = ael.boolean("null", false);
                          e.attributes.push_back(std::move(a));
                        });
               out.erd.entities.push_back(std::move(e));
             } else {
               const Element el("relationship", node, warnings, {"name"});
               RelationshipDecl r;
               r.name = el.required("name");
               children(node, "relationship", {"end"}, warnings,
                        [&](const std::string&, const Node& en) {
                          const Element eel("end", en, warnings,
                                            {"entity", "role", "exactly", "min", "max"});
                          RelEnd end;
                          end.entity = eel.required("entity");
                          end.role = eel.required("role");
                          end.cardinality = parseCardinality(eel);
                          r.ends.push_back(std::move(end));
                        });
               out.erd.relationships.push_back(std::move(r));
             }
           });
  return out;
}

namespace {

std::string escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default:
        if (c < 0x20 && c != '\t' && c != '\n' && c != '\r')
          throw Error("control character " + std::to_string(c) + " cannot be represented in XML");
        if (c < 0x20 || c == 0x7F) {
          out += "&#" + std::to_string(c) + ";";
        } else {
          out.push_back(ch);
        }
    }
  }
  return out;
}

std::string attr(const char* name, std::string_view value) {
  return std::string(" ") + name + "=\"" + escape(value) + "\"";
}

std::string domainAttrs(const Domain& d) {
  return std::visit(
      Overloaded{
          [](const IntDom& x) {
            return attr("domain", "Int") +
                   (x.defaultValue ? attr("default", std::to_string(*x.defaultValue)) : "");
          },
          [](const FloatDom& x) {
            return attr("domain", "Float") +
                   (x.defaultValue ? attr("default", text::formatDouble(*x.defaultValue)) : "");
          },
          [](const CharDom& x) {
            std::string c;
            if (x.defaultValue) text::appendUtf8(c, *x.defaultValue);
            return attr("domain", "Char") + (x.defaultValue ? attr("default", c) : "");
          },
          [](const StringDom& x) {
            return attr("domain", "String") + (x.defaultValue ? attr("default", *x.defaultValue) : "");
          },
          [](const BoolDom& x) {
            return attr("domain", "Bool") +
                   (x.defaultValue ? attr("default", *x.defaultValue ? "true" : "false") : "");
          },
          [](const DateDom& x) {
            return attr("domain", "Date") +
                   (x.defaultValue ? attr("default", text::formatIsoDate(*x.defaultValue)) : "");
          },
          [](const UserDefinedDom& x) {
            return attr("domain", "UserDefined") + attr("type", x.typeName) +
                   (x.defaultValue ? attr("default", *x.defaultValue) : "");
          },
          [](const KeyDom& x) { return attr("domain", "Key") + attr("target", x.target); },
      },
      d);
}

}  // namespace

std::string renderXml(const ErdTerm& erd) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<erd" + attr("name", erd.name) + ">\n";
  for (const auto& e : erd.entities) {
    out += "  <entity" + attr("name", e.name) + ">\n";
    for (const auto& a : e.attributes) {
      out += "    <attribute" + attr("name", a.name) + domainAttrs(a.domain);
      if (a.keyClass != KeyClass::NoKey) out += attr("key", keyClassName(a.keyClass));
      if (a.nullable) out += attr("null", "true");
      out += "/>\n";
    }
    out += "  </entity>\n";
  }
  for (const auto& r : erd.relationships) {
    out += "  <relationship" + attr("name", r.name) + ">\n";
    for (const auto& end : r.ends) {
      out += "    <end" + attr("entity", end.entity) + attr("role", end.role);
      if (end.cardinality.isExactly()) {
        out += attr("exactly", std::to_string(end.cardinality.min()));
      } else {
        const auto max = end.cardinality.max();
        out += attr("min", std::to_string(end.cardinality.min())) +
               attr("max", max ? std::to_string(*max) : "*");
      }
      out += "/>\n";
    }
    out += "  </relationship>\n";
  }
  out += "</erd>\n";
  return out;
}

}  // namespace erdc
