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
#include <cinttypes>
#include <cstdio>
#include <limits>
#include <set>

#include "erdc/codegen/codegen.hpp"
#include "overloaded.hpp"

namespace erdc::codegen {

namespace {

const std::set<std::string, std::less<>>& reservedNames() {
  static const std::set<std::string, std::less<>> names = {
      "alignas", "alignof", "and", "and_eq", "asm", "auto", "bitand", "bitor", "bool", "break", "case",
      "catch", "char", "char8_t", "char16_t", "char32_t", "class", "compl", "concept", "const",
      "consteval", "constexpr", "constinit", "const_cast", "continue", "co_await", "co_return",
      "co_yield", "decltype", "default", "delete", "do", "double", "dynamic_cast", "else", "enum",
      "explicit", "export", "extern", "false", "float", "for", "friend", "goto", "if", "inline", "int",
      "long", "mutable", "namespace", "new", "noexcept", "not", "not_eq", "nullptr", "operator", "or",
      "or_eq", "private", "protected", "public", "register", "reinterpret_cast", "requires", "return",
      "short", "signed", "sizeof", "static", "static_assert", "static_cast", "struct", "switch",
      "template", "this", "thread_local", "throw", "true", "try", "typedef", "typeid", "typename",
      "union", "unsigned", "using", "virtual", "void", "volatile", "wchar_t", "while", "xor", "xor_eq",
      "final", "override", "import", "module", "std", "erdc", "internal", "assert", "errno",
      "NULL", "EOF", "INT64_C", "UINT64_C", "INT64_MAX", "INT64_MIN", "main"};
  return names;
}

/// Generated names that are not valid C++ identifiers get a trailing '_'.
std::string ident(std::string_view name) {
  std::string s(name);
  if (reservedNames().count(s)) s += "_";
  return s;
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (unsigned char c : s) {
    if (c == '"' || c == '\\' || c < 0x20 || c >= 0x7f || c == '?') {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\%03o", c);
      out += buf;
    } else {
      out += static_cast<char>(c);
    }
  }
  return out + "\"";
}

std::string stringLiteral(std::string_view s) {
  return "std::string(" + quote(s) + ", " + std::to_string(s.size()) + ")";
}

std::string intLiteral(std::int64_t v) {
  if (v == std::numeric_limits<std::int64_t>::min()) return "std::numeric_limits<std::int64_t>::min()";
  return "std::int64_t{" + std::to_string(v) + "}";
}

std::string doubleLiteral(double v) {
  std::uint64_t bits;
  static_assert(sizeof bits == sizeof v);
  __builtin_memcpy(&bits, &v, sizeof v);
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%016" PRIx64 "ULL", bits);
  return "std::bit_cast<double>(std::uint64_t{" + std::string(buf) + "})";
}

std::string keyTypeOf(std::string_view entity) { return ident(std::string(entity) + "Key"); }

std::string valueType(const Domain& d) {
  return std::visit(Overloaded{
                        [](const IntDom&) -> std::string { return "std::int64_t"; },
                        [](const FloatDom&) -> std::string { return "double"; },
                        [](const CharDom&) -> std::string { return "char32_t"; },
                        [](const StringDom&) -> std::string { return "std::string"; },
                        [](const BoolDom&) -> std::string { return "bool"; },
                        [](const DateDom&) -> std::string { return "_db::Date"; },
                        [](const UserDefinedDom&) -> std::string { return "_db::Opaque"; },
                        [](const KeyDom& k) -> std::string { return keyTypeOf(k.target); },
                    },
                    d);
}

std::string fieldType(const AttributeDecl& a) {
  const std::string t = valueType(a.domain);
  return a.nullable ? "std::optional<" + t + ">" : t;
}

/// Stored value of an attribute's default, or an empty Value.
std::string defaultLiteral(const AttributeDecl& a) {
  return std::visit(
      Overloaded{
          [](const IntDom& d) -> std::string {
            return d.defaultValue ? "_db::Value(" + intLiteral(*d.defaultValue) + ")" : "_db::Value()";
          },
          [](const FloatDom& d) -> std::string {
            return d.defaultValue ? "_db::Value(" + doubleLiteral(*d.defaultValue) + ")" : "_db::Value()";
          },
          [](const CharDom& d) -> std::string {
            return d.defaultValue ? "_db::Value(char32_t{" + std::to_string(static_cast<std::uint32_t>(*d.defaultValue)) + "})"
                                  : "_db::Value()";
          },
          [](const StringDom& d) -> std::string {
            return d.defaultValue ? "_db::Value(" + stringLiteral(*d.defaultValue) + ")" : "_db::Value()";
          },
          [](const BoolDom& d) -> std::string {
            if (!d.defaultValue) return "_db::Value()";
            return *d.defaultValue ? "_db::Value(true)" : "_db::Value(false)";
          },
          [](const DateDom& d) -> std::string {
            return d.defaultValue ? "_db::Value(_db::Date{" + intLiteral(*d.defaultValue) + "})" : "_db::Value()";
          },
          [](const UserDefinedDom& d) -> std::string {
            if (!d.defaultValue) return "_db::Value()";
            return "_db::Value(_db::Opaque{" + stringLiteral(d.typeName) + ", " + stringLiteral(*d.defaultValue) +
                   "})";
          },
          [](const KeyDom&) -> std::string { return "_db::Value()"; },
      },
      a.domain);
}

std::string resultType(const Operation& op) {
  switch (op.kind) {
    case OpKind::Get:
    case OpKind::New: return "_db::Txn<" + ident(op.relation) + ">";
    case OpKind::Role: return "_db::Txn<std::vector<" + keyTypeOf(op.resultEntity) + ">>";
    default: return "_db::Txn<_db::Unit>";
  }
}

/// Every name the module declares, for parameter naming.
std::set<std::string> declaredNames(const AccessPlan& plan) {
  std::set<std::string> out;
  for (const auto& t : plan.types) {
    for (const auto& n : {t.name, t.keyType, t.keyAccessor, t.predicate, t.entryPredicate})
      if (!n.empty()) out.insert(ident(n));
    for (const auto& f : t.fields) {
      out.insert(ident(f.getter));
      if (!f.setter.empty()) out.insert(ident(f.setter));
    }
  }
  for (const auto& op : plan.operations) out.insert(ident(op.symbol));
  return out;
}

std::vector<std::string> paramNames(const AccessPlan& plan, const Operation& op) {
  const std::set<std::string> taken = declaredNames(plan);
  std::set<std::string> used;
  std::vector<std::string> out;
  for (const auto& p : op.params) {
    std::string n = ident(p.name);
    while (taken.count(n) || used.count(n)) n += "_";
    used.insert(n);
    out.push_back(n);
  }
  return out;
}

std::string paramType(const Param& p) {
  switch (p.kind) {
    case ParamKind::ForeignKey:
    case ParamKind::EntityKey: return keyTypeOf(p.entity);
    case ParamKind::OptionalForeignKey: return "std::optional<" + keyTypeOf(p.entity) + ">";
    case ParamKind::KeyList: return "const std::vector<" + keyTypeOf(p.entity) + ">&";
    case ParamKind::Attribute: {
      const std::string t = valueType(p.attribute.domain);
      return p.optional ? "std::optional<" + t + ">" : t;
    }
    case ParamKind::Entity: return "const " + ident(p.entity) + "&";
  }
  return "void";
}

std::string signature(const AccessPlan& plan, const Operation& op, bool unusedParams = false) {
  const auto names = paramNames(plan, op);
  std::string s = "inline " + resultType(op) + " " + ident(op.symbol) + "(";
  for (std::size_t i = 0; i < op.params.size(); ++i)
    s += (i ? ", " : "") + std::string(unusedParams ? "[[maybe_unused]] " : "") + paramType(op.params[i]) + " " +
         names[i];
  return s + ")";
}

std::string indent(int n) { return std::string(static_cast<std::size_t>(n) * 2, ' '); }

/// Renders an operation body as nested transactions.
class BodyWriter {
 public:
  BodyWriter(const AccessPlan& plan, const Operation& op) : plan_(plan), op_(op), names_(paramNames(plan, op)) {}

  std::string function() {
    std::string s = signature(plan_, op_) + " {\n";
    for (std::size_t i = 0; i < op_.params.size(); ++i) {
      const Param& p = op_.params[i];
      const std::string& n = names_[i];
      const std::string v = "[[maybe_unused]] const _db::Value _p" + std::to_string(i) + " = ";
      switch (p.kind) {
        case ParamKind::ForeignKey:
        case ParamKind::EntityKey:
        case ParamKind::OptionalForeignKey: s += "  " + v + "_db::toValue(" + n + ");\n"; break;
        case ParamKind::Attribute:
          if (p.optional)
            s += "  " + v + n + " ? _db::toValue(*" + n + ") : " + defaultLiteral(p.attribute) + ";\n";
          else
            s += "  " + v + "_db::toValue(" + n + ");\n";
          break;
        case ParamKind::Entity:
          s += "  [[maybe_unused]] const _db::Row _p" + std::to_string(i) + " = _db::rowOf(" + n + ");\n";
          break;
        case ParamKind::KeyList: break;
      }
    }
    Scope scope;
    if (op_.kind == OpKind::CheckEntry) {
      scope.current = "_p0";
      scope.relation = op_.relation;
    }
    s += "  return " + resultType(op_) + "([&]() -> _db::Transaction {\n";
    s += block(op_.body, 0, scope, 2);
    s += "  }());\n}\n\n";
    return s;
  }

 private:
  struct Scope {
    std::string current;
    std::string old;
    std::string relation;
    std::string newKey;
    std::string element;
  };

  std::size_t columnIndex(const std::string& relation, const std::string& field) const {
    const bool keyed = plan_.lowered.findEntity(relation) != nullptr;
    if (keyed && field == kInternalKeyColumn) return 0;
    const auto cols = plan_.lowered.columnsOf(relation);
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (cols[i].name == field) return i + (keyed ? 1 : 0);
    throw GenerationError("relation '" + relation + "' has no column '" + field + "'");
  }

  std::size_t width(const std::string& relation) const {
    return plan_.lowered.columnsOf(relation).size() + (plan_.lowered.findEntity(relation) ? 1 : 0);
  }

  std::string operand(const Operand& o, const Scope& sc) const {
    switch (o.source) {
      case Operand::Source::Param: return "_p" + std::to_string(o.index);
      case Operand::Source::ParamField:
        return "_p" + std::to_string(o.index) + "[" +
               std::to_string(columnIndex(op_.params.at(o.index).entity, o.field)) + "]";
      case Operand::Source::Field:
        return sc.current + "[" + std::to_string(columnIndex(sc.relation, o.field)) + "]";
      case Operand::Source::OldField:
        return sc.old + "[" + std::to_string(columnIndex(sc.relation, o.field)) + "]";
      case Operand::Source::Key: return sc.current + "[0]";
      case Operand::Source::NewKey: return sc.newKey;
      case Operand::Source::Element: return "_db::toValue(" + sc.element + ")";
    }
    return "_db::Value()";
  }

  std::string check(const Check& c, const Scope& sc) const {
    const std::string v = operand(c.value, sc);
    switch (c.kind) {
      case CheckKind::Unique:
        return "_db::uniqueCheck(" + v + ", " + quote(c.relation) + ", " + quote(c.column) +
               (c.excludeSelf ? ", " + sc.current + "[0].asKey()" : std::string()) + ")";
      case CheckKind::Exists: return "_db::existsDBKey(" + v + ", " + quote(c.relation) + ")";
      case CheckKind::Cardinality:
        return "_db::cardinalityCheck(" + v + ", " + quote(c.relation) + ", " + quote(c.column) + ", " +
               intLiteral(c.min) + ", " +
               (c.max ? "std::optional<std::int64_t>(" + intLiteral(*c.max) + ")" : std::string("std::nullopt")) +
               ", " + std::to_string(c.delta) + ")";
      case CheckKind::PairDuplicate:
        return "_db::pairDuplicateCheck(" + quote(c.relation) + ", " + v + ".asKey(), " + operand(c.value2, sc) +
               ".asKey(), " + std::to_string(c.allowed) + ")";
    }
    return "_db::returnT()";
  }

  std::string insertRow(const std::string& relation) const {
    std::string s = "_db::Row{";
    bool first = true;
    for (const auto& col : plan_.lowered.columnsOf(relation)) {
      std::string v = "_db::Value()";
      for (std::size_t i = 0; i < op_.params.size(); ++i)
        if (op_.params[i].column == col.name && op_.params[i].kind != ParamKind::KeyList)
          v = "_p" + std::to_string(i);
      s += (first ? "" : ", ") + v;
      first = false;
    }
    return s + "}";
  }

  std::string tail(const Scope& sc) const {
    if (op_.kind == OpKind::Get || op_.kind == OpKind::New) return "_db::returnT(" + sc.current + ")";
    return "_db::returnT()";
  }

  static std::string chain(const std::vector<std::string>& steps) {
    std::string s;
    for (std::size_t i = 0; i < steps.size(); ++i) s += (i ? " >> " : "") + steps[i];
    return s;
  }

  std::string block(const std::vector<Instr>& body, std::size_t from, Scope sc, int depth) {
    std::string s;
    std::vector<std::string> steps;
    const std::string in = indent(depth);
    auto step = [&](const std::string& expr) {
      const std::string name = "_s" + std::to_string(++counter_);
      s += in + "const _db::Transaction " + name + " = " + expr + ";\n";
      steps.push_back(name);
    };
    for (std::size_t i = from; i < body.size(); ++i) {
      const Instr& instr = body[i];
      if (const auto* c = std::get_if<Check>(&instr)) {
        step(check(*c, sc));
      } else if (const auto* w = std::get_if<Write>(&instr)) {
        step("_db::updateEntry(" + quote(w->relation) + ", " + sc.current + "[0].asKey(), _db::Row(" + sc.current +
             ".begin() + 1, " + sc.current + ".end()))");
      } else if (const auto* p = std::get_if<AddPair>(&instr)) {
        step("_db::addFact(" + quote(p->relation) + ", _db::Row{" + operand(p->left, sc) + ", " +
             operand(p->right, sc) + "})");
      } else if (const auto* a = std::get_if<Assign>(&instr)) {
        s += in + sc.current + "[" + std::to_string(columnIndex(sc.relation, a->field)) + "] = " +
             operand(a->value, sc) + ";\n";
      } else if (const auto* f = std::get_if<ForEach>(&instr)) {
        const int n = ++counter_;
        Scope inner = sc;
        inner.element = "_elem" + std::to_string(n);
        const std::string elemType = keyTypeOf(op_.params.at(f->param).entity);
        std::string loop = "_db::mapT_([=](const " + elemType + "& " + inner.element + ") -> _db::Transaction {\n";
        loop += innerBlock(f->body, inner, depth + 1, "_db::returnT()");
        loop += in + "}, " + names_.at(f->param) + ")";
        step(loop);
      } else if (const auto* ins = std::get_if<Insert>(&instr)) {
        const int n = ++counter_;
        const std::string d = "_d" + std::to_string(n);
        Scope next = sc;
        next.newKey = "_newKey" + std::to_string(n);
        std::string expr = "_db::bindT(_db::newEntry(" + quote(ins->relation) + ", " + insertRow(ins->relation) +
                           "), [=](const _db::Datum& " + d + ") -> _db::Transaction {\n";
        expr += indent(depth + 1) + "const _db::Value " + next.newKey + " = std::get<_db::Value>(" + d + ");\n";
        expr += block(body, i + 1, next, depth + 1);
        expr += in + "})";
        steps.push_back(expr);
        s += in + "return " + chain(steps) + ";\n";
        return s;
      } else if (const auto* l = std::get_if<Load>(&instr)) {
        const int n = ++counter_;
        const std::string d = "_d" + std::to_string(n);
        Scope next = sc;
        next.current = "_cur" + std::to_string(n);
        next.old = "_old" + std::to_string(n);
        next.relation = l->relation;
        std::string expr = "_db::bindT(_db::getEntry(" + operand(l->key, sc) + ".asKey(), " + quote(l->relation) +
                           "), [=](const _db::Datum& " + d + ") -> _db::Transaction {\n";
        expr += indent(depth + 1) + "_db::Row " + next.current + " = _db::rowOf(" + d + ", " +
                std::to_string(width(l->relation)) + ");\n";
        expr += indent(depth + 1) + "[[maybe_unused]] const _db::Row " + next.old + " = " + next.current + ";\n";
        expr += block(body, i + 1, next, depth + 1);
        expr += in + "})";
        steps.push_back(expr);
        s += in + "return " + chain(steps) + ";\n";
        return s;
      }
    }
    steps.push_back(tailOverride_.empty() ? tail(sc) : tailOverride_);
    s += in + "return " + chain(steps) + ";\n";
    return s;
  }

  std::string innerBlock(const std::vector<Instr>& body, const Scope& sc, int depth, const std::string& t) {
    const std::string saved = tailOverride_;
    tailOverride_ = t;
    std::string s = block(body, 0, sc, depth);
    tailOverride_ = saved;
    return s;
  }

  const AccessPlan& plan_;
  const Operation& op_;
  std::vector<std::string> names_;
  int counter_ = 0;
  std::string tailOverride_;
};

std::string renderKeyType(const RenderItem& it) {
  const std::string k = ident(it.type->keyType);
  return "class " + k + " {\n public:\n  " + k + "() = default;\n" +
         "  _db::Key raw() const { return _key; }\n"
         "  _db::Datum toDatum() const { return _db::Value(_key); }\n"
         "  static " + k + " fromDatum(const _db::Datum& d) {\n"
         "    " + k + " k;\n"
         "    k._key = _db::keyOf(d);\n"
         "    return k;\n"
         "  }\n"
         "  friend auto operator<=>(const " + k + "&, const " + k + "&) = default;\n\n"
         " private:\n"
         "  _db::Key _key;\n"
         "};\n\n";
}

std::string memberName(const FieldPlan& f) { return "_f" + f.attribute.name; }

std::string renderRecordType(const RenderItem& it) {
  const TypePlan& t = *it.type;
  const std::string n = ident(t.name);
  std::vector<std::pair<std::string, std::string>> members;  // type, name
  if (!t.junction) members.emplace_back(ident(t.keyType), "_key");
  for (const auto& f : t.fields) members.emplace_back(fieldType(f.attribute), memberName(f));

  std::string s = "class " + n + " {\n public:\n";
  s += "  _db::Datum toDatum() const {\n    return _db::Row{";
  for (std::size_t i = 0; i < members.size(); ++i) s += (i ? ", " : "") + ("_db::toValue(" + members[i].second + ")");
  s += "};\n  }\n";
  s += "  static " + n + " fromDatum(const _db::Datum& d) {\n";
  s += "    const _db::Row& r = _db::rowOf(d, " + std::to_string(members.size()) + ");\n";
  s += "    " + n + " e;\n";
  for (std::size_t i = 0; i < members.size(); ++i)
    s += "    e." + members[i].second + " = _db::fromValue<" + members[i].first + ">(r[" + std::to_string(i) + "]);\n";
  s += "    return e;\n  }\n";
  s += "  friend bool operator==(const " + n + "&, const " + n + "&) = default;\n\n";
  s += " private:\n  " + n + "() = default;\n\n";
  for (const auto& [type, name] : members) s += "  " + type + " " + name + "{};\n";
  if (!t.junction || !t.fields.empty()) s += "\n";
  if (!t.junction) s += "  friend " + ident(t.keyType) + " " + ident(t.keyAccessor) + "(const " + n + "&);\n";
  for (const auto& f : t.fields) {
    s += "  friend " + fieldType(f.attribute) + " " + ident(f.getter) + "(const " + n + "&);\n";
    if (!f.setter.empty())
      s += "  friend " + n + " " + ident(f.setter) + "(" + n + ", " + fieldType(f.attribute) + ");\n";
  }
  return s + "};\n\n";
}

std::string renderKeyAccessor(const RenderItem& it) {
  const TypePlan& t = *it.type;
  return "inline " + ident(t.keyType) + " " + ident(t.keyAccessor) + "(const " + ident(t.name) +
         "& e) { return e._key; }\n\n";
}

std::string renderGetter(const RenderItem& it) {
  const FieldPlan& f = *it.field;
  return "inline " + fieldType(f.attribute) + " " + ident(f.getter) + "(const " + ident(it.type->name) +
         "& e) { return e." + memberName(f) + "; }\n\n";
}

std::string renderSetter(const RenderItem& it) {
  const FieldPlan& f = *it.field;
  const std::string n = ident(it.type->name);
  return "inline " + n + " " + ident(f.setter) + "(" + n + " e, " + fieldType(f.attribute) + " v) {\n  e." +
         memberName(f) + " = std::move(v);\n  return e;\n}\n\n";
}

std::string renderPredicate(const RenderItem& it) {
  return "inline _db::Query " + ident(it.type->predicate) + "() { return _db::scan(" + quote(it.type->name) +
         "); }\n\n";
}

std::string renderEntryPredicate(const RenderItem& it) {
  const TypePlan& t = *it.type;
  std::string s = "namespace internal {\n\ninline _db::Query " + ident(t.entryPredicate) + "(";
  if (t.junction) {
    const auto& l = t.fields.at(0);
    const auto& r = t.fields.at(1);
    s += fieldType(l.attribute) + " left, " + fieldType(r.attribute) + " right) {\n";
    s += "  return _db::Query::filterEq(_db::scan(" + quote(t.name) + "), {{" + quote(l.attribute.name) +
         ", _db::toValue(left)}, {" + quote(r.attribute.name) + ", _db::toValue(right)}});\n";
  } else {
    s += ident(t.keyType) + " key) {\n";
    s += "  return _db::Query::filterEq(_db::scan(" + quote(t.name) + "), {{" +
         quote(std::string(kInternalKeyColumn)) + ", _db::toValue(key)}});\n";
  }
  return s + "}\n\n}  // namespace internal\n\n";
}

std::string renderBody(const RenderItem& it) { return BodyWriter(*it.plan, *it.operation).function(); }

std::string renderRole(const RenderItem& it) {
  const AccessPlan& plan = *it.plan;
  const Operation& op = *it.operation;
  const RoleLookup& r = op.role;
  const std::string key = paramNames(plan, op).at(0);
  const std::string result = resultType(op);
  std::string s = signature(plan, op, r.via == RoleLookup::Via::None) + " {\n";
  auto columnIndex = [&](const std::string& rel, const std::string& col) {
    const bool keyed = plan.lowered.findEntity(rel) != nullptr;
    const auto cols = plan.lowered.columnsOf(rel);
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (cols[i].name == col) return i + (keyed ? 1 : 0);
    throw GenerationError("relation '" + rel + "' has no column '" + col + "'");
  };
  auto scanKeys = [&](const std::string& column, std::size_t read) {
    return "  return " + result + "(_db::bindT(\n      _db::queryAllT(_db::Query::filterEq(_db::scan(" +
           quote(r.relation) + "), {{" + quote(column) + ", _db::toValue(" + key + ")}})),\n" +
           "      [](const _db::Datum& d) {\n"
           "        std::vector<_db::Row> keys;\n"
           "        for (const _db::Row& row : std::get<std::vector<_db::Row>>(d)) keys.push_back(_db::Row{row[" +
           std::to_string(read) + "]});\n" +
           "        return _db::returnT(std::move(keys));\n"
           "      }));\n";
  };
  switch (r.via) {
    case RoleLookup::Via::HolderScan: s += scanKeys(r.column, 0); break;
    case RoleLookup::Via::Junction: s += scanKeys(r.column, columnIndex(r.relation, r.otherColumn)); break;
    case RoleLookup::Via::OwnColumn: {
      const std::size_t width = plan.lowered.columnsOf(r.relation).size() + 1;
      s += "  return " + result + "(_db::bindT(_db::getEntry(" + key + ".raw(), " + quote(r.relation) + "), " +
           "[](const _db::Datum& d) {\n"
           "    const _db::Value& v = _db::rowOf(d, " + std::to_string(width) + ")[" +
           std::to_string(columnIndex(r.relation, r.column)) + "];\n" +
           "    std::vector<_db::Row> keys;\n"
           "    if (!v.isNull()) keys.push_back(_db::Row{v});\n"
           "    return _db::returnT(std::move(keys));\n"
           "  }));\n";
      break;
    }
    case RoleLookup::Via::None:
      s += "  return _db::pureT(std::vector<" + keyTypeOf(op.resultEntity) + ">{});\n";
      break;
  }
  return s + "}\n\n";
}

std::string renderCheckEntity(const RenderItem& it) {
  const AccessPlan& plan = *it.plan;
  const Operation& op = *it.operation;
  const TypePlan* t = plan.findType(op.relation);
  const std::string type = ident(op.relation);
  return signature(plan, op) + " {\n  return _db::bindTx(_db::Txn<std::vector<" + type + ">>(_db::queryAllT(" +
         ident(t->predicate) + "())), [](const std::vector<" + type + ">& rows) {\n" +
         "    return _db::forEachT(rows, [](const " + type + "& row) { return " + ident(op.calls.at(0)) +
         "(row); });\n  });\n}\n\n";
}

std::string renderCheckAll(const RenderItem& it) {
  const Operation& op = *it.operation;
  std::string s = signature(*it.plan, op) + " {\n  return ";
  if (op.calls.empty()) return s + "_db::pureT(_db::Unit{});\n}\n\n";
  for (std::size_t i = 0; i < op.calls.size(); ++i) s += (i ? " >> " : "") + ident(op.calls[i]) + "()";
  return s + ";\n}\n\n";
}

void checkNames(const AccessPlan& plan) {
  std::map<std::string, std::string> seen;
  auto note = [&](const std::string& name) {
    const std::string m = ident(name);
    auto [it, fresh] = seen.emplace(m, name);
    if (!fresh && it->second != name)
      throw GenerationError("generated names '" + it->second + "' and '" + name + "' both become C++ name '" + m +
                            "'");
  };
  note(plan.moduleName);
  for (const auto& t : plan.types) {
    for (const auto& n : {t.name, t.keyType, t.keyAccessor, t.predicate})
      if (!n.empty()) note(n);
    for (const auto& f : t.fields) {
      note(f.getter);
      if (!f.setter.empty()) note(f.setter);
    }
  }
  for (const auto& op : plan.operations) note(op.symbol);
}

std::string prelude(const AccessPlan& plan) {
  checkNames(plan);
  return "// Generated by erdc from ERD " + plan.moduleName +
         ". Do not edit.\n"
         "#pragma once\n\n"
         "#include <bit>\n"
         "#include <compare>\n"
         "#include <cstdint>\n"
         "#include <limits>\n"
         "#include <optional>\n"
         "#include <string>\n"
         "#include <utility>\n"
         "#include <vector>\n\n"
         "#include \"erdc/db/checks.hpp\"\n"
         "#include \"erdc/db/typed.hpp\"\n\n"
         "namespace " + ident(plan.moduleName) + " {\n\n"
         "namespace _db = ::erdc::db;\n\n";
}

std::string postlude(const AccessPlan& plan) { return "}  // namespace " + ident(plan.moduleName) + "\n"; }

Backend makeCppBackend() {
  Backend b;
  b.name = "cpp";
  b.extension = ".hpp";
  b.prelude = prelude;
  b.postlude = postlude;
  b.templates = {
      {SymbolKind::KeyType, renderKeyType},
      {SymbolKind::EntityType, renderRecordType},
      {SymbolKind::JunctionType, renderRecordType},
      {SymbolKind::KeyAccessor, renderKeyAccessor},
      {SymbolKind::Getter, renderGetter},
      {SymbolKind::Setter, renderSetter},
      {SymbolKind::EntryPredicate, renderEntryPredicate},
      {SymbolKind::Predicate, renderPredicate},
      {SymbolKind::GetOperation, renderBody},
      {SymbolKind::NewOperation, renderBody},
      {SymbolKind::UpdateOperation, renderBody},
      {SymbolKind::LinkOperation, renderBody},
      {SymbolKind::Role, renderRole},
      {SymbolKind::CheckEntry, renderBody},
      {SymbolKind::CheckEntity, renderCheckEntity},
      {SymbolKind::CheckAll, renderCheckAll},
  };
  b.emitOrder = {SymbolKind::KeyType,         SymbolKind::EntityType,    SymbolKind::JunctionType,
                 SymbolKind::KeyAccessor,     SymbolKind::Getter,        SymbolKind::Setter,
                 SymbolKind::EntryPredicate,  SymbolKind::Predicate,     SymbolKind::GetOperation,
                 SymbolKind::NewOperation,    SymbolKind::UpdateOperation, SymbolKind::LinkOperation,
                 SymbolKind::Role,            SymbolKind::CheckEntry,    SymbolKind::CheckEntity,
                 SymbolKind::CheckAll};
  b.compileProbe = "c++ -std=c++20 -fsyntax-only -Wall -Wextra -Werror -I{include} -include {file} -x c++ /dev/null";
  return b;
}

}  // namespace

const Backend& cppBackend() {
  static const Backend b = makeCppBackend();
  return b;
}

}  // namespace erdc::codegen
