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
#include "erdc/lower.hpp"

#include <set>

#include "erdc/errors.hpp"
#include "term_parser.hpp"

namespace erdc {

std::string_view relKindName(RelKind k) {
  switch (k) {
    case RelKind::SimpleSimple01_11: return "SimpleSimple01_11";
    case RelKind::SimpleSimple01_01: return "SimpleSimple01_01";
    case RelKind::SimpleComplexNullable: return "SimpleComplexNullable";
    case RelKind::SimpleComplexMandatory: return "SimpleComplexMandatory";
    case RelKind::ComplexComplex: return "ComplexComplex";
    case RelKind::Degenerate: return "Degenerate";
    case RelKind::Unsupported: return "Unsupported";
  }
  return "Unsupported";
}

std::string_view obligationKindName(ObligationKind k) {
  switch (k) {
    case ObligationKind::UniqueAttr: return "UniqueAttr";
    case ObligationKind::ForeignKeyExists: return "ForeignKeyExists";
    case ObligationKind::MinCardinality: return "MinCardinality";
    case ObligationKind::MaxCardinality: return "MaxCardinality";
    case ObligationKind::PairDuplicate: return "PairDuplicate";
  }
  return "UniqueAttr";
}

std::string describeObligation(const CheckObligation& o) {
  std::string s(obligationKindName(o.kind));
  if (o.kind == ObligationKind::MinCardinality || o.kind == ObligationKind::MaxCardinality)
    s += "(" + std::to_string(o.bound) + ")";
  s += " " + o.entity;
  if (!o.attribute.empty()) s += "." + o.attribute;
  return s;
}

RelClass classifyRelationship(const RelationshipDecl& rel) {
  if (rel.ends.size() != 2)
    throw LoweringError("relationship '" + rel.name + "' does not have exactly two ends");
  const Cardinality& c0 = rel.ends[0].cardinality;
  const Cardinality& c1 = rel.ends[1].cardinality;
  RelClass cls;
  if (c0.max() == 0 || c1.max() == 0) {
    cls.kind = RelKind::Degenerate;
    return cls;
  }
  if (c0.min() > 0 && c1.min() > 0) {
    cls.kind = RelKind::Unsupported;
    return cls;
  }
  if (c0.isSimple() && c1.isSimple()) {
    // Both ends are (0,1) or (1,1), and not both (1,1).
    if (c0.min() == 0 && c1.min() == 0) {
      cls.kind = RelKind::SimpleSimple01_01;
      cls.sideA = rel.ends[1].entity < rel.ends[0].entity ? 1 : 0;
    } else {
      cls.kind = RelKind::SimpleSimple01_11;
      cls.sideA = c0.min() == 0 ? 0 : 1;
    }
  } else if (c0.isSimple() || c1.isSimple()) {
    cls.sideA = c0.isSimple() ? 0 : 1;
    const Cardinality& a = rel.ends[cls.sideA].cardinality;
    const Cardinality& b = rel.ends[1 - cls.sideA].cardinality;
    cls.kind = a.min() == 0 ? RelKind::SimpleComplexNullable : RelKind::SimpleComplexMandatory;
    cls.minB = b.min();
    cls.maxB = b.max();
  } else {
    cls.kind = RelKind::ComplexComplex;
  }
  return cls;
}

std::string foreignKeyName(std::string_view targetEntity, std::string_view role) {
  std::string s(targetEntity);
  s += "_";
  s += role;
  s += "_Key";
  return s;
}

std::optional<ForeignKeyPlacement> placeForeignKey(const RelationshipDecl& rel,
                                                   const RelClass& cls) {
  if (rel.ends.size() != 2) return std::nullopt;
  const RelEnd& a = rel.ends[cls.sideA];
  const RelEnd& b = rel.ends[1 - cls.sideA];
  switch (cls.kind) {
    case RelKind::SimpleSimple01_11:
    case RelKind::SimpleSimple01_01:
      return ForeignKeyPlacement{a.entity, b.entity, foreignKeyName(b.entity, b.role),
                                 cls.kind == RelKind::SimpleSimple01_01, true};
    case RelKind::SimpleComplexNullable:
    case RelKind::SimpleComplexMandatory:
      return ForeignKeyPlacement{b.entity, a.entity, foreignKeyName(a.entity, a.role),
                                 cls.kind == RelKind::SimpleComplexNullable, false};
    default:
      return std::nullopt;
  }
}

const LoweredEntity* LoweredErd::findEntity(std::string_view n) const {
  for (const auto& e : entities)
    if (e.name == n) return &e;
  return nullptr;
}

const JunctionEntity* LoweredErd::findJunction(std::string_view n) const {
  for (const auto& j : junctions)
    if (j.name == n) return &j;
  return nullptr;
}

std::vector<AttributeDecl> LoweredErd::columnsOf(std::string_view relation) const {
  if (const auto* e = findEntity(relation)) return e->attributes;
  if (const auto* j = findJunction(relation)) return {j->leftKey, j->rightKey};
  return {};
}

namespace {

AttributeDecl keyAttribute(std::string name, std::string target, bool nullable, bool unique) {
  return AttributeDecl{std::move(name), KeyDom{std::move(target)},
                       unique ? KeyClass::Unique : KeyClass::NoKey, nullable};
}

void addCardinality(std::vector<CheckObligation>& out, const std::string& holder,
                    const std::string& column, std::int64_t min,
                    std::optional<std::int64_t> max) {
  if (min > 0) out.push_back({ObligationKind::MinCardinality, min, holder, column});
  if (max) out.push_back({ObligationKind::MaxCardinality, *max, holder, column});
}

}  // namespace

LoweredErd lowerErd(const ErdTerm& erd) {
  LoweredErd out;
  out.name = erd.name;
  for (const auto& e : erd.entities) {
    LoweredEntity le{e.name, e.attributes};
    for (auto& a : le.attributes)
      if (a.keyClass == KeyClass::PKey) a.keyClass = KeyClass::Unique;
    out.entities.push_back(std::move(le));
  }
  for (const auto& e : out.entities)
    for (const auto& a : e.attributes)
      if (a.keyClass == KeyClass::Unique)
        out.obligations.push_back({ObligationKind::UniqueAttr, 0, e.name, a.name});

  auto entityRef = [&](const std::string& name) -> LoweredEntity& {
    for (auto& e : out.entities)
      if (e.name == name) return e;
    throw LoweringError("unknown entity '" + name + "'");
  };

  for (const auto& rel : erd.relationships) {
    const RelClass cls = classifyRelationship(rel);
    if (cls.kind == RelKind::Unsupported) throw UnsupportedRelationship(rel.name);
    for (const auto& end : rel.ends) entityRef(end.entity);

    RelationshipImpl impl;
    impl.relationship = rel.name;
    impl.kind = cls.kind;
    impl.ends = {rel.ends[cls.sideA], rel.ends[1 - cls.sideA]};

    if (auto fk = placeForeignKey(rel, cls)) {
      LoweredEntity& holder = entityRef(fk->holder);
      for (const auto& a : holder.attributes)
        if (a.name == fk->column)
          throw LoweringError("foreign key column '" + fk->column + "' of relationship '" +
                              rel.name + "' collides with an attribute of '" + holder.name + "'");
      holder.attributes.push_back(keyAttribute(fk->column, fk->target, fk->nullable, fk->unique));
      if (fk->unique) out.obligations.push_back({ObligationKind::UniqueAttr, 0, fk->holder, fk->column});
      out.obligations.push_back({ObligationKind::ForeignKeyExists, 0, fk->holder, fk->column});
      if (cls.kind == RelKind::SimpleComplexNullable ||
          cls.kind == RelKind::SimpleComplexMandatory)
        addCardinality(out.obligations, fk->holder, fk->column, cls.minB, cls.maxB);
      impl.holder = fk->holder;
      impl.column = fk->column;
    } else if (cls.kind == RelKind::ComplexComplex) {
      const RelEnd& left = rel.ends[0];
      const RelEnd& right = rel.ends[1];
      if (out.findJunction(rel.name) || out.findEntity(rel.name))
        throw LoweringError("junction name '" + rel.name + "' is not fresh");
      JunctionEntity j{rel.name,
                       keyAttribute(foreignKeyName(left.entity, left.role), left.entity, false, false),
                       keyAttribute(foreignKeyName(right.entity, right.role), right.entity, false,
                                    false),
                       rel.name};
      if (j.leftKey.name == j.rightKey.name)
        throw LoweringError("junction '" + rel.name + "' has two columns named '" +
                            j.leftKey.name + "'");
      out.obligations.push_back({ObligationKind::ForeignKeyExists, 0, j.name, j.leftKey.name});
      out.obligations.push_back({ObligationKind::ForeignKeyExists, 0, j.name, j.rightKey.name});
      out.obligations.push_back({ObligationKind::PairDuplicate, 0, j.name, ""});
      // Rows sharing a left key are the right-hand partners of that left
      // entity, bounded by the right end's cardinality, and vice versa.
      addCardinality(out.obligations, j.name, j.leftKey.name, right.cardinality.min(),
                     right.cardinality.max());
      addCardinality(out.obligations, j.name, j.rightKey.name, left.cardinality.min(),
                     left.cardinality.max());
      impl.ends = {left, right};
      impl.holder = j.name;
      out.junctions.push_back(std::move(j));
    }
    out.relationships.push_back(std::move(impl));
  }
  return out;
}

// Serialization

namespace {

std::string renderRelKind(const RelKind k) { return std::string(relKindName(k)); }

std::string renderEnd(const RelEnd& e) {
  return "REnd " + text::quoteString(e.entity) + " " + text::quoteString(e.role) + " " +
         term::renderCardinality(e.cardinality);
}

std::string renderObligation(const CheckObligation& o) {
  std::string kind(obligationKindName(o.kind));
  if (o.kind == ObligationKind::MinCardinality || o.kind == ObligationKind::MaxCardinality)
    kind = "(" + kind + " " + term::renderInt(o.bound) + ")";
  return "Obligation " + kind + " " + text::quoteString(o.entity) + " " +
         text::quoteString(o.attribute);
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

std::string serializeLowered(const LoweredErd& l) {
  std::string out = "LoweredERD " + text::quoteString(l.name);
  renderBlock(out, l.entities, [](const LoweredEntity& e) {
    std::string s = "LEntity " + text::quoteString(e.name) + " [";
    for (std::size_t i = 0; i < e.attributes.size(); ++i) {
      if (i) s += ", ";
      s += term::renderAttribute(e.attributes[i]);
    }
    return s + "]";
  });
  renderBlock(out, l.junctions, [](const JunctionEntity& j) {
    return "Junction " + text::quoteString(j.name) + " (" + term::renderAttribute(j.leftKey) +
           ") (" + term::renderAttribute(j.rightKey) + ") " +
           text::quoteString(j.sourceRelationship);
  });
  renderBlock(out, l.relationships, [](const RelationshipImpl& r) {
    return "Impl " + text::quoteString(r.relationship) + " " + renderRelKind(r.kind) + " [" +
           renderEnd(r.ends[0]) + ", " + renderEnd(r.ends[1]) + "] " +
           text::quoteString(r.holder) + " " + text::quoteString(r.column);
  });
  renderBlock(out, l.obligations, renderObligation);
  out += "\n";
  return out;
}

LoweredErd parseLowered(std::string_view src) {
  term::TermParser p(src);
  LoweredErd l;
  p.expectWord("LoweredERD");
  l.name = p.string();
  p.list([&] {
    p.expectWord("LEntity");
    LoweredEntity e;
    e.name = p.string();
    p.list([&] { e.attributes.push_back(p.attribute()); });
    l.entities.push_back(std::move(e));
  });
  p.list([&] {
    p.expectWord("Junction");
    JunctionEntity j;
    j.name = p.string();
    p.expect('(');
    j.leftKey = p.attribute();
    p.expect(')');
    p.expect('(');
    j.rightKey = p.attribute();
    p.expect(')');
    j.sourceRelationship = p.string();
    l.junctions.push_back(std::move(j));
  });
  p.list([&] {
    p.expectWord("Impl");
    RelationshipImpl r;
    r.relationship = p.string();
    bool found = false;
    for (int k = 0; k <= static_cast<int>(RelKind::Unsupported); ++k) {
      const auto kind = static_cast<RelKind>(k);
      if (p.peekWord(relKindName(kind))) {
        p.expectWord(relKindName(kind));
        r.kind = kind;
        found = true;
        break;
      }
    }
    if (!found) p.fail("relationship kind");
    std::size_t n = 0;
    p.list([&] {
      if (n >= 2) p.fail("']' after two ends");
      p.expectWord("REnd");
      RelEnd& e = r.ends[n++];
      e.entity = p.string();
      e.role = p.string();
      e.cardinality = p.cardinality();
    });
    if (n != 2) p.fail("two relationship ends");
    r.holder = p.string();
    r.column = p.string();
    l.relationships.push_back(std::move(r));
  });
  p.list([&] {
    p.expectWord("Obligation");
    CheckObligation o;
    const bool parens = p.accept('(');
    bool found = false;
    for (int k = 0; k <= static_cast<int>(ObligationKind::PairDuplicate); ++k) {
      const auto kind = static_cast<ObligationKind>(k);
      if (p.peekWord(obligationKindName(kind))) {
        p.expectWord(obligationKindName(kind));
        o.kind = kind;
        found = true;
        break;
      }
    }
    if (!found) p.fail("obligation kind");
    const bool counted =
        o.kind == ObligationKind::MinCardinality || o.kind == ObligationKind::MaxCardinality;
    if (counted != parens) p.fail(counted ? "'(' before cardinality obligation" : "obligation kind");
    if (counted) {
      o.bound = p.integer();
      p.expect(')');
    }
    o.entity = p.string();
    o.attribute = p.string();
    l.obligations.push_back(std::move(o));
  });
  p.finish();
  return l;
}

}  // namespace erdc
