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
#include "erdc/codegen/plan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "overloaded.hpp"

namespace erdc::codegen {

std::string_view symbolKindName(SymbolKind k) {
  switch (k) {
    case SymbolKind::EntityType: return "entity-type";
    case SymbolKind::KeyType: return "key-type";
    case SymbolKind::JunctionType: return "junction-type";
    case SymbolKind::Getter: return "getter";
    case SymbolKind::Setter: return "setter";
    case SymbolKind::KeyAccessor: return "key-accessor";
    case SymbolKind::Predicate: return "predicate";
    case SymbolKind::EntryPredicate: return "entry-predicate";
    case SymbolKind::GetOperation: return "get-operation";
    case SymbolKind::NewOperation: return "new-operation";
    case SymbolKind::UpdateOperation: return "update-operation";
    case SymbolKind::LinkOperation: return "link-operation";
    case SymbolKind::Role: return "role";
    case SymbolKind::CheckEntry: return "check-entry";
    case SymbolKind::CheckEntity: return "check-entity";
    case SymbolKind::CheckAll: return "check-all";
  }
  return "?";
}

std::string lowerFirst(std::string_view s) {
  std::string out(s);
  if (!out.empty()) out[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(out[0])));
  return out;
}

std::string upperFirst(std::string_view s) {
  std::string out(s);
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

namespace {

std::string valueTypeName(const Domain& d) {
  return std::visit(Overloaded{
                        [](const UserDefinedDom& u) { return u.typeName; },
                        [](const KeyDom& k) { return k.target + "Key"; },
                        [&](const auto&) { return domainName(d); },
                    },
                    d);
}

}  // namespace

std::string paramTypeName(const Param& p) {
  switch (p.kind) {
    case ParamKind::ForeignKey: return p.entity + "Key";
    case ParamKind::OptionalForeignKey: return "optional " + p.entity + "Key";
    case ParamKind::KeyList: return "[" + p.entity + "Key]";
    case ParamKind::Attribute:
      return (p.optional ? "optional " : "") + valueTypeName(p.attribute.domain);
    case ParamKind::Entity: return p.entity;
    case ParamKind::EntityKey: return p.entity + "Key";
  }
  return "?";
}

std::string describeOperand(const Operand& o) {
  switch (o.source) {
    case Operand::Source::Param: return "param " + std::to_string(o.index);
    case Operand::Source::ParamField: return "param " + std::to_string(o.index) + "." + o.field;
    case Operand::Source::Field: return "." + o.field;
    case Operand::Source::OldField: return "old." + o.field;
    case Operand::Source::Key: return "key";
    case Operand::Source::NewKey: return "new key";
    case Operand::Source::Element: return "element";
  }
  return "?";
}

const Operation* AccessPlan::find(std::string_view symbol) const {
  for (const auto& op : operations)
    if (op.symbol == symbol) return &op;
  return nullptr;
}

const TypePlan* AccessPlan::findType(std::string_view name) const {
  for (const auto& t : types)
    if (t.name == name) return &t;
  return nullptr;
}

namespace {

void collectObligations(const std::vector<Instr>& body, std::set<std::size_t>& out) {
  for (const auto& i : body) {
    if (const auto* c = std::get_if<Check>(&i)) out.insert(c->obligation);
    if (const auto* f = std::get_if<ForEach>(&i)) collectObligations(f->body, out);
  }
}

}  // namespace

std::vector<std::size_t> obligationsOf(const Operation& op) {
  std::set<std::size_t> s;
  collectObligations(op.body, s);
  return {s.begin(), s.end()};
}

namespace {

std::string keyTargetOf(const AttributeDecl& a) {
  if (const auto* k = std::get_if<KeyDom>(&a.domain)) return k->target;
  return {};
}

class PlanBuilder {
 public:
  explicit PlanBuilder(const LoweredErd& l) : l_(l) {}

  AccessPlan build() {
    plan_.moduleName = l_.name;
    plan_.lowered = l_;
    for (const auto& e : l_.entities) entityType(e);
    for (const auto& j : l_.junctions) junctionType(j);
    for (const auto& e : l_.entities) entityOperations(e);
    for (const auto& j : l_.junctions) newPair(j);
    for (const auto& r : l_.relationships) roles(r);
    std::vector<std::string> checks;
    for (const auto& e : l_.entities) checks.push_back(checkOperations(e.name));
    for (const auto& j : l_.junctions) checks.push_back(checkOperations(j.name));
    Operation all;
    all.kind = OpKind::CheckAll;
    all.symbolKind = SymbolKind::CheckAll;
    all.symbol = "checkAllData";
    all.result = "()";
    all.calls = std::move(checks);
    add(std::move(all));
    return std::move(plan_);
  }

 private:
  void claim(const std::string& symbol, SymbolKind kind) {
    auto [it, fresh] = symbols_.emplace(symbol, kind);
    if (!fresh)
      throw GenerationError("generated symbol '" + symbol + "' (" + std::string(symbolKindName(kind)) +
                            ") clashes with the " + std::string(symbolKindName(it->second)) +
                            " of the same name");
  }

  void add(Operation op) {
    claim(op.symbol, op.symbolKind);
    std::set<std::string> names;
    for (std::size_t i = 0; i < op.params.size(); ++i) {
      auto& p = op.params[i];
      while (!names.insert(p.name).second) p.name += "_" + std::to_string(i);
    }
    plan_.operations.push_back(std::move(op));
  }

  std::optional<std::size_t> obligation(ObligationKind k, const std::string& entity,
                                        const std::string& attribute) const {
    for (std::size_t i = 0; i < l_.obligations.size(); ++i) {
      const auto& o = l_.obligations[i];
      if (o.kind == k && o.entity == entity && o.attribute == attribute) return i;
    }
    return std::nullopt;
  }

  const AttributeDecl& column(const std::string& relation, const std::string& name) const {
    for (const auto& a : attributesOf(relation))
      if (a.name == name) return a;
    throw GenerationError("relation '" + relation + "' has no column '" + name + "'");
  }

  const std::vector<AttributeDecl>& attributesOf(const std::string& relation) const {
    if (const auto* e = l_.findEntity(relation)) return e->attributes;
    const auto* j = l_.findJunction(relation);
    if (!j) throw GenerationError("unknown relation '" + relation + "'");
    cache_[relation] = {j->leftKey, j->rightKey};
    return cache_[relation];
  }

  bool isForeignKey(const AttributeDecl& a) const { return std::holds_alternative<KeyDom>(a.domain); }

  void entityType(const LoweredEntity& e) {
    TypePlan t;
    t.name = e.name;
    t.keyType = e.name + "Key";
    t.keyAccessor = lowerFirst(e.name) + "Key";
    t.predicate = lowerFirst(e.name);
    t.entryPredicate = lowerFirst(e.name) + "Entry";
    claim(t.name, SymbolKind::EntityType);
    claim(t.keyType, SymbolKind::KeyType);
    for (const auto& a : e.attributes) {
      FieldPlan f{a, keyTargetOf(a), lowerFirst(e.name) + a.name, {}};
      claim(f.getter, SymbolKind::Getter);
      if (!isForeignKey(a)) {
        f.setter = "set" + e.name + a.name;
        claim(f.setter, SymbolKind::Setter);
      }
      t.fields.push_back(std::move(f));
    }
    claim(t.keyAccessor, SymbolKind::KeyAccessor);
    claim(t.predicate, SymbolKind::Predicate);
    claim(t.entryPredicate, SymbolKind::EntryPredicate);
    plan_.types.push_back(std::move(t));
  }

  void junctionType(const JunctionEntity& j) {
    TypePlan t;
    t.name = j.name;
    t.junction = true;
    t.predicate = lowerFirst(j.name);
    t.entryPredicate = lowerFirst(j.name) + "Entry";
    claim(t.name, SymbolKind::JunctionType);
    for (const auto& a : {j.leftKey, j.rightKey}) {
      FieldPlan f{a, keyTargetOf(a), lowerFirst(j.name) + a.name, {}};
      claim(f.getter, SymbolKind::Getter);
      t.fields.push_back(std::move(f));
    }
    claim(t.predicate, SymbolKind::Predicate);
    claim(t.entryPredicate, SymbolKind::EntryPredicate);
    plan_.types.push_back(std::move(t));
  }

  /// Index of the end whose entity stores the FK.
  static std::size_t holderEnd(RelKind k) {
    return (k == RelKind::SimpleSimple01_11 || k == RelKind::SimpleSimple01_01) ? 0 : 1;
  }

  static bool fkKind(RelKind k) {
    return k == RelKind::SimpleSimple01_11 || k == RelKind::SimpleSimple01_01 ||
           k == RelKind::SimpleComplexNullable || k == RelKind::SimpleComplexMandatory;
  }

  Check cardinality(std::size_t ob, const std::string& holder, const std::string& col, Operand v,
                    int delta) const {
    const auto& o = l_.obligations[ob];
    Check c;
    c.kind = CheckKind::Cardinality;
    c.obligation = ob;
    c.relation = holder;
    c.column = col;
    c.value = std::move(v);
    c.delta = delta;
    if (o.kind == ObligationKind::MinCardinality) {
      c.min = o.bound;
    } else {
      c.max = o.bound;
    }
    return c;
  }

  Check unique(std::size_t ob, const std::string& rel, const std::string& col, Operand v,
               bool excludeSelf) const {
    Check c;
    c.kind = CheckKind::Unique;
    c.obligation = ob;
    c.relation = rel;
    c.column = col;
    c.value = std::move(v);
    c.excludeSelf = excludeSelf;
    return c;
  }

  Check exists(std::size_t ob, const std::string& target, Operand v) const {
    Check c;
    c.kind = CheckKind::Exists;
    c.obligation = ob;
    c.relation = target;
    c.value = std::move(v);
    return c;
  }

  Check pairDuplicate(std::size_t ob, const std::string& j, Operand l, Operand r,
                      std::size_t allowed) const {
    Check c;
    c.kind = CheckKind::PairDuplicate;
    c.obligation = ob;
    c.relation = j;
    c.value = std::move(l);
    c.value2 = std::move(r);
    c.allowed = allowed;
    return c;
  }

  static void sortChecks(std::vector<Instr>& v) {
    std::stable_sort(v.begin(), v.end(), [](const Instr& a, const Instr& b) {
      return std::get<Check>(a).obligation < std::get<Check>(b).obligation;
    });
  }

  Param entityParam(const std::string& entity) const {
    Param p;
    p.name = lowerFirst(entity);
    p.kind = ParamKind::Entity;
    p.entity = entity;
    return p;
  }

  Param keyParam(const std::string& name, const std::string& entity, ParamKind kind) const {
    Param p;
    p.name = name;
    p.kind = kind;
    p.entity = entity;
    return p;
  }

  void entityOperations(const LoweredEntity& e) {
    const std::string& E = e.name;

    Operation get;
    get.kind = OpKind::Get;
    get.symbolKind = SymbolKind::GetOperation;
    get.symbol = "get" + E;
    get.relation = E;
    get.params = {keyParam("key", E, ParamKind::EntityKey)};
    get.result = E;
    get.body = {Load{E, Operand::param(0)}};
    add(std::move(get));

    newOperation(e);
    updateOperation(e);

    for (const auto& impl : l_.relationships) {
      if (!fkKind(impl.kind) || impl.holder != E) continue;
      linkOperation(e, impl);
    }
  }

  void newOperation(const LoweredEntity& e) {
    const std::string& E = e.name;
    Operation op;
    op.kind = OpKind::New;
    op.symbolKind = SymbolKind::NewOperation;
    op.symbol = "new" + E;
    op.relation = E;
    op.result = E;
    std::vector<Instr> pre;
    std::vector<Instr> post;

    for (const auto& impl : l_.relationships) {
      for (std::size_t p = 0; p < 2; ++p) {
        if (impl.ends[p].entity != E) continue;
        const RelEnd& other = impl.ends[1 - p];
        if (fkKind(impl.kind)) {
          const std::size_t h = holderEnd(impl.kind);
          const std::string& col = impl.column;
          if (p == h) {
            const AttributeDecl& a = column(E, col);
            if (a.nullable) continue;
            const std::string target = keyTargetOf(a);
            const std::size_t idx = op.params.size();
            Param param = keyParam(other.role, target, ParamKind::ForeignKey);
            param.column = col;
            op.params.push_back(std::move(param));
            if (auto ob = obligation(ObligationKind::UniqueAttr, E, col))
              pre.push_back(unique(*ob, E, col, Operand::param(idx), false));
            if (auto ob = obligation(ObligationKind::ForeignKeyExists, E, col))
              pre.push_back(exists(*ob, target, Operand::param(idx)));
            if (auto ob = obligation(ObligationKind::MaxCardinality, E, col))
              pre.push_back(cardinality(*ob, E, col, Operand::param(idx), +1));
          } else if (other.cardinality.min() > 0) {
            // Existing holder rows are relinked to the new entity.
            const std::string& holder = impl.holder;
            const std::size_t idx = op.params.size();
            op.params.push_back(keyParam(other.role, holder, ParamKind::KeyList));
            op.relationship = impl.relationship;
            ForEach each{idx, {}};
            each.body.push_back(Load{holder, Operand::element()});
            each.body.push_back(Assign{col, Operand::newKey()});
            each.body.push_back(Write{holder});
            if (auto ob = obligation(ObligationKind::MinCardinality, holder, col))
              each.body.push_back(cardinality(*ob, holder, col, Operand::oldField(col), 0));
            post.push_back(std::move(each));
            if (auto ob = obligation(ObligationKind::MinCardinality, holder, col))
              post.push_back(cardinality(*ob, holder, col, Operand::newKey(), 0));
            if (auto ob = obligation(ObligationKind::MaxCardinality, holder, col))
              post.push_back(cardinality(*ob, holder, col, Operand::newKey(), 0));
          }
        } else if (impl.kind == RelKind::ComplexComplex && other.cardinality.min() > 0) {
          const JunctionEntity* j = l_.findJunction(impl.holder);
          const std::string& J = j->name;
          const std::string own = p == 0 ? j->leftKey.name : j->rightKey.name;
          const std::string theirs = p == 0 ? j->rightKey.name : j->leftKey.name;
          const std::size_t idx = op.params.size();
          op.params.push_back(keyParam(other.role, other.entity, ParamKind::KeyList));
          op.relationship = impl.relationship;
          const Operand left = p == 0 ? Operand::newKey() : Operand::element();
          const Operand right = p == 0 ? Operand::element() : Operand::newKey();
          ForEach each{idx, {}};
          if (auto ob = obligation(ObligationKind::ForeignKeyExists, J, theirs))
            each.body.push_back(exists(*ob, other.entity, Operand::element()));
          each.body.push_back(AddPair{J, left, right});
          if (auto ob = obligation(ObligationKind::PairDuplicate, J, ""))
            each.body.push_back(pairDuplicate(*ob, J, left, right, 1));
          if (auto ob = obligation(ObligationKind::MaxCardinality, J, theirs))
            each.body.push_back(cardinality(*ob, J, theirs, Operand::element(), 0));
          post.push_back(std::move(each));
          if (auto ob = obligation(ObligationKind::MinCardinality, J, own))
            post.push_back(cardinality(*ob, J, own, Operand::newKey(), 0));
          if (auto ob = obligation(ObligationKind::MaxCardinality, J, own))
            post.push_back(cardinality(*ob, J, own, Operand::newKey(), 0));
        }
      }
    }

    for (const auto& a : e.attributes) {
      if (isForeignKey(a)) continue;
      const std::size_t idx = op.params.size();
      Param p;
      p.name = a.name;
      p.kind = ParamKind::Attribute;
      p.attribute = a;
      p.column = a.name;
      p.optional = a.nullable || hasDefault(a.domain);
      op.params.push_back(std::move(p));
      if (auto ob = obligation(ObligationKind::UniqueAttr, E, a.name))
        pre.push_back(unique(*ob, E, a.name, Operand::param(idx), false));
    }

    sortChecks(pre);
    op.body = std::move(pre);
    op.body.push_back(Insert{E});
    for (auto& i : post) op.body.push_back(std::move(i));
    op.body.push_back(Load{E, Operand::newKey()});
    add(std::move(op));
  }

  void updateOperation(const LoweredEntity& e) {
    const std::string& E = e.name;
    Operation op;
    op.kind = OpKind::Update;
    op.symbolKind = SymbolKind::UpdateOperation;
    op.symbol = "update" + E;
    op.relation = E;
    op.result = "()";
    op.params = {entityParam(E)};
    op.body.push_back(Load{E, Operand::paramField(0, std::string(kInternalKeyColumn))});
    std::vector<Instr> checks;
    for (const auto& a : e.attributes) {
      if (isForeignKey(a)) {
        if (auto ob = obligation(ObligationKind::ForeignKeyExists, E, a.name))
          checks.push_back(exists(*ob, keyTargetOf(a), Operand::fieldOf(a.name)));
        continue;
      }
      op.body.push_back(Assign{a.name, Operand::paramField(0, a.name)});
      if (auto ob = obligation(ObligationKind::UniqueAttr, E, a.name))
        checks.push_back(unique(*ob, E, a.name, Operand::fieldOf(a.name), true));
    }
    sortChecks(checks);
    for (auto& c : checks) op.body.push_back(std::move(c));
    op.body.push_back(Write{E});
    add(std::move(op));
  }

  void linkOperation(const LoweredEntity& e, const RelationshipImpl& impl) {
    const std::string& E = e.name;
    const std::string& col = impl.column;
    const AttributeDecl& a = column(E, col);
    const std::string target = keyTargetOf(a);
    const RelEnd& targetEnd = impl.ends[1 - holderEnd(impl.kind)];
    Operation op;
    op.kind = OpKind::Link;
    op.symbolKind = SymbolKind::LinkOperation;
    op.symbol = "link" + E + "_" + targetEnd.role;
    op.relation = E;
    op.relationship = impl.relationship;
    op.result = "()";
    op.params = {keyParam("key", E, ParamKind::EntityKey),
                 keyParam(targetEnd.role, target,
                          a.nullable ? ParamKind::OptionalForeignKey : ParamKind::ForeignKey)};
    op.params[1].column = col;
    op.body = {Load{E, Operand::param(0)}, Assign{col, Operand::param(1)}, Write{E}};
    std::vector<Instr> checks;
    if (auto ob = obligation(ObligationKind::UniqueAttr, E, col))
      checks.push_back(unique(*ob, E, col, Operand::fieldOf(col), true));
    if (auto ob = obligation(ObligationKind::ForeignKeyExists, E, col))
      checks.push_back(exists(*ob, target, Operand::fieldOf(col)));
    if (auto ob = obligation(ObligationKind::MinCardinality, E, col))
      checks.push_back(cardinality(*ob, E, col, Operand::oldField(col), 0));
    if (auto ob = obligation(ObligationKind::MaxCardinality, E, col))
      checks.push_back(cardinality(*ob, E, col, Operand::fieldOf(col), 0));
    sortChecks(checks);
    for (auto& c : checks) op.body.push_back(std::move(c));
    add(std::move(op));
  }

  void newPair(const JunctionEntity& j) {
    const std::string& J = j.name;
    const RelationshipImpl* impl = nullptr;
    for (const auto& r : l_.relationships)
      if (r.holder == J && r.kind == RelKind::ComplexComplex) impl = &r;
    Operation op;
    op.kind = OpKind::NewPair;
    op.symbolKind = SymbolKind::NewOperation;
    op.symbol = "new" + J;
    op.relation = J;
    op.relationship = j.sourceRelationship;
    op.result = "()";
    const std::string leftEntity = keyTargetOf(j.leftKey);
    const std::string rightEntity = keyTargetOf(j.rightKey);
    op.params = {keyParam(impl ? impl->ends[0].role : "left", leftEntity, ParamKind::ForeignKey),
                 keyParam(impl ? impl->ends[1].role : "right", rightEntity, ParamKind::ForeignKey)};
    op.params[0].column = j.leftKey.name;
    op.params[1].column = j.rightKey.name;
    std::vector<Instr> checks;
    if (auto ob = obligation(ObligationKind::ForeignKeyExists, J, j.leftKey.name))
      checks.push_back(exists(*ob, leftEntity, Operand::param(0)));
    if (auto ob = obligation(ObligationKind::ForeignKeyExists, J, j.rightKey.name))
      checks.push_back(exists(*ob, rightEntity, Operand::param(1)));
    if (auto ob = obligation(ObligationKind::PairDuplicate, J, ""))
      checks.push_back(pairDuplicate(*ob, J, Operand::param(0), Operand::param(1), 0));
    if (auto ob = obligation(ObligationKind::MaxCardinality, J, j.leftKey.name))
      checks.push_back(cardinality(*ob, J, j.leftKey.name, Operand::param(0), +1));
    if (auto ob = obligation(ObligationKind::MaxCardinality, J, j.rightKey.name))
      checks.push_back(cardinality(*ob, J, j.rightKey.name, Operand::param(1), +1));
    sortChecks(checks);
    op.body = std::move(checks);
    op.body.push_back(AddPair{J, Operand::param(0), Operand::param(1)});
    add(std::move(op));
  }

  void roles(const RelationshipImpl& impl) {
    for (std::size_t x = 0; x < 2; ++x) {
      const RelEnd& mine = impl.ends[x];
      const RelEnd& other = impl.ends[1 - x];
      Operation op;
      op.kind = OpKind::Role;
      op.symbolKind = SymbolKind::Role;
      op.symbol = mine.role;
      op.relation = mine.entity;
      op.relationship = impl.relationship;
      op.resultEntity = mine.entity;
      op.result = "[" + mine.entity + "Key]";
      op.params = {keyParam("key", other.entity, ParamKind::EntityKey)};
      if (fkKind(impl.kind)) {
        if (x == holderEnd(impl.kind)) {
          op.role = {RoleLookup::Via::HolderScan, impl.holder, impl.column, {}};
        } else {
          op.role = {RoleLookup::Via::OwnColumn, impl.holder, impl.column, {}};
        }
      } else if (impl.kind == RelKind::ComplexComplex) {
        const JunctionEntity* j = l_.findJunction(impl.holder);
        const std::string mineCol = x == 0 ? j->leftKey.name : j->rightKey.name;
        const std::string otherCol = x == 0 ? j->rightKey.name : j->leftKey.name;
        op.role = {RoleLookup::Via::Junction, j->name, otherCol, mineCol};
      }
      add(std::move(op));
    }
  }

  std::vector<Instr> entryChecks(const std::string& R) const {
    std::vector<Instr> out;
    const bool junction = l_.findJunction(R) != nullptr;
    for (std::size_t i = 0; i < l_.obligations.size(); ++i) {
      const auto& o = l_.obligations[i];
      switch (o.kind) {
        case ObligationKind::UniqueAttr:
          if (o.entity == R) out.push_back(unique(i, R, o.attribute, Operand::fieldOf(o.attribute), true));
          break;
        case ObligationKind::ForeignKeyExists:
          if (o.entity == R)
            out.push_back(exists(i, keyTargetOf(column(R, o.attribute)), Operand::fieldOf(o.attribute)));
          break;
        case ObligationKind::PairDuplicate:
          if (o.entity == R) {
            const auto* j = l_.findJunction(R);
            out.push_back(pairDuplicate(i, R, Operand::fieldOf(j->leftKey.name),
                                        Operand::fieldOf(j->rightKey.name), 1));
          }
          break;
        case ObligationKind::MinCardinality:
        case ObligationKind::MaxCardinality:
          if (!junction && keyTargetOf(column(o.entity, o.attribute)) == R)
            out.push_back(cardinality(i, o.entity, o.attribute, Operand::key(), 0));
          break;
      }
    }
    return out;
  }

  std::string checkOperations(const std::string& R) {
    Operation entry;
    entry.kind = OpKind::CheckEntry;
    entry.symbolKind = SymbolKind::CheckEntry;
    entry.symbol = "check" + R + "Entry";
    entry.relation = R;
    entry.params = {entityParam(R)};
    entry.result = "()";
    entry.body = entryChecks(R);
    const std::string entrySymbol = entry.symbol;
    add(std::move(entry));

    Operation all;
    all.kind = OpKind::CheckRelation;
    all.symbolKind = SymbolKind::CheckEntity;
    all.symbol = "check" + R;
    all.relation = R;
    all.result = "()";
    all.calls = {entrySymbol};
    const std::string symbol = all.symbol;
    add(std::move(all));
    return symbol;
  }

  const LoweredErd& l_;
  AccessPlan plan_;
  std::map<std::string, SymbolKind> symbols_;
  mutable std::map<std::string, std::vector<AttributeDecl>> cache_;
};

}  // namespace

AccessPlan buildAccessPlan(const LoweredErd& lowered) { return PlanBuilder(lowered).build(); }

}  // namespace erdc::codegen
