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
#include "erdc/codegen/plan_exec.hpp"

#include <memory>

#include "erdc/db/checks.hpp"
#include "overloaded.hpp"

namespace erdc::codegen {

using db::Datum;
using db::Key;
using db::Row;
using db::Transaction;
using db::Value;

db::Value defaultValue(const AttributeDecl& a) {
  return std::visit(Overloaded{
                        [](const IntDom& d) { return d.defaultValue ? Value(*d.defaultValue) : Value(); },
                        [](const FloatDom& d) { return d.defaultValue ? Value(*d.defaultValue) : Value(); },
                        [](const CharDom& d) { return d.defaultValue ? Value(*d.defaultValue) : Value(); },
                        [](const StringDom& d) { return d.defaultValue ? Value(*d.defaultValue) : Value(); },
                        [](const BoolDom& d) { return d.defaultValue ? Value(*d.defaultValue) : Value(); },
                        [](const DateDom& d) {
                          return d.defaultValue ? Value(db::Date{*d.defaultValue}) : Value();
                        },
                        [](const UserDefinedDom& d) {
                          return d.defaultValue ? Value(db::Opaque{d.typeName, *d.defaultValue}) : Value();
                        },
                        [](const KeyDom&) { return Value(); },
                    },
                    a.domain);
}

namespace {

struct State {
  std::string relation;
  Row current;
  Row old;
  Value newKey;
  Value element;
};

class Interpreter {
 public:
  Interpreter(const AccessPlan& plan, const Operation& op, std::vector<Arg> args)
      : plan_(plan), op_(op), args_(std::move(args)) {}

  Transaction run(const std::shared_ptr<State>& st) const {
    switch (op_.kind) {
      case OpKind::CheckEntry:
        st->relation = op_.relation;
        st->current = std::get<Row>(args_[0]);
        return exec(op_.body, 0, st, [] { return db::returnT(); });
      case OpKind::CheckRelation: {
        const AccessPlan& plan = plan_;
        const std::string entry = op_.calls.at(0);
        return db::bindT(db::queryAllT(db::scan(op_.relation)), [&plan, entry](const Datum& d) {
          return db::mapT_([&plan, &entry](const Row& r) { return interpret(plan, entry, {Arg(r)}); },
                           std::get<std::vector<Row>>(d));
        });
      }
      case OpKind::CheckAll: {
        Transaction t = db::returnT();
        for (auto it = op_.calls.rbegin(); it != op_.calls.rend(); ++it)
          t = db::seqT(interpret(plan_, *it, {}), std::move(t));
        return t;
      }
      case OpKind::Role: return role();
      case OpKind::Get:
      case OpKind::New:
        return exec(op_.body, 0, st, [st] { return db::returnT(st->current); });
      case OpKind::Update:
      case OpKind::Link:
      case OpKind::NewPair: return exec(op_.body, 0, st, [] { return db::returnT(); });
    }
    return db::failT("unknown operation kind");
  }

 private:
  using Next = std::function<Transaction()>;

  std::size_t columnIndex(const std::string& relation, const std::string& field) const {
    const bool keyed = plan_.lowered.findEntity(relation) != nullptr;
    if (keyed && field == kInternalKeyColumn) return 0;
    const auto cols = plan_.lowered.columnsOf(relation);
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (cols[i].name == field) return i + (keyed ? 1 : 0);
    throw Error("relation '" + relation + "' has no column '" + field + "'");
  }

  Value param(std::size_t i) const {
    const Param& p = op_.params.at(i);
    const Value& v = std::get<Value>(args_.at(i));
    if (p.kind == ParamKind::Attribute && p.optional && v.isNull()) return defaultValue(p.attribute);
    return v;
  }

  Value eval(const Operand& o, const State& st) const {
    switch (o.source) {
      case Operand::Source::Param: return param(o.index);
      case Operand::Source::ParamField: {
        const Param& p = op_.params.at(o.index);
        return std::get<Row>(args_.at(o.index)).at(columnIndex(p.entity, o.field));
      }
      case Operand::Source::Field: return st.current.at(columnIndex(st.relation, o.field));
      case Operand::Source::OldField: return st.old.at(columnIndex(st.relation, o.field));
      case Operand::Source::Key: return st.current.at(0);
      case Operand::Source::NewKey: return st.newKey;
      case Operand::Source::Element: return st.element;
    }
    return Value();
  }

  Transaction check(const Check& c, const State& st) const {
    const Value v = eval(c.value, st);
    switch (c.kind) {
      case CheckKind::Unique: {
        std::optional<Key> except;
        if (c.excludeSelf) except = st.current.at(0).asKey();
        return db::uniqueCheck(v, c.relation, c.column, except);
      }
      case CheckKind::Exists: return db::existsDBKey(v, c.relation);
      case CheckKind::Cardinality:
        if (v.isNull()) return db::returnT();
        return db::cardinalityCheck(v.asKey(), c.relation, c.column, c.min, c.max, c.delta);
      case CheckKind::PairDuplicate:
        return db::pairDuplicateCheck(c.relation, v.asKey(), eval(c.value2, st).asKey(), c.allowed);
    }
    return db::returnT();
  }

  Row insertRow(const std::string& relation) const {
    Row row;
    for (const auto& col : plan_.lowered.columnsOf(relation)) {
      Value v;
      for (std::size_t i = 0; i < op_.params.size(); ++i)
        if (op_.params[i].column == col.name && op_.params[i].kind != ParamKind::KeyList) v = param(i);
      row.push_back(std::move(v));
    }
    return row;
  }

  Transaction exec(const std::vector<Instr>& body, std::size_t i, std::shared_ptr<State> st,
                   Next done) const {
    if (i == body.size()) return done();
    auto rest = [this, &body, i, st, done]() { return exec(body, i + 1, st, done); };
    auto then = [rest](Transaction t) { return db::bindT(std::move(t), [rest](const Datum&) { return rest(); }); };
    return std::visit(
        Overloaded{
            [&](const Check& c) { return then(check(c, *st)); },
            [&](const Insert& ins) {
              Row row = insertRow(ins.relation);
              const std::string rel = ins.relation;
              return db::bindT(db::newEntry(rel, row), [st, rel, row, rest](const Datum& d) {
                st->newKey = std::get<Value>(d);
                st->relation = rel;
                st->current = row;
                st->current.insert(st->current.begin(), st->newKey);
                st->old = st->current;
                return rest();
              });
            },
            [&](const Load& l) {
              const Value k = eval(l.key, *st);
              const std::string rel = l.relation;
              if (k.kind() != db::ValueKind::Key)
                return db::errorT({db::TErrorKind::KeyNotExistsError,
                                   "no entry for " + rel + " with key " + k.debugString()});
              return db::bindT(db::getEntry(k.asKey(), rel), [st, rel, rest](const Datum& d) {
                st->relation = rel;
                st->current = std::get<Row>(d);
                st->old = st->current;
                return rest();
              });
            },
            [&](const Assign& a) {
              st->current.at(columnIndex(st->relation, a.field)) = eval(a.value, *st);
              return rest();
            },
            [&](const Write& w) {
              Row values(st->current.begin() + 1, st->current.end());
              return then(db::updateEntry(w.relation, st->current.at(0).asKey(), std::move(values)));
            },
            [&](const AddPair& p) {
              return then(db::addFact(p.relation, {eval(p.left, *st), eval(p.right, *st)}));
            },
            [&](const ForEach& f) {
              const auto& elements = std::get<std::vector<Value>>(args_.at(f.param));
              return loop(f, elements, 0, st, rest);
            },
        },
        body[i]);
  }

  Transaction loop(const ForEach& f, const std::vector<Value>& elements, std::size_t k,
                   std::shared_ptr<State> st, Next done) const {
    if (k == elements.size()) return done();
    st->element = elements[k];
    return exec(f.body, 0, st, [this, &f, &elements, k, st, done] {
      return loop(f, elements, k + 1, st, done);
    });
  }

  Transaction role() const {
    const Value key = std::get<Value>(args_.at(0));
    const RoleLookup& r = op_.role;
    auto keysOf = [](std::size_t col) {
      return [col](const Datum& d) {
        std::vector<Row> out;
        for (const Row& row : std::get<std::vector<Row>>(d)) out.push_back(Row{row.at(col)});
        return db::returnT(std::move(out));
      };
    };
    switch (r.via) {
      case RoleLookup::Via::HolderScan:
        return db::bindT(db::queryAllT(db::Query::filterEq(db::scan(r.relation), {{r.column, key}})),
                         keysOf(0));
      case RoleLookup::Via::Junction:
        return db::bindT(db::queryAllT(db::Query::filterEq(db::scan(r.relation), {{r.column, key}})),
                         keysOf(columnIndex(r.relation, r.otherColumn)));
      case RoleLookup::Via::OwnColumn: {
        const std::size_t col = columnIndex(r.relation, r.column);
        return db::bindT(db::getEntry(key.asKey(), r.relation), [col](const Datum& d) {
          const Value& v = std::get<Row>(d).at(col);
          std::vector<Row> out;
          if (!v.isNull()) out.push_back(Row{v});
          return db::returnT(std::move(out));
        });
      }
      case RoleLookup::Via::None: return db::returnT(std::vector<Row>{});
    }
    return db::returnT(std::vector<Row>{});
  }

  const AccessPlan& plan_;
  const Operation& op_;
  std::vector<Arg> args_;
};

void checkArgs(const Operation& op, const std::vector<Arg>& args) {
  if (args.size() != op.params.size())
    throw Error(op.symbol + " expects " + std::to_string(op.params.size()) + " arguments, got " +
                std::to_string(args.size()));
  for (std::size_t i = 0; i < args.size(); ++i) {
    const Param& p = op.params[i];
    auto bad = [&] { throw Error(op.symbol + ": argument " + std::to_string(i) + " must be " + paramTypeName(p)); };
    switch (p.kind) {
      case ParamKind::ForeignKey:
      case ParamKind::EntityKey:
        if (!std::holds_alternative<Value>(args[i]) || std::get<Value>(args[i]).kind() != db::ValueKind::Key)
          bad();
        break;
      case ParamKind::OptionalForeignKey: {
        if (!std::holds_alternative<Value>(args[i])) bad();
        const auto k = std::get<Value>(args[i]).kind();
        if (k != db::ValueKind::Key && k != db::ValueKind::Null) bad();
        break;
      }
      case ParamKind::KeyList:
        if (!std::holds_alternative<std::vector<Value>>(args[i])) bad();
        for (const auto& v : std::get<std::vector<Value>>(args[i]))
          if (v.kind() != db::ValueKind::Key) bad();
        break;
      case ParamKind::Attribute:
        if (!std::holds_alternative<Value>(args[i])) bad();
        break;
      case ParamKind::Entity:
        if (!std::holds_alternative<Row>(args[i])) bad();
        break;
    }
  }
}

}  // namespace

db::Transaction interpret(const AccessPlan& plan, std::string_view symbol, std::vector<Arg> args) {
  const Operation* op = plan.find(symbol);
  if (!op) throw Error("no generated operation named '" + std::string(symbol) + "'");
  checkArgs(*op, args);
  // Fresh interpreter state per run, so the transaction can be rerun.
  auto interp = std::make_shared<const Interpreter>(plan, *op, std::move(args));
  return db::bindT(db::returnT(), [interp](const Datum&) { return interp->run(std::make_shared<State>()); });
}

}  // namespace erdc::codegen
