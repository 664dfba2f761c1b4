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
#include "erdc/db/transaction.hpp"

#include <memory>
#include <vector>

#include "overloaded.hpp"

namespace erdc::db {

const char* tErrorKindName(TErrorKind k) {
  switch (k) {
    case TErrorKind::KeyNotExistsError: return "KeyNotExistsError";
    case TErrorKind::DuplicateKeyError: return "DuplicateKeyError";
    case TErrorKind::UniqueError: return "UniqueError";
    case TErrorKind::MinError: return "MinError";
    case TErrorKind::MaxError: return "MaxError";
    case TErrorKind::UserDefinedError: return "UserDefinedError";
  }
  return "?";
}

std::string describe(const TError& e) { return std::string(tErrorKindName(e.kind)) + ": " + e.detail; }

std::string debugString(const Datum& d) {
  return std::visit(Overloaded{
                        [](Unit) { return std::string("()"); },
                        [](const Value& v) { return v.debugString(); },
                        [](const Row& r) { return debugString(r); },
                        [](const std::vector<Row>& rs) {
                          std::string out = "[";
                          for (std::size_t i = 0; i < rs.size(); ++i)
                            out += (i ? ", " : "") + debugString(rs[i]);
                          return out + "]";
                        },
                        [](const std::optional<Row>& r) {
                          return r ? "Just " + debugString(*r) : std::string("Nothing");
                        },
                    },
                    d);
}

namespace {

struct ReturnStep {
  Datum value;
};
struct BindStep {
  Transaction first;
  Continuation next;
};
struct SeqStep {
  Transaction first;
  Transaction second;
};
struct GetStep {
  Query query;
  QueryMode mode;
};
struct AddStep {
  std::string relation;
  Row row;
};
struct DeleteStep {
  std::string relation;
  Row row;
};
struct ErrorStep {
  TError error;
};
struct NewEntryStep {
  std::string relation;
  Row values;
};
struct UpdateEntryStep {
  std::string relation;
  Key key;
  Row values;
};
struct DeleteEntryStep {
  std::string relation;
  Key key;
};

}  // namespace

struct Transaction::Node {
  std::variant<ReturnStep, BindStep, SeqStep, GetStep, AddStep, DeleteStep, ErrorStep, NewEntryStep,
               UpdateEntryStep, DeleteEntryStep>
      step;

  // Long sequences form deep chains; release them without recursion.
  ~Node() {
    std::vector<std::shared_ptr<const Node>> work;
    auto detach = [&work](Node& n) {
      auto take = [&work](Transaction& t) {
        if (t.node_ && t.node_.use_count() == 1) work.push_back(std::move(t.node_));
      };
      if (auto* b = std::get_if<BindStep>(&n.step)) take(b->first);
      if (auto* q = std::get_if<SeqStep>(&n.step)) {
        take(q->first);
        take(q->second);
      }
    };
    detach(*this);
    while (!work.empty()) {
      std::shared_ptr<const Node> n = std::move(work.back());
      work.pop_back();
      if (n.use_count() == 1) detach(const_cast<Node&>(*n));
    }
  }
};

namespace {

template <class S>
Transaction make(S step) {
  auto node = std::make_shared<Transaction::Node>();
  node->step = std::move(step);
  return Transaction(std::shared_ptr<const Transaction::Node>(std::move(node)));
}

}  // namespace

Transaction returnT(Datum value) { return make(ReturnStep{std::move(value)}); }
Transaction bindT(Transaction t, Continuation k) { return make(BindStep{std::move(t), std::move(k)}); }

Transaction seqT(Transaction t1, Transaction t2) { return make(SeqStep{std::move(t1), std::move(t2)}); }

Transaction errorT(TError e) { return make(ErrorStep{std::move(e)}); }
Transaction failT(std::string message) { return errorT({TErrorKind::UserDefinedError, std::move(message)}); }
Transaction getDB(Query q, QueryMode mode) { return make(GetStep{std::move(q), mode}); }
Transaction addFact(std::string relation, Row row) { return make(AddStep{std::move(relation), std::move(row)}); }
Transaction deleteFact(std::string relation, Row row) {
  return make(DeleteStep{std::move(relation), std::move(row)});
}
Transaction newEntry(std::string relation, Row values) {
  return make(NewEntryStep{std::move(relation), std::move(values)});
}
Transaction updateEntry(std::string relation, Key key, Row values) {
  return make(UpdateEntryStep{std::move(relation), key, std::move(values)});
}
Transaction unsafeDeleteEntry(std::string relation, Key key) {
  return make(DeleteEntryStep{std::move(relation), key});
}

const Datum& CommitResult::value() const {
  if (const auto* c = std::get_if<Committed>(&repr_)) return c->value;
  throw Error("transaction aborted: " + describe(std::get<Aborted>(repr_).error));
}

const TError& CommitResult::error() const {
  if (const auto* a = std::get_if<Aborted>(&repr_)) return a->error;
  throw Error("transaction committed");
}

namespace {

/// Executes a single non-bind step against the working store.
std::variant<Datum, TError> step(const Transaction::Node& node, Store& work) {
  using R = std::variant<Datum, TError>;
  return std::visit(
      Overloaded{
          [](const ReturnStep& s) -> R { return s.value; },
          [](const BindStep&) -> R { return TError{TErrorKind::UserDefinedError, "internal: bind"}; },
          [](const SeqStep&) -> R { return TError{TErrorKind::UserDefinedError, "internal: seq"}; },
          [&](const GetStep& s) -> R {
            if (s.mode == QueryMode::All) return Datum(runAll(s.query, work));
            return Datum(runOne(s.query, work));
          },
          [&](const AddStep& s) -> R {
            work.addFact(s.relation, s.row);
            return Datum(Unit{});
          },
          [&](const DeleteStep& s) -> R {
            work.deleteFact(s.relation, s.row);
            return Datum(Unit{});
          },
          [](const ErrorStep& s) -> R { return s.error; },
          [&](const NewEntryStep& s) -> R { return Datum(Value(work.insertNew(s.relation, s.values))); },
          [&](const UpdateEntryStep& s) -> R {
            if (!work.updateEntry(s.relation, s.key, s.values))
              return TError{TErrorKind::KeyNotExistsError,
                            "no entry for " + s.relation + " with key " + std::to_string(s.key.value)};
            return Datum(Unit{});
          },
          [&](const DeleteEntryStep& s) -> R {
            work.deleteEntry(s.relation, s.key);
            return Datum(Unit{});
          },
      },
      node.step);
}

}  // namespace

RunResult runT(const Transaction& t, Store store) {
  Store work = store;
  // Each frame keeps its node alive until the continuation has run.
  struct Frame {
    Transaction node;
    const Transaction::Node* step;
  };
  std::vector<Frame> pending;
  Transaction cur = t;
  try {
    for (;;) {
      const Transaction::Node& n = cur.node();
      if (const auto* b = std::get_if<BindStep>(&n.step)) {
        pending.push_back({cur, &n});
        cur = b->first;
        continue;
      }
      if (const auto* q = std::get_if<SeqStep>(&n.step)) {
        pending.push_back({cur, &n});
        cur = q->first;
        continue;
      }
      auto r = step(n, work);
      if (auto* e = std::get_if<TError>(&r)) return {std::move(store), Aborted{std::move(*e)}};
      Datum value = std::move(std::get<Datum>(r));
      if (pending.empty()) return {std::move(work), Committed{std::move(value)}};
      const Frame f = std::move(pending.back());
      pending.pop_back();
      if (const auto* b = std::get_if<BindStep>(&f.step->step))
        cur = b->next(value);
      else
        cur = std::get<SeqStep>(f.step->step).second;
    }
  } catch (const std::exception& ex) {
    return {std::move(store), Aborted{TError{TErrorKind::UserDefinedError, ex.what()}}};
  }
}

}  // namespace erdc::db
