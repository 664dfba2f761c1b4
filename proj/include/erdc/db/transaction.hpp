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

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "erdc/db/query.hpp"
#include "erdc/db/store.hpp"

namespace erdc::db {

enum class TErrorKind {
  KeyNotExistsError,
  DuplicateKeyError,
  UniqueError,
  MinError,
  MaxError,
  UserDefinedError,
};

const char* tErrorKindName(TErrorKind k);

struct TError {
  TErrorKind kind = TErrorKind::UserDefinedError;
  std::string detail;
  friend bool operator==(const TError&, const TError&) = default;
};

std::string describe(const TError& e);

struct Unit {
  friend bool operator==(Unit, Unit) { return true; }
};

/// Result of a transaction step.
using Datum = std::variant<Unit, Value, Row, std::vector<Row>, std::optional<Row>>;

std::string debugString(const Datum& d);

/// Immutable description of a sequence of store updates. Nothing happens
/// until it is passed to runT.
class Transaction {
 public:
  struct Node;
  const Node& node() const { return *node_; }
  explicit Transaction(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

 private:
  std::shared_ptr<const Node> node_;
};

using Continuation = std::function<Transaction(const Datum&)>;

Transaction returnT(Datum value = Unit{});
Transaction bindT(Transaction t, Continuation k);
/// bindT(t1, constant t2).
Transaction seqT(Transaction t1, Transaction t2);
Transaction errorT(TError e);
/// errorT with kind UserDefinedError.
Transaction failT(std::string message);

/// Yields std::vector<Row> for All and std::optional<Row> for One.
Transaction getDB(Query q, QueryMode mode);
inline Transaction queryAllT(Query q) { return getDB(std::move(q), QueryMode::All); }
inline Transaction queryOneT(Query q) { return getDB(std::move(q), QueryMode::One); }

Transaction addFact(std::string relation, Row row);
/// Removes every row equal to `row`; absent rows are not an error.
Transaction deleteFact(std::string relation, Row row);

/// Inserts under a fresh key and yields Value(Key).
Transaction newEntry(std::string relation, Row values);
/// Replaces the non-key columns; KeyNotExistsError if the key is absent.
Transaction updateEntry(std::string relation, Key key, Row values);
/// Removes the row with this key if present. Performs no integrity checks.
Transaction unsafeDeleteEntry(std::string relation, Key key);

inline Transaction operator>>(Transaction t1, Transaction t2) { return seqT(std::move(t1), std::move(t2)); }

/// Runs f(x) for every x in order; yields Unit.
template <class T, class F>
Transaction mapT_(F f, const std::vector<T>& xs) {
  Transaction t = returnT();
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) t = seqT(f(*it), std::move(t));
  return t;
}

struct Committed {
  Datum value;
  friend bool operator==(const Committed&, const Committed&) = default;
};

struct Aborted {
  TError error;
  friend bool operator==(const Aborted&, const Aborted&) = default;
};

class CommitResult {
 public:
  CommitResult(Committed c) : repr_(std::move(c)) {}
  CommitResult(Aborted a) : repr_(std::move(a)) {}

  bool committed() const { return std::holds_alternative<Committed>(repr_); }
  bool aborted() const { return !committed(); }
  /// Throw erdc::Error when called on the other alternative.
  const Datum& value() const;
  const TError& error() const;

  friend bool operator==(const CommitResult&, const CommitResult&) = default;

 private:
  std::variant<Committed, Aborted> repr_;
};

struct RunResult {
  Store store;
  CommitResult result;
};

/// Executes `t` on a working copy of `store`. On commit the working copy is
/// returned; on abort the input store is returned unchanged. Exceptions
/// thrown by continuations and schema mismatches abort with
/// UserDefinedError.
RunResult runT(const Transaction& t, Store store);

}  // namespace erdc::db
