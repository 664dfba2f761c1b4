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

#include <concepts>
#include <cstdint>
#include <string>
#include <optional>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "erdc/db/database.hpp"
#include "erdc/db/transaction.hpp"

namespace erdc::db {

/// Converts between typed results and Datum. Types may code themselves
/// through `Datum toDatum() const` and `static T fromDatum(const Datum&)`.
template <class T>
struct DatumCodec;

template <class T>
concept SelfCoded = requires(const T& t, const Datum& d) {
  { t.toDatum() } -> std::convertible_to<Datum>;
  { T::fromDatum(d) } -> std::same_as<T>;
};

template <>
struct DatumCodec<Unit> {
  static Datum encode(Unit) { return Unit{}; }
  static Unit decode(const Datum&) { return {}; }
};

template <>
struct DatumCodec<Value> {
  static Datum encode(const Value& v) { return v; }
  static Value decode(const Datum& d) { return std::get<Value>(d); }
};

template <>
struct DatumCodec<Row> {
  static Datum encode(const Row& r) { return r; }
  static Row decode(const Datum& d) { return std::get<Row>(d); }
};

template <>
struct DatumCodec<bool> {
  static Datum encode(bool b) { return Value(b); }
  static bool decode(const Datum& d) { return std::get<Value>(d).asBool(); }
};

template <SelfCoded T>
struct DatumCodec<T> {
  static Datum encode(const T& t) { return t.toDatum(); }
  static T decode(const Datum& d) { return T::fromDatum(d); }
};

namespace detail {

inline Row asRow(Datum d) {
  if (auto* r = std::get_if<Row>(&d)) return std::move(*r);
  return Row{std::get<Value>(std::move(d))};
}

}  // namespace detail

/// Element results are stored as rows; single values as one-column rows.
template <class T>
struct DatumCodec<std::vector<T>> {
  static Datum encode(const std::vector<T>& xs) {
    std::vector<Row> rows;
    rows.reserve(xs.size());
    for (const auto& x : xs) rows.push_back(detail::asRow(DatumCodec<T>::encode(x)));
    return rows;
  }
  static std::vector<T> decode(const Datum& d) {
    std::vector<T> out;
    for (const Row& r : std::get<std::vector<Row>>(d)) out.push_back(DatumCodec<T>::decode(Datum(r)));
    return out;
  }
};

template <class T>
struct DatumCodec<std::optional<T>> {
  static Datum encode(const std::optional<T>& x) {
    if (!x) return std::optional<Row>();
    return std::optional<Row>(detail::asRow(DatumCodec<T>::encode(*x)));
  }
  static std::optional<T> decode(const Datum& d) {
    const auto& r = std::get<std::optional<Row>>(d);
    if (!r) return std::nullopt;
    return DatumCodec<T>::decode(Datum(*r));
  }
};

/// Converts generated field types to and from stored values.
template <class T>
struct ValueCodec;

#define ERDC_VALUE_CODEC(T, get)                             \
  template <>                                                \
  struct ValueCodec<T> {                                     \
    static Value encode(const T& x) { return Value(x); }     \
    static T decode(const Value& v) { return v.get(); }      \
  }
ERDC_VALUE_CODEC(std::int64_t, asInt);
ERDC_VALUE_CODEC(double, asFloat);
ERDC_VALUE_CODEC(char32_t, asChar);
ERDC_VALUE_CODEC(std::string, asString);
ERDC_VALUE_CODEC(bool, asBool);
ERDC_VALUE_CODEC(Date, asDate);
ERDC_VALUE_CODEC(Key, asKey);
ERDC_VALUE_CODEC(Opaque, asOpaque);
#undef ERDC_VALUE_CODEC

/// Generated key wrappers expose the raw key and decode themselves.
template <class T>
concept KeyWrapper = SelfCoded<T> && requires(const T& t) {
  { t.raw() } -> std::same_as<Key>;
};

template <KeyWrapper T>
struct ValueCodec<T> {
  static Value encode(const T& x) { return Value(x.raw()); }
  static T decode(const Value& v) { return T::fromDatum(Datum(v)); }
};

template <class T>
struct ValueCodec<std::optional<T>> {
  static Value encode(const std::optional<T>& x) { return x ? ValueCodec<T>::encode(*x) : Value(); }
  static std::optional<T> decode(const Value& v) {
    if (v.isNull()) return std::nullopt;
    return ValueCodec<T>::decode(v);
  }
};

template <class T>
Value toValue(const T& x) {
  return ValueCodec<T>::encode(x);
}

template <class T>
T fromValue(const Value& v) {
  return ValueCodec<T>::decode(v);
}

template <class T>
std::vector<Value> toValues(const std::vector<T>& xs) {
  std::vector<Value> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(toValue(x));
  return out;
}

/// The key in a Datum holding Value(Key) or a one-column row.
Key keyOf(const Datum& d);

/// The row in a Datum, which must have `columns` values.
const Row& rowOf(const Datum& d, std::size_t columns);

template <class T>
Row rowOf(const T& x) {
  return detail::asRow(DatumCodec<T>::encode(x));
}

/// A transaction whose result decodes to T.
template <class T>
class Txn {
 public:
  using value_type = T;
  explicit Txn(Transaction t) : t_(std::move(t)) {}
  const Transaction& untyped() const { return t_; }

 private:
  Transaction t_;
};

template <class T>
Txn<T> pureT(T value) {
  return Txn<T>(returnT(DatumCodec<T>::encode(value)));
}

template <class T>
Txn<T> abortT(TError e) {
  return Txn<T>(errorT(std::move(e)));
}

/// bindT for typed transactions; `f` maps T to some Txn<U>.
template <class T, class F>
auto bindTx(const Txn<T>& t, F f) -> std::invoke_result_t<F, T> {
  using R = std::invoke_result_t<F, T>;
  return R(bindT(t.untyped(), [f = std::move(f)](const Datum& d) {
    return f(DatumCodec<T>::decode(d)).untyped();
  }));
}

template <class T, class U>
Txn<U> operator>>(const Txn<T>& a, const Txn<U>& b) {
  return Txn<U>(seqT(a.untyped(), b.untyped()));
}

/// Typed mapT_.
template <class T, class F>
Txn<Unit> forEachT(const std::vector<T>& xs, F f) {
  return Txn<Unit>(mapT_([&f](const T& x) { return f(x).untyped(); }, xs));
}

template <class T>
struct Outcome {
  std::variant<T, TError> repr;

  bool ok() const { return repr.index() == 0; }
  const T& value() const {
    if (!ok()) throw Error("transaction aborted: " + describe(std::get<TError>(repr)));
    return std::get<T>(repr);
  }
  const TError& error() const {
    if (ok()) throw Error("transaction committed");
    return std::get<TError>(repr);
  }
};

template <class T>
Outcome<T> decodeOutcome(const CommitResult& r) {
  if (r.aborted()) return Outcome<T>{r.error()};
  return Outcome<T>{DatumCodec<T>::decode(r.value())};
}

template <class T>
std::pair<Store, Outcome<T>> runTyped(const Txn<T>& t, Store store) {
  RunResult r = runT(t.untyped(), std::move(store));
  auto outcome = decodeOutcome<T>(r.result);
  return {std::move(r.store), std::move(outcome)};
}

template <class T>
Outcome<T> runOn(Database& db, const Txn<T>& t) {
  return decodeOutcome<T>(db.run(t.untyped()));
}

}  // namespace erdc::db
