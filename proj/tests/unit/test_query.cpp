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
#include <gtest/gtest.h>

#include "erdc/db/query.hpp"
#include "erdc/db/store.hpp"

namespace erdc::db {
namespace {

Store primes(std::initializer_list<int> ns) {
  Store s;
  s.createRelation("prime", {{"n", IntDom{}, false}}, false);
  for (int n : ns) s.addFact("prime", {n});
  return s;
}

// prime x <> prime y |> x + 2 == y
Query twinPrimes() {
  return Query::join(scan("prime"), scan("prime")) |
         [](const Row& r) { return r[0].asInt() + 2 == r[1].asInt(); };
}

std::vector<Row> bruteForceTwins(const Store& s) {
  std::vector<Row> out;
  for (const auto& x : s.relation("prime").rows())
    for (const auto& y : s.relation("prime").rows())
      if (x[0].asInt() + 2 == y[0].asInt()) out.push_back({x[0], y[0]});
  return out;
}

TEST(QueryTest, ScanOfEmptyRelation) {
  EXPECT_TRUE(runAll(scan("prime"), primes({})).empty());
  EXPECT_EQ(runOne(scan("prime"), primes({})), std::nullopt);
}

TEST(QueryTest, TwinPrimes) {
  const Store s = primes({2, 3, 5, 7, 13});
  const auto rows = runAll(twinPrimes(), s);
  EXPECT_EQ(rows, (std::vector<Row>{{3, 5}, {5, 7}}));
  EXPECT_EQ(rows, bruteForceTwins(s));
  const Store t = primes({2, 3, 5, 7, 11, 13});
  EXPECT_EQ(runAll(twinPrimes(), t), (std::vector<Row>{{3, 5}, {5, 7}, {11, 13}}));
}

TEST(QueryTest, OneReturnsFirst) {
  const Store s = primes({7, 3});
  EXPECT_EQ(runOne(scan("prime"), s), (Row{7}));
  EXPECT_EQ(std::get<std::optional<Row>>(runQ(scan("prime"), QueryMode::One, s)), (Row{7}));
}

TEST(QueryTest, JoinOnColumnsFilterProject) {
  Store s;
  s.createRelation("Lecturer", {{"Name", StringDom{}, false}}, true);
  s.createRelation("Lecture", {{"Title", StringDom{}, false}, {"By", KeyDom{"Lecturer"}, false}}, true);
  const Key ada = s.insertNew("Lecturer", {"Ada"});
  const Key bob = s.insertNew("Lecturer", {"Bob"});
  s.insertNew("Lecture", {"Logic", ada});
  s.insertNew("Lecture", {"DB", bob});
  s.insertNew("Lecture", {"AI", ada});
  const Query q = Query::project(
      Query::filterEq(Query::join(scan("Lecture"), scan("Lecturer"), {{"Lecture.By", "Lecturer._key"}}),
                      {{"Lecturer.Name", Value("Ada")}}),
      {"Lecture.Title"});
  EXPECT_EQ(runAll(q, s), (std::vector<Row>{{"Logic"}, {"AI"}}));
  const ResultSet rs = evaluate(Query::join(scan("Lecture"), scan("Lecturer"), {{"By", "Lecturer._key"}}), s);
  EXPECT_EQ(rs.columns.size(), 5u);
  EXPECT_EQ(rs.index("Lecturer.Name"), 4u);
  EXPECT_EQ(rs.index("_key"), 0u);
  EXPECT_EQ(rs.rows.size(), 3u);
  EXPECT_EQ(runAll(Query::filterC(scan("Lecture"), [](const Row& r) { return r[1] == Value("DB"); }), s).size(), 1u);
}

TEST(QueryTest, UnknownNamesThrow) {
  const Store s = primes({2});
  EXPECT_THROW(runAll(scan("nope"), s), UnknownRelation);
  EXPECT_THROW(runAll(Query::project(scan("prime"), {"m"}), s), UnknownColumn);
  EXPECT_THROW(runAll(Query::filterEq(scan("prime"), {{"m", Value(1)}}), s), UnknownColumn);
}

TEST(QueryTest, PureAndRepeatable) {
  const Store s = primes({2, 3, 5, 7, 11, 13, 17, 19});
  const Store before = s;
  EXPECT_EQ(runAll(twinPrimes(), s), runAll(twinPrimes(), s));
  EXPECT_EQ(s, before);
}

}  // namespace
}  // namespace erdc::db
