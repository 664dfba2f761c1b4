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

#include <atomic>
#include <thread>

#include "erdc/db/database.hpp"
#include "erdc/db/snapshot.hpp"
#include "fixtures.hpp"

namespace erdc::db {
namespace {

Store counters() {
  Store s;
  s.createRelation("C", {{"n", IntDom{}, false}}, true);
  return s;
}

TEST(DatabaseTest, CommitPublishesAbortDoesNot) {
  Database db(counters());
  EXPECT_TRUE(db.run(newEntry("C", {1})).committed());
  EXPECT_TRUE(db.run(newEntry("C", {2}) >> failT("no")).aborted());
  EXPECT_EQ(db.queryAll(scan("C")), (std::vector<Row>{{Key{1}, 1}}));
  EXPECT_EQ(db.queryOne(scan("C")), (Row{Key{1}, 1}));
}

TEST(DatabaseTest, ReadersSeeImmutableSnapshots) {
  Database db(counters());
  const auto before = db.snapshot();
  db.run(newEntry("C", {1}));
  EXPECT_TRUE(before->relation("C").rows().empty());
  EXPECT_EQ(db.snapshot()->relation("C").rows().size(), 1u);
}

TEST(DatabaseTest, TransactionsAreSerialized) {
  Database db(counters());
  db.run(newEntry("C", {0}));
  const auto increment = bindT(getDB(scan("C"), QueryMode::One), [](const Datum& d) {
    const Row& r = *std::get<std::optional<Row>>(d);
    return updateEntry("C", r[0].asKey(), {r[1].asInt() + 1});
  });
  std::vector<std::thread> ts;
  std::atomic<int> reads{0};
  for (int t = 0; t < 4; ++t)
    ts.emplace_back([&] {
      for (int i = 0; i < 250; ++i) {
        db.run(increment);
        if (db.queryOne(scan("C"))) ++reads;
      }
    });
  for (auto& t : ts) t.join();
  EXPECT_EQ(db.queryOne(scan("C"))->at(1), Value(1000));
  EXPECT_EQ(reads.load(), 1000);
}

TEST(DatabaseTest, PersistsEveryCommit) {
  const auto path = erdc::testing::scratchDir("database_persist") / "db.dbsnap";
  {
    Database db(path, counters());
    db.run(newEntry("C", {5}));
    db.run(newEntry("C", {6}) >> failT("no"));
  }
  EXPECT_EQ(loadStore(path).relation("C").rows(), (std::vector<Row>{{Key{1}, 5}}));
  Database again(path, Store{});
  EXPECT_EQ(again.queryAll(scan("C")).size(), 1u);
  const RunResult r = runT(newEntry("C", {7}), *again.snapshot());
  EXPECT_EQ(r.result.value(), Datum(Value(Key{2})));
}

TEST(DatabaseTest, SaveFailureAborts) {
  const auto dir = erdc::testing::scratchDir("database_fail");
  const auto path = dir / "db.dbsnap";
  Database db(path, counters());
  std::filesystem::remove_all(dir);
  const CommitResult r = db.run(newEntry("C", {1}));
  ASSERT_TRUE(r.aborted());
  EXPECT_EQ(r.error().kind, TErrorKind::UserDefinedError);
  EXPECT_TRUE(db.queryAll(scan("C")).empty());
}

}  // namespace
}  // namespace erdc::db
