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

#include "erdc/codegen/plan.hpp"
#include "erdc/codegen/plan_exec.hpp"
#include "erdc/db/consistency.hpp"
#include "erdc/dsl.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace erdc::codegen {
namespace {

using db::Key;
using db::Row;
using db::Value;

struct Session {
  AccessPlan plan;
  db::Store store;

  explicit Session(const LoweredErd& l) : plan(buildAccessPlan(l)), store(db::emptyStore(l)) {}

  db::CommitResult run(std::string_view symbol, std::vector<Arg> args) {
    db::RunResult r = db::runT(interpret(plan, symbol, std::move(args)), store);
    store = std::move(r.store);
    return r.result;
  }
  Key create(std::string_view symbol, std::vector<Arg> args) {
    const db::CommitResult r = run(symbol, std::move(args));
    if (r.aborted()) throw Error(describe(r.error()));
    return std::get<Row>(r.value()).at(0).asKey();
  }
  db::TErrorKind failure(std::string_view symbol, std::vector<Arg> args) {
    const db::Store before = store;
    const db::CommitResult r = run(symbol, std::move(args));
    EXPECT_EQ(store, before);
    return r.aborted() ? r.error().kind : db::TErrorKind::UserDefinedError;
  }
};

LoweredErd corpus(const std::string& file) {
  return lowerErd(parseDsl(erdc::testing::readFile(erdc::testing::corpusDir() / file)));
}

std::vector<Value> keys(const db::Datum& d) {
  std::vector<Value> out;
  for (const Row& r : std::get<std::vector<Row>>(d)) out.push_back(r.at(0));
  return out;
}

TEST(InterpretTest, UniversityOperations) {
  Session s(lowerErd(erdc::testing::universityErd()));
  const Key ada = s.create("newLecturer", {Value("Ada")});
  const Key bob = s.create("newLecturer", {Value("Bob")});
  const Key logic = s.create("newLecture", {Value(ada), Value(1), Value("Logic"), Value()});
  EXPECT_EQ(*s.store.relation("Lecture").findByKey(logic), (Row{logic, 1, "Logic", 4, ada}));
  const Key db = s.create("newLecture", {Value(ada), Value(2), Value("DB"), Value(6)});
  EXPECT_EQ(s.store.relation("Lecture").findByKey(db)->at(3), Value(6));

  EXPECT_EQ(s.failure("newLecture", {Value(ada), Value(1), Value("Again"), Value()}), db::TErrorKind::UniqueError);
  EXPECT_EQ(s.failure("newLecture", {Value(Key{99}), Value(3), Value("X"), Value()}),
            db::TErrorKind::KeyNotExistsError);
  EXPECT_EQ(s.failure("getLecture", {Value(Key{99})}), db::TErrorKind::KeyNotExistsError);

  Row updated = *s.store.relation("Lecture").findByKey(db);
  updated[1] = Value(1);
  EXPECT_EQ(s.failure("updateLecture", {updated}), db::TErrorKind::UniqueError);
  updated[1] = Value(2);
  updated[2] = Value("Databases");
  updated[4] = Value(bob);
  ASSERT_TRUE(s.run("updateLecture", {updated}).committed());
  EXPECT_EQ(*s.store.relation("Lecture").findByKey(db), (Row{db, 2, "Databases", 6, ada}));

  ASSERT_TRUE(s.run("linkLecture_taught_by", {Value(db), Value(bob)}).committed());
  EXPECT_EQ(s.failure("linkLecture_taught_by", {Value(db), Value(Key{42})}), db::TErrorKind::KeyNotExistsError);

  EXPECT_EQ(keys(s.run("teaches", {Value(ada)}).value()), std::vector<Value>{Value(logic)});
  EXPECT_EQ(keys(s.run("taught_by", {Value(db)}).value()), std::vector<Value>{Value(bob)});
  EXPECT_EQ(std::get<Row>(s.run("getLecture", {Value(logic)}).value()), (Row{logic, 1, "Logic", 4, ada}));
  EXPECT_TRUE(s.run("checkAllData", {}).committed());
  EXPECT_THROW(interpret(s.plan, "nope", {}), Error);
  EXPECT_THROW(interpret(s.plan, "getLecture", {}), Error);
}

TEST(InterpretTest, CardinalityBounds) {
  Session s(corpus("case_01_mn.erd"));
  std::vector<Key> players;
  for (int i = 0; i < 6; ++i) players.push_back(s.create("newPlayer", {Value("p"), Value()}));
  EXPECT_EQ(s.store.relation("Player").rows()[0].at(2), Value(0));
  EXPECT_EQ(s.failure("newTeam", {std::vector<Value>{Value(players[0])}, Value("Solo")}), db::TErrorKind::MinError);
  EXPECT_EQ(s.failure("newTeam", {std::vector<Value>{}, Value("Empty")}), db::TErrorKind::MinError);
  const Key team = s.create("newTeam", {std::vector<Value>{Value(players[0]), Value(players[1])}, Value("Red")});
  EXPECT_TRUE(s.run("checkAllData", {}).committed());
  for (int i = 2; i < 5; ++i) ASSERT_TRUE(s.run("linkPlayer_club", {Value(players[i]), Value(team)}).committed());
  EXPECT_TRUE(s.run("checkAllData", {}).committed());
  EXPECT_EQ(s.failure("linkPlayer_club", {Value(players[5]), Value(team)}), db::TErrorKind::MaxError);
  EXPECT_EQ(keys(s.run("members", {Value(team)}).value()).size(), 5u);
  const Key blue = s.create("newTeam", {std::vector<Value>{Value(players[0]), Value(players[5])}, Value("Blue")});
  for (int i = 1; i < 3; ++i) ASSERT_TRUE(s.run("linkPlayer_club", {Value(players[i]), Value(blue)}).committed());
  EXPECT_EQ(keys(s.run("members", {Value(team)}).value()).size(), 2u);
  EXPECT_EQ(s.failure("linkPlayer_club", {Value(players[3]), Value(blue)}), db::TErrorKind::MinError);
  EXPECT_TRUE(s.run("checkAllData", {}).committed());
}

TEST(InterpretTest, JunctionOperations) {
  Session s(corpus("case_nm.erd"));
  const Key c1 = s.create("newCourse", {Value("C1"), Value()});
  const Key c2 = s.create("newCourse", {Value("C2"), Value(3)});
  EXPECT_EQ(s.store.relation("Course").findByKey(c1)->at(2), Value(5));
  EXPECT_EQ(s.failure("newStudent", {std::vector<Value>{}, Value(1), Value("Ann")}), db::TErrorKind::MinError);
  const Key ann = s.create("newStudent", {std::vector<Value>{Value(c1)}, Value(1), Value("Ann")});
  EXPECT_EQ(s.store.relation("Enrollment").rows(), (std::vector<Row>{{ann, c1}}));
  EXPECT_EQ(s.failure("newEnrollment", {Value(ann), Value(c1)}), db::TErrorKind::DuplicateKeyError);
  EXPECT_EQ(s.failure("newEnrollment", {Value(ann), Value(Key{77})}), db::TErrorKind::KeyNotExistsError);
  ASSERT_TRUE(s.run("newEnrollment", {Value(ann), Value(c2)}).committed());
  EXPECT_EQ(keys(s.run("courses", {Value(ann)}).value()), (std::vector<Value>{Value(c1), Value(c2)}));
  EXPECT_EQ(keys(s.run("attendees", {Value(c2)}).value()), (std::vector<Value>{Value(ann)}));
  EXPECT_EQ(s.failure("newStudent", {std::vector<Value>{Value(c1), Value(c1)}, Value(2), Value("Bo")}),
            db::TErrorKind::DuplicateKeyError);
  EXPECT_EQ(s.failure("newStudent", {std::vector<Value>{Value(c2)}, Value(1), Value("Bo")}),
            db::TErrorKind::UniqueError);
  EXPECT_TRUE(s.run("checkAllData", {}).committed());
}

TEST(InterpretPropertyTest, CheckAllDataAgreesWithConsistency) {
  erdc::testing::Rng rng(101);
  int failing = 0;
  for (int i = 0; i < 300; ++i) {
    const LoweredErd l = lowerErd(erdc::testing::randomValidErd(rng, 5, 4));
    const AccessPlan plan = buildAccessPlan(l);
    const db::Store store = erdc::testing::randomStoreFor(rng, l, 10, i % 3 == 0 ? 0.02 : 0.15);
    const auto vs = db::checkConsistency(l, store);
    const db::RunResult r = db::runT(interpret(plan, "checkAllData", {}), store);
    ASSERT_EQ(r.store, store);
    ASSERT_EQ(vs.empty(), r.result.committed()) << serializeLowered(l);
    if (vs.empty()) continue;
    ++failing;
    EXPECT_EQ(db::errorKindFor(vs.front().obligation.kind), r.result.error().kind);
  }
  EXPECT_GT(failing, 50);
}

TEST(InterpretPropertyTest, EveryViolatingRowFailsItsEntryCheck) {
  erdc::testing::Rng rng(102);
  for (int i = 0; i < 200; ++i) {
    const LoweredErd l = lowerErd(erdc::testing::randomValidErd(rng, 4, 4));
    const AccessPlan plan = buildAccessPlan(l);
    const db::Store store = erdc::testing::randomStoreFor(rng, l, 8);
    const auto findings = erdc::testing::bruteForceViolations(l, store);
    for (const auto& [name, rel] : store.relations()) {
      for (std::size_t k = 0; k < rel.rows().size(); ++k) {
        const Row& row = rel.rows()[k];
        const std::int64_t id = rel.keyed() ? row[0].asKey().value : -1 - static_cast<std::int64_t>(k);
        std::optional<std::size_t> first;
        for (const auto& [ob, relation, key] : findings)
          if (relation == name && key == id && (!first || ob < *first)) first = ob;
        const db::RunResult r = db::runT(interpret(plan, "check" + name + "Entry", {row}), store);
        ASSERT_EQ(!first, r.result.committed()) << name << " " << db::debugString(row);
        if (first) EXPECT_EQ(db::errorKindFor(l.obligations[*first].kind), r.result.error().kind);
      }
    }
  }
}

}  // namespace
}  // namespace erdc::codegen
