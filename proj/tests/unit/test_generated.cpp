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

#include <type_traits>

#include "Uni/Uni.hpp"
#include "erdc/codegen/plan_exec.hpp"
#include "erdc/db/consistency.hpp"
#include "erdc/lower.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

namespace {

namespace db = erdc::db;

static_assert(!std::is_convertible_v<Uni::LectureKey, Uni::LecturerKey>);
static_assert(!std::is_convertible_v<Uni::LecturerKey, Uni::LectureKey>);
static_assert(!std::is_default_constructible_v<Uni::Lecture>);
static_assert(std::is_same_v<decltype(Uni::newLecture(std::declval<Uni::LecturerKey>(), 1, std::string(),
                                                      std::optional<std::int64_t>())),
                             db::Txn<Uni::Lecture>>);

erdc::LoweredErd lowered() { return erdc::lowerErd(erdc::testing::universityErd()); }

template <class T>
T commit(db::Store& s, const db::Txn<T>& t) {
  auto [next, outcome] = db::runTyped(t, s);
  s = std::move(next);
  return outcome.value();
}

template <class T>
db::TErrorKind abortKind(const db::Store& s, const db::Txn<T>& t) {
  auto [next, outcome] = db::runTyped(t, s);
  EXPECT_EQ(next, s);
  return outcome.error().kind;
}

TEST(GeneratedModuleTest, CreateReadUpdate) {
  db::Store s = db::emptyStore(lowered());
  const Uni::Lecturer ada = commit(s, Uni::newLecturer("Ada"));
  const Uni::Lecturer bob = commit(s, Uni::newLecturer("Bob"));
  EXPECT_EQ(Uni::lecturerName(ada), "Ada");
  const Uni::Lecture logic = commit(s, Uni::newLecture(Uni::lecturerKey(ada), 1, "Logic", std::nullopt));
  EXPECT_EQ(Uni::lectureHours(logic), 4);
  EXPECT_EQ(Uni::lectureLecturer_taught_by_Key(logic), Uni::lecturerKey(ada));
  EXPECT_EQ(commit(s, Uni::getLecture(Uni::lectureKey(logic))), logic);

  EXPECT_EQ(abortKind(s, Uni::newLecture(Uni::lecturerKey(bob), 1, "Again", 2)), db::TErrorKind::UniqueError);

  const Uni::Lecture renamed = Uni::setLectureTitle(logic, "Logic I");
  EXPECT_EQ(Uni::lectureTitle(logic), "Logic");
  commit(s, Uni::updateLecture(renamed));
  EXPECT_EQ(Uni::lectureTitle(commit(s, Uni::getLecture(Uni::lectureKey(logic)))), "Logic I");

  commit(s, Uni::linkLecture_taught_by(Uni::lectureKey(logic), Uni::lecturerKey(bob)));
  EXPECT_EQ(commit(s, Uni::taught_by(Uni::lectureKey(logic))), std::vector<Uni::LecturerKey>{Uni::lecturerKey(bob)});
  EXPECT_TRUE(commit(s, Uni::teaches(Uni::lecturerKey(ada))).empty());
  EXPECT_EQ(commit(s, Uni::teaches(Uni::lecturerKey(bob))), std::vector<Uni::LectureKey>{Uni::lectureKey(logic)});

  commit(s, Uni::checkAllData());
  EXPECT_EQ(db::runAll(Uni::lecture(), s).size(), 1u);
  EXPECT_EQ(db::runAll(Uni::internal::lecturerEntry(Uni::lecturerKey(bob)), s).size(), 1u);
}

TEST(GeneratedModuleTest, DanglingReferenceFailsTheCheck) {
  db::Store s = db::emptyStore(lowered());
  const Uni::Lecturer ada = commit(s, Uni::newLecturer("Ada"));
  commit(s, Uni::newLecture(Uni::lecturerKey(ada), 1, "Logic", 2));
  s = db::runT(db::unsafeDeleteEntry("Lecturer", Uni::lecturerKey(ada).raw()), s).store;
  EXPECT_EQ(abortKind(s, Uni::checkAllData()), db::TErrorKind::KeyNotExistsError);
}

TEST(GeneratedModuleTest, AgreesWithInterpreterAndConsistency) {
  const erdc::LoweredErd l = lowered();
  const auto plan = erdc::codegen::buildAccessPlan(l);
  erdc::testing::Rng rng(111);
  int failing = 0;
  for (int i = 0; i < 300; ++i) {
    const db::Store s = erdc::testing::randomStoreFor(rng, l, 8, 0.1);
    const auto vs = db::checkConsistency(l, s);
    const db::RunResult compiled = db::runT(Uni::checkAllData().untyped(), s);
    const db::RunResult interpreted = db::runT(erdc::codegen::interpret(plan, "checkAllData", {}), s);
    ASSERT_EQ(compiled.result, interpreted.result);
    ASSERT_EQ(vs.empty(), compiled.result.committed());
    if (!vs.empty()) {
      ++failing;
      EXPECT_EQ(db::errorKindFor(vs.front().obligation.kind), compiled.result.error().kind);
    }
  }
  EXPECT_GT(failing, 20);
}

}  // namespace
