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
// Acceptance checks for erdc. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "Uni/Uni.hpp"
#include "erdc/codegen/codegen.hpp"
#include "erdc/codegen/ddl.hpp"
#include "erdc/codegen/plan_exec.hpp"
#include "erdc/db/consistency.hpp"
#include "erdc/db/snapshot.hpp"
#include "erdc/dsl.hpp"
#include "erdc/term.hpp"
#include "erdc/validate.hpp"
#include "erdc/xml.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace {

using namespace erdc;
namespace t = erdc::testing;

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

LoweredErd corpusModel(const std::string& file) {
  return lowerErd(parseDsl(t::readFile(t::corpusDir() / file), file));
}

// 1. Transaction laws and abort atomicity.
std::string transactionLaws() {
  t::Rng rng(1001);
  int aborted = 0;
  const int cases = 1200;
  for (int i = 0; i < cases; ++i) {
    const db::Store s = t::lawStore(rng);
    const std::string before = db::renderSnapshot(s);
    const auto p = t::randomProgram(rng, s, 8);
    const db::Transaction tx = t::compile(p);
    const db::TError e = t::randomError(rng);
    const std::string at = "case " + std::to_string(i);

    const db::RunResult law1 = db::runT(db::bindT(db::errorT(e), [tx](const db::Datum&) { return tx; }), s);
    require(law1.store == s && law1.result == db::CommitResult(db::Aborted{e}), at + ": errorT e >>= k");

    const db::RunResult plain = db::runT(tx, s);
    const db::RunResult law2 = db::runT(db::bindT(tx, [e](const db::Datum&) { return db::errorT(e); }), s);
    const db::CommitResult expected2 = plain.result.aborted() ? plain.result : db::CommitResult(db::Aborted{e});
    require(law2.store == s && law2.result == expected2, at + ": t >>= const (errorT e)");

    const db::RunResult law3 = db::runT(db::errorT(e), s);
    require(law3.store == s && law3.result == db::CommitResult(db::Aborted{e}), at + ": runT (errorT e)");

    const auto ref = t::referenceRun(p, s);
    require(plain.store == ref.store && plain.result.aborted() == ref.error.has_value(), at + ": reference replay");
    for (const db::RunResult* r : {&law1, &law2, &law3, &plain})
      if (r->result.aborted()) {
        require(db::renderSnapshot(r->store) == before && r->store == s, at + ": aborted store changed");
        ++aborted;
      }
  }
  return std::to_string(cases) + " cases, " + std::to_string(aborted) + " aborted runs left the store bit-identical";
}

// 2. newLecture signature.
std::string newLectureSignature() {
  const codegen::GenModule gen = codegen::generateAccessModule(corpusModel("university.erd"), codegen::cppBackend());
  const codegen::ManifestEntry* entry = nullptr;
  for (const auto& m : gen.manifest)
    if (m.symbol == "newLecture") entry = &m;
  require(entry != nullptr, "no newLecture in manifest");
  require(entry->kind == codegen::SymbolKind::NewOperation, "newLecture is not a new-operation");
  const std::vector<std::string> want{"LecturerKey", "Int", "String", "optional Int"};
  require(entry->params == want, "params: " + codegen::renderManifestEntry(*entry));
  require(entry->result == "Lecture", "result " + entry->result);
  return codegen::renderManifestEntry(*entry);
}

// 3. Lowering cases.
const AttributeDecl* attribute(const LoweredErd& l, const std::string& entity, const std::string& name) {
  const LoweredEntity* e = l.findEntity(entity);
  if (!e) return nullptr;
  for (const auto& a : e->attributes)
    if (a.name == name) return &a;
  return nullptr;
}

std::vector<std::string> obligationsOf(const LoweredErd& l) {
  std::vector<std::string> out;
  for (const auto& o : l.obligations) out.push_back(describeObligation(o));
  return out;
}

void requireFk(const LoweredErd& l, const std::string& holder, const std::string& column, const std::string& target,
               bool nullable, KeyClass keyClass) {
  const AttributeDecl* a = attribute(l, holder, column);
  require(a != nullptr, l.name + ": no FK " + holder + "." + column);
  require(std::holds_alternative<KeyDom>(a->domain) && std::get<KeyDom>(a->domain).target == target,
          l.name + ": FK target");
  require(a->nullable == nullable, l.name + ": FK nullability");
  require(a->keyClass == keyClass, l.name + ": FK key class");
  require(l.junctions.empty(), l.name + ": unexpected junction");
}

std::string loweringCases() {
  LoweredErd l = corpusModel("case_01_11.erd");
  requireFk(l, "Person", "Passport_document_Key", "Passport", false, KeyClass::Unique);
  require(obligationsOf(l) == std::vector<std::string>{"UniqueAttr Passport.Number",
                                                      "UniqueAttr Person.Passport_document_Key",
                                                      "ForeignKeyExists Person.Passport_document_Key"},
          "(0,1):(1,1) obligations");

  l = corpusModel("case_01_01.erd");
  requireFk(l, "Desk", "Worker_occupant_Key", "Worker", true, KeyClass::Unique);
  require(obligationsOf(l) == std::vector<std::string>{"UniqueAttr Desk.Worker_occupant_Key",
                                                      "ForeignKeyExists Desk.Worker_occupant_Key"},
          "(0,1):(0,1) obligations");

  l = corpusModel("case_01_mn.erd");
  requireFk(l, "Player", "Team_club_Key", "Team", true, KeyClass::NoKey);
  require(obligationsOf(l) == std::vector<std::string>{"ForeignKeyExists Player.Team_club_Key",
                                                      "MinCardinality(2) Player.Team_club_Key",
                                                      "MaxCardinality(5) Player.Team_club_Key"},
          "(0,1):(m,n) obligations");

  l = corpusModel("case_11_0n.erd");
  requireFk(l, "Order", "Customer_buyer_Key", "Customer", false, KeyClass::NoKey);
  require(obligationsOf(l) == std::vector<std::string>{"ForeignKeyExists Order.Customer_buyer_Key",
                                                      "MaxCardinality(3) Order.Customer_buyer_Key"},
          "(1,1):(0,n) obligations");

  l = corpusModel("case_nm.erd");
  require(l.junctions.size() == 1 && l.junctions[0].name == "Enrollment", "n:m junction");
  require(std::get<KeyDom>(l.junctions[0].leftKey.domain).target == "Student" &&
              std::get<KeyDom>(l.junctions[0].rightKey.domain).target == "Course",
          "n:m junction keys");
  for (const auto& e : l.entities)
    for (const auto& a : e.attributes) require(!std::holds_alternative<KeyDom>(a.domain), "n:m added an entity FK");
  require(obligationsOf(l) == std::vector<std::string>{"UniqueAttr Student.MatNum", "UniqueAttr Course.Code",
                                                      "ForeignKeyExists Enrollment.Student_attendees_Key",
                                                      "ForeignKeyExists Enrollment.Course_courses_Key",
                                                      "PairDuplicate Enrollment",
                                                      "MinCardinality(1) Enrollment.Student_attendees_Key",
                                                      "MaxCardinality(6) Enrollment.Student_attendees_Key"},
          "n:m obligations");

  const ErdTerm both = parseDsl(t::readFile(t::corpusDir() / "case_both_min.erd"));
  const auto ds = validateErd(both);
  require(ds.size() == 1 && ds[0].severity == Severity::Error && ds[0].code == DiagCode::UnsupportedBothMinPositive,
          "both-mins-positive diagnostic");
  bool threw = false;
  try {
    lowerErd(both);
  } catch (const UnsupportedRelationship& e) {
    threw = e.relationship() == "R";
  }
  require(threw, "both-mins-positive lowering");
  return "6 corpus models, structure exact";
}

// 4. Error taxonomy.
struct Session {
  codegen::AccessPlan plan;
  db::Store store;
  explicit Session(const LoweredErd& l) : plan(codegen::buildAccessPlan(l)), store(db::emptyStore(l)) {}
  db::CommitResult run(std::string_view sym, std::vector<codegen::Arg> args) {
    db::RunResult r = db::runT(codegen::interpret(plan, sym, std::move(args)), store);
    store = std::move(r.store);
    return r.result;
  }
  db::Key create(std::string_view sym, std::vector<codegen::Arg> args) {
    const db::CommitResult r = run(sym, std::move(args));
    require(r.committed(), std::string(sym) + " aborted");
    return std::get<db::Row>(r.value()).at(0).asKey();
  }
};

std::string errorTaxonomy() {
  std::map<db::TErrorKind, int> seen;
  int step = 0;
  auto expect = [&](Session& s, std::string_view sym, std::vector<codegen::Arg> args, db::TErrorKind kind) {
    ++step;
    const db::Store before = s.store;
    const db::CommitResult r = s.run(sym, std::move(args));
    require(r.aborted(), "step " + std::to_string(step) + " committed");
    require(r.error().kind == kind, "step " + std::to_string(step) + ": got " + db::tErrorKindName(r.error().kind) +
                                        ", want " + db::tErrorKindName(kind));
    require(s.store == before, "step " + std::to_string(step) + " changed the store");
    ++seen[r.error().kind];
  };
  using db::Value;

  Session uni(corpusModel("university.erd"));
  const db::Key ada = uni.create("newLecturer", {Value("Ada")});
  uni.create("newLecture", {Value(ada), Value(1), Value("Logic"), Value()});
  expect(uni, "getLecture", {Value(db::Key{42})}, db::TErrorKind::KeyNotExistsError);
  expect(uni, "newLecture", {Value(ada), Value(1), Value("Logic again"), Value(2)}, db::TErrorKind::UniqueError);

  Session nm(corpusModel("case_nm.erd"));
  const db::Key c = nm.create("newCourse", {Value("C1"), Value()});
  const db::Key st = nm.create("newStudent", {std::vector<Value>{Value(c)}, Value(7), Value("Ann")});
  expect(nm, "newEnrollment", {Value(st), Value(c)}, db::TErrorKind::DuplicateKeyError);

  Session team(corpusModel("case_01_mn.erd"));
  std::vector<db::Key> players;
  for (int i = 0; i < 6; ++i) players.push_back(team.create("newPlayer", {Value("p"), Value(i)}));
  expect(team, "newTeam", {std::vector<Value>{Value(players[0])}, Value("Solo")}, db::TErrorKind::MinError);
  const db::Key red =
      team.create("newTeam", {std::vector<Value>{Value(players[0]), Value(players[1])}, Value("Red")});
  for (int i = 2; i < 5; ++i) require(team.run("linkPlayer_club", {Value(players[i]), Value(red)}).committed(), "link");
  require(team.run("checkAllData", {}).committed(), "team consistent");
  expect(team, "linkPlayer_club", {Value(players[5]), Value(red)}, db::TErrorKind::MaxError);

  ++step;
  const db::RunResult r = db::runT(db::addFact("Lecture", {Value(1)}), uni.store);
  require(r.result.aborted() && r.result.error().kind == db::TErrorKind::UserDefinedError, "schema mismatch kind");
  require(r.store == uni.store, "schema mismatch changed the store");
  ++seen[r.result.error().kind];

  for (int k = 0; k <= static_cast<int>(db::TErrorKind::UserDefinedError); ++k)
    require(seen[static_cast<db::TErrorKind>(k)] == 1,
            std::string(db::tErrorKindName(static_cast<db::TErrorKind>(k))) + " not raised exactly once");
  return std::to_string(step) + " scripted failures, each kind once";
}

// 5. Oracle equivalence.
std::string oracleEquivalence() {
  t::Rng rng(5005);
  const int pairs = 520;
  int consistent = 0, rowsChecked = 0;
  for (int i = 0; i < pairs; ++i) {
    const LoweredErd l = lowerErd(t::randomValidErd(rng, 5, 5));
    const codegen::AccessPlan plan = codegen::buildAccessPlan(l);
    const double noise = i % 4 == 0 ? 0.0 : (i % 4 == 1 ? 0.01 : 0.1);
    const db::Store store = t::randomStoreFor(rng, l, 1 + i % 50, noise);
    for (const auto& [name, rel] : store.relations()) require(rel.rows().size() <= 50, "too many rows");
    const std::string at = "pair " + std::to_string(i);
    const auto vs = db::checkConsistency(l, store);
    const db::RunResult all = db::runT(codegen::interpret(plan, "checkAllData", {}), store);
    require(vs.empty() == all.result.committed(), at + ": checkAllData disagrees");
    require(vs.empty() == t::reinsertionAccepted(plan, store), at + ": re-insertion disagrees");
    if (vs.empty()) {
      ++consistent;
      continue;
    }
    require(db::errorKindFor(vs.front().obligation.kind) == all.result.error().kind, at + ": first kind");
    const auto findings = t::bruteForceViolations(l, store);
    require(findings.size() == vs.size(), at + ": brute-force count");
    // Every violation: the entry check of its row raises the kind of the
    // row's first violated obligation.
    for (const auto& [name, rel] : store.relations()) {
      for (std::size_t k = 0; k < rel.rows().size(); ++k) {
        const db::Row& row = rel.rows()[k];
        const std::int64_t id = rel.keyed() ? row[0].asKey().value : -1 - static_cast<std::int64_t>(k);
        std::optional<std::size_t> first;
        for (const auto& [ob, relation, key] : findings)
          if (relation == name && key == id && (!first || ob < *first)) first = ob;
        if (!first) continue;
        const db::RunResult r = db::runT(codegen::interpret(plan, "check" + name + "Entry", {row}), store);
        require(r.result.aborted() && r.result.error().kind == db::errorKindFor(l.obligations[*first].kind),
                at + ": entry check of " + name);
        ++rowsChecked;
      }
    }
  }
  // The compiled university module against the same oracle.
  const LoweredErd uni = corpusModel("university.erd");
  for (int i = 0; i < 100; ++i) {
    const db::Store store = t::randomStoreFor(rng, uni, 1 + i % 50, 0.05);
    const auto vs = db::checkConsistency(uni, store);
    const db::RunResult r = db::runT(Uni::checkAllData().untyped(), store);
    require(vs.empty() == r.result.committed(), "compiled Uni checkAllData disagrees");
    if (!vs.empty()) require(db::errorKindFor(vs.front().obligation.kind) == r.result.error().kind, "compiled kind");
  }
  return std::to_string(pairs) + " pairs (" + std::to_string(consistent) + " consistent), " +
         std::to_string(rowsChecked) + " violating rows, plus 100 compiled-module stores";
}

// 6. Round trips.
std::string roundTrips() {
  t::Rng rng(6006);
  const int n = 500;
  t::ErdShape termShape;
  termShape.oddArity = true;
  t::ErdShape dslShape;
  dslShape.finiteFloats = true;
  t::ErdShape xmlShape;
  xmlShape.xmlChars = true;
  const auto dir = t::scratchDir("acceptance_roundtrip");
  for (int i = 0; i < n; ++i) {
    const ErdTerm a = t::randomErd(rng, termShape);
    require(parseErdTerm(serializeErd(a)) == a, "term #" + std::to_string(i));
    const ErdTerm b = t::randomErd(rng, dslShape);
    require(parseDsl(renderDsl(b)) == b, "dsl #" + std::to_string(i));
    const ErdTerm c = t::randomErd(rng, xmlShape);
    const XmlImport x = importXml(renderXml(c));
    require(x.erd == c && x.warnings.empty(), "xml #" + std::to_string(i));
    const db::Store s = t::randomAnyStore(rng);
    db::saveStore(s, dir / "s.dbsnap");
    require(db::loadStore(dir / "s.dbsnap") == s, "store #" + std::to_string(i));
  }
  return std::to_string(n) + " instances each for term, DSL, XML and snapshot";
}

// 7. Crash safety.
std::string crashSafety() {
  t::Rng rng(7007);
  const auto path = t::scratchDir("acceptance_crash") / "db.dbsnap";
  db::Store current = t::randomAnyStore(rng);
  db::saveStore(current, path);
  int faults = 0, kept = 0, replaced = 0;
  const int phases = static_cast<int>(db::SavePhase::DirSynced) + 1;
  while (faults < 100) {
    const db::Store next = t::randomAnyStore(rng);
    const int phase = faults % phases;
    const pid_t pid = fork();
    require(pid >= 0, "fork failed");
    if (pid == 0) {
      try {
        db::saveStore(next, path, [phase](db::SavePhase p) {
          if (static_cast<int>(p) == phase) _exit(77);
        });
      } catch (...) {
        _exit(1);
      }
      _exit(0);
    }
    int status = 0;
    waitpid(pid, &status, 0);
    require(WIFEXITED(status) && WEXITSTATUS(status) == 77, "fault not injected");
    ++faults;
    db::Store loaded;
    try {
      loaded = db::loadStore(path);
    } catch (const Error& e) {
      throw Failure{"corrupt snapshot after fault " + std::to_string(faults) + ": " + e.what()};
    }
    if (loaded == current) {
      ++kept;
    } else {
      require(loaded == next, "snapshot is neither old nor new after fault " + std::to_string(faults));
      ++replaced;
      current = next;
    }
  }
  return std::to_string(faults) + " faults, 0 corrupt (" + std::to_string(kept) + " old, " +
         std::to_string(replaced) + " new)";
}

// 8. Compile probe.
std::string compileProbe() {
  int probed = 0;
  for (const char* file :
       {"university.erd", "case_01_11.erd", "case_01_01.erd", "case_01_mn.erd", "case_11_0n.erd", "case_nm.erd"}) {
    const LoweredErd l = corpusModel(file);
    const auto dir = t::scratchDir(std::string("acceptance_probe_") + l.name);
    const codegen::GenModule gen = codegen::generateAccessModule(l, codegen::cppBackend());
    codegen::writeModule(gen, codegen::generateDDL(l), dir);
    const codegen::ProbeResult r = codegen::runCompileProbe(codegen::cppBackend(), dir / gen.files[0].path,
                                                            ERDC_INCLUDE_DIR);
    require(r.ok(), std::string(file) + ":\n" + r.output);
    ++probed;
  }
  return std::to_string(probed) + " generated modules, 0 errors";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"transaction laws", transactionLaws},     {"newLecture signature", newLectureSignature},
      {"lowering cases", loweringCases},         {"error taxonomy", errorTaxonomy},
      {"oracle equivalence", oracleEquivalence}, {"round trips", roundTrips},
      {"crash safety", crashSafety},             {"compile probe", compileProbe},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string status = "PASS", detail;
    try {
      detail = criteria[i].second();
    } catch (const Failure& f) {
      status = "FAIL";
      detail = f.what;
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = std::string("exception: ") + e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    failed += status == "FAIL";
    std::cout << status << " " << (i + 1) << " " << criteria[i].first << ": " << detail << " [" << ms << " ms]"
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
