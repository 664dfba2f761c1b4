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

#include <sstream>

#include "cli.hpp"
#include "erdc/db/consistency.hpp"
#include "erdc/db/snapshot.hpp"
#include "erdc/dsl.hpp"
#include "erdc/lower.hpp"
#include "erdc/term.hpp"
#include "erdc/xml.hpp"
#include "fixtures.hpp"

namespace erdc::cli {
namespace {

namespace fs = std::filesystem;

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  Invocation r;
  r.code = run(args, {in, out, err});
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string corpus(const std::string& name) { return (erdc::testing::corpusDir() / name).string(); }

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

TEST(CliCheckTest, ValidFileIsSilent) {
  const Invocation r = invoke({"check", corpus("university.erd")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "");
}

TEST(CliCheckTest, UnsupportedRelationshipIsOneErrorLine) {
  const Invocation r = invoke({"check", corpus("case_both_min.erd")});
  EXPECT_EQ(r.code, kInvalid);
  EXPECT_EQ(lines(r.out), 1u);
  EXPECT_EQ(r.out.rfind("error UNSUPPORTED_BOTH_MIN_POSITIVE R ", 0), 0u);
}

TEST(CliCheckTest, WarningsDoNotFail) {
  const Invocation r = invoke({"check", corpus("case_nm.erd")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("warning PKEY_DEMOTED Student.MatNum ", 0), 0u);
}

TEST(CliCheckTest, MissingAndUnparseableFiles) {
  EXPECT_EQ(invoke({"check", "/nonexistent/x.erd"}).code, kIoFailure);
  const auto dir = erdc::testing::scratchDir("cli_check");
  erdc::testing::writeFile(dir / "bad.erd", "erd {");
  const Invocation r = invoke({"check", (dir / "bad.erd").string()});
  EXPECT_EQ(r.code, kIoFailure);
  EXPECT_NE(r.err.find("bad.erd"), std::string::npos);
  erdc::testing::writeFile(dir / "x.txt", "erd X { }");
  EXPECT_EQ(invoke({"check", (dir / "x.txt").string()}).code, kIoFailure);
  EXPECT_EQ(invoke({"check", (dir / "x.txt").string(), "--format", "dsl"}).code, kOk);
}

TEST(CliCheckTest, AllInputFormats) {
  const auto dir = erdc::testing::scratchDir("cli_formats");
  const ErdTerm u = erdc::testing::universityErd();
  erdc::testing::writeFile(dir / "u.erdx", renderXml(u));
  erdc::testing::writeFile(dir / "u.erdterm", serializeErd(u));
  EXPECT_EQ(invoke({"check", (dir / "u.erdx").string()}).code, kOk);
  EXPECT_EQ(invoke({"check", (dir / "u.erdterm").string()}).code, kOk);
  EXPECT_EQ(invoke({"check", "-", "--format", "xml"}, renderXml(u)).code, kOk);
  EXPECT_EQ(invoke({"--format", "term", "check", "-"}, serializeErd(u)).code, kOk);
  EXPECT_EQ(invoke({"check", "-", "--format", "dsl"}, "erd {").code, kIoFailure);
  EXPECT_EQ(invoke({"check", "-", "--format", "xml"}, "<erd>").code, kIoFailure);
}

TEST(CliLowerTest, UniversityHasForeignKey) {
  const auto dir = erdc::testing::scratchDir("cli_lower");
  const auto out = dir / "u.lowered";
  EXPECT_EQ(invoke({"lower", corpus("university.erd"), "-o", out.string()}).code, kOk);
  const LoweredErd l = parseLowered(erdc::testing::readFile(out));
  ASSERT_NE(l.findEntity("Lecture"), nullptr);
  EXPECT_EQ(l.findEntity("Lecture")->attributes.back().name, "Lecturer_taught_by_Key");
  const Invocation toStdout = invoke({"lower", corpus("university.erd")});
  EXPECT_EQ(toStdout.out, erdc::testing::readFile(out));
}

TEST(CliLowerTest, EmptyAndInvalid) {
  const Invocation empty = invoke({"lower", "-", "--format", "dsl"}, "erd E { }");
  EXPECT_EQ(empty.code, kOk);
  EXPECT_EQ(parseLowered(empty.out), (LoweredErd{"E", {}, {}, {}, {}}));
  EXPECT_EQ(invoke({"lower", corpus("case_both_min.erd")}).code, kInvalid);
  EXPECT_EQ(invoke({"lower", corpus("university.erd"), "-o", "/nonexistent/dir/x.lowered"}).code, kIoFailure);
}

TEST(CliCompileTest, WritesModuleManifestAndSchema) {
  const auto dir = erdc::testing::scratchDir("cli_compile");
  const Invocation r = invoke({"compile", corpus("university.erd"), "-o", dir.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(fs::exists(dir / "Uni" / "Uni.hpp"));
  EXPECT_TRUE(fs::exists(dir / "schema.sql"));
  const std::string manifest = erdc::testing::readFile(dir / "manifest.txt");
  EXPECT_NE(manifest.find("newLecture: new-operation (LecturerKey, Int, String, optional Int) -> Lecture"),
            std::string::npos);
  EXPECT_EQ(lines(r.out), 3u);
}

TEST(CliCompileTest, RerunIsByteIdentical) {
  const auto a = erdc::testing::scratchDir("cli_compile_a");
  const auto b = erdc::testing::scratchDir("cli_compile_b");
  ASSERT_EQ(invoke({"compile", corpus("case_nm.erd"), "-o", a.string(), "--backend", "cpp"}).code, kOk);
  ASSERT_EQ(invoke({"compile", corpus("case_nm.erd"), "-o", b.string()}).code, kOk);
  for (const char* f : {"manifest.txt", "schema.sql", "CaseNm/CaseNm.hpp"})
    EXPECT_EQ(erdc::testing::readFile(a / f), erdc::testing::readFile(b / f)) << f;
}

TEST(CliCompileTest, Failures) {
  const auto dir = erdc::testing::scratchDir("cli_compile_fail");
  const Invocation r = invoke({"compile", corpus("university.erd"), "-o", dir.string(), "--backend", "cobol"});
  EXPECT_EQ(r.code, kIoFailure);
  EXPECT_NE(r.err.find("cobol"), std::string::npos);
  EXPECT_EQ(invoke({"compile", corpus("case_both_min.erd"), "-o", dir.string()}).code, kInvalid);
  EXPECT_EQ(invoke({"compile", corpus("university.erd")}).code, kIoFailure);
  erdc::testing::writeFile(dir / "file", "");
  EXPECT_EQ(invoke({"compile", corpus("university.erd"), "-o", (dir / "file").string()}).code, kIoFailure);
}

TEST(CliVerifyTest, ExitCodes) {
  const auto dir = erdc::testing::scratchDir("cli_verify");
  const LoweredErd l = lowerErd(erdc::testing::universityErd());
  erdc::testing::writeFile(dir / "u.lowered", serializeLowered(l));
  db::Store s = db::emptyStore(l);
  const db::Key ada = s.insertNew("Lecturer", {"Ada"});
  s.insertNew("Lecture", {1, "Logic", 4, ada});
  db::saveStore(s, dir / "good.dbsnap");
  const std::string lowered = (dir / "u.lowered").string();
  Invocation r = invoke({"verify", lowered, (dir / "good.dbsnap").string()});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "");

  s.insertNew("Lecture", {2, "DB", db::Value(), db::Key{9}});
  db::saveStore(s, dir / "dangling.dbsnap");
  r = invoke({"verify", lowered, (dir / "dangling.dbsnap").string()});
  EXPECT_EQ(r.code, kViolations);
  EXPECT_EQ(lines(r.out), 1u);
  EXPECT_NE(r.out.find("ForeignKeyExists"), std::string::npos);

  erdc::testing::writeFile(dir / "corrupt.dbsnap", "dbsnap/1\nrelation\tLecture\n");
  EXPECT_EQ(invoke({"verify", lowered, (dir / "corrupt.dbsnap").string()}).code, kIoFailure);
  db::saveStore(db::Store{}, dir / "other.dbsnap");
  EXPECT_EQ(invoke({"verify", lowered, (dir / "other.dbsnap").string()}).code, kIoFailure);
  EXPECT_EQ(invoke({"verify", lowered, (dir / "missing.dbsnap").string()}).code, kIoFailure);
  EXPECT_EQ(invoke({"verify", (dir / "good.dbsnap").string(), (dir / "good.dbsnap").string()}).code, kIoFailure);
}

TEST(CliTest, UsageAndVersion) {
  Invocation r = invoke({"--version"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("erdc ", 0), 0u);
  EXPECT_EQ(invoke({}).code, kIoFailure);
  EXPECT_EQ(invoke({"frobnicate"}).code, kIoFailure);
  EXPECT_EQ(invoke({"check"}).code, kIoFailure);
  EXPECT_EQ(invoke({"check", "x.erd", "--format", "yaml"}).code, kIoFailure);
  r = invoke({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("compile"), std::string::npos);
}

}  // namespace
}  // namespace erdc::cli
