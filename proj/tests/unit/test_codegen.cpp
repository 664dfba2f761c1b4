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

#include <filesystem>

#include "erdc/codegen/codegen.hpp"
#include "erdc/codegen/ddl.hpp"
#include "erdc/dsl.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

namespace erdc::codegen {
namespace {

LoweredErd university() { return lowerErd(erdc::testing::universityErd()); }

LoweredErd corpus(const std::string& file) {
  return lowerErd(parseDsl(erdc::testing::readFile(erdc::testing::corpusDir() / file)));
}

TEST(ManifestTest, EmptyModuleIsHeaderOnly) {
  GenModule gen;
  gen.moduleName = "X";
  gen.backend = "cpp";
  EXPECT_EQ(renderManifest(gen), "manifest erdc/1\nmodule X\nbackend cpp\n");
}

TEST(ManifestTest, UniversityListsNewLecture) {
  const GenModule gen = generateAccessModule(university(), cppBackend());
  const std::string text = renderManifest(gen);
  EXPECT_NE(text.find("\nnewLecture: new-operation (LecturerKey, Int, String, optional Int) -> Lecture\n"),
            std::string::npos)
      << text;
  EXPECT_NE(text.find("\nlectureEntry: entry-predicate (LectureKey) -> [Lecture] [internal]\n"), std::string::npos);
  EXPECT_NE(text.find("\n0 UniqueAttr Lecture.Id: newLecture updateLecture checkLectureEntry\n"), std::string::npos);
  ASSERT_EQ(gen.files.size(), 1u);
  EXPECT_EQ(gen.files[0].path, "Uni/Uni.hpp");
  EXPECT_EQ(gen.moduleName, "Uni");
}

TEST(ManifestTest, EntryRendering) {
  ManifestEntry e{"f", SymbolKind::Role, {"AKey"}, "[BKey]", false, false};
  EXPECT_EQ(renderManifestEntry(e), "f: role (AKey) -> [BKey]");
  e.kind = SymbolKind::KeyType;
  e.params.clear();
  e.result.clear();
  EXPECT_EQ(renderManifestEntry(e), "f: key-type");
}

TEST(ManifestTest, EveryKindHasAName) {
  std::set<std::string_view> names;
  for (std::size_t k = 0; k < kSymbolKindCount; ++k) names.insert(symbolKindName(static_cast<SymbolKind>(k)));
  EXPECT_EQ(names.size(), kSymbolKindCount);
}

TEST(GenerateTest, Deterministic) {
  erdc::testing::Rng rng(81);
  for (int i = 0; i < 50; ++i) {
    const LoweredErd l = lowerErd(erdc::testing::randomValidErd(rng));
    const GenModule a = generateAccessModule(l, cppBackend());
    const GenModule b = generateAccessModule(l, cppBackend());
    EXPECT_EQ(a, b);
    EXPECT_EQ(renderManifest(a), renderManifest(b));
    EXPECT_EQ(generateDDL(l), generateDDL(l));
  }
}

TEST(GenerateTest, MissingTemplateIsUnsupported) {
  Backend partial = cppBackend();
  partial.name = "partial";
  partial.templates.erase(SymbolKind::Role);
  try {
    generateAccessModule(university(), partial);
    FAIL() << "expected UnsupportedByBackend";
  } catch (const UnsupportedByBackend& e) {
    EXPECT_EQ(e.kind(), SymbolKind::Role);
  }
  LoweredErd noRoles = university();
  noRoles.relationships.clear();
  noRoles.obligations.erase(noRoles.obligations.begin() + 1);
  noRoles.entities[0].attributes.pop_back();
  EXPECT_NO_THROW(generateAccessModule(noRoles, partial));
}

TEST(GenerateTest, BackendRegistry) {
  EXPECT_EQ(findBackend("cpp"), &cppBackend());
  EXPECT_EQ(findBackend("cobol"), nullptr);
  EXPECT_EQ(backendNames(), std::vector<std::string>{"cpp"});
  EXPECT_TRUE(cppBackend().compileProbe.has_value());
  for (SymbolKind k : cppBackend().emitOrder) EXPECT_TRUE(cppBackend().templates.count(k));
}

TEST(GenerateTest, EntityInternalsAreNotPublic) {
  const std::string text = generateAccessModule(university(), cppBackend()).files[0].text;
  EXPECT_NE(text.find("class Lecture {"), std::string::npos);
  EXPECT_NE(text.find("namespace internal"), std::string::npos);
  EXPECT_NE(text.find(" private:"), std::string::npos);
}

TEST(GenerateTest, WriteModuleLayout) {
  const auto dir = erdc::testing::scratchDir("codegen_write");
  const LoweredErd l = university();
  const GenModule gen = generateAccessModule(l, cppBackend());
  writeModule(gen, generateDDL(l), dir);
  EXPECT_TRUE(std::filesystem::exists(dir / "Uni" / "Uni.hpp"));
  EXPECT_EQ(erdc::testing::readFile(dir / "manifest.txt"), renderManifest(gen));
  EXPECT_EQ(erdc::testing::readFile(dir / "schema.sql"), generateDDL(l));
  erdc::testing::writeFile(dir / "blocker", "");
  EXPECT_THROW(writeModule(gen, "", dir / "blocker"), Error);
}

class CompileProbeTest : public ::testing::TestWithParam<std::string> {};

TEST_P(CompileProbeTest, GeneratedHeaderCompiles) {
  const LoweredErd l = corpus(GetParam());
  const auto dir = erdc::testing::scratchDir("probe_" + l.name);
  const GenModule gen = generateAccessModule(l, cppBackend());
  writeModule(gen, generateDDL(l), dir);
  const ProbeResult r = runCompileProbe(cppBackend(), dir / gen.files[0].path, ERDC_INCLUDE_DIR);
  EXPECT_TRUE(r.ok()) << r.output;
}

INSTANTIATE_TEST_SUITE_P(Corpus, CompileProbeTest,
                         ::testing::Values("university.erd", "case_01_11.erd", "case_01_01.erd", "case_01_mn.erd",
                                           "case_11_0n.erd", "case_nm.erd"),
                         [](const auto& info) {
                           std::string n = info.param.substr(0, info.param.find('.'));
                           for (char& c : n)
                             if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
                           return n;
                         });

TEST(CompileProbeNegativeTest, BrokenHeaderFails) {
  const auto dir = erdc::testing::scratchDir("probe_broken");
  erdc::testing::writeFile(dir / "bad.hpp", "int f() { return }\n");
  const ProbeResult r = runCompileProbe(cppBackend(), dir / "bad.hpp", ERDC_INCLUDE_DIR);
  EXPECT_FALSE(r.ok());
  EXPECT_NE(r.output.find("error"), std::string::npos);
  Backend none = cppBackend();
  none.compileProbe.reset();
  EXPECT_THROW(runCompileProbe(none, dir / "bad.hpp", ERDC_INCLUDE_DIR), GenerationError);
}

TEST(CompileProbePropertyTest, RandomModelsCompile) {
  erdc::testing::Rng rng(82);
  for (int i = 0; i < 4; ++i) {
    const LoweredErd l = lowerErd(erdc::testing::randomValidErd(rng, 4, 4));
    const auto dir = erdc::testing::scratchDir("probe_random_" + std::to_string(i));
    const GenModule gen = generateAccessModule(l, cppBackend());
    writeModule(gen, generateDDL(l), dir);
    const ProbeResult r = runCompileProbe(cppBackend(), dir / gen.files[0].path, ERDC_INCLUDE_DIR);
    EXPECT_TRUE(r.ok()) << serializeLowered(l) << r.output;
  }
}

}  // namespace
}  // namespace erdc::codegen
