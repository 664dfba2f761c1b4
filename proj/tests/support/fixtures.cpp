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
#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace erdc::testing {

ErdTerm universityErd() {
  ErdTerm e;
  e.name = "Uni";
  e.entities.push_back({"Lecture",
                        {{"Id", IntDom{}, KeyClass::Unique, false},
                         {"Title", StringDom{}, KeyClass::NoKey, false},
                         {"Hours", IntDom{4}, KeyClass::NoKey, true}}});
  e.entities.push_back({"Lecturer", {{"Name", StringDom{}, KeyClass::NoKey, false}}});
  e.relationships.push_back(
      {"Teaching", {{"Lecturer", "taught_by", Exactly{1}}, {"Lecture", "teaches", Range{0, std::nullopt}}}});
  return e;
}

ErdTerm twoEntityErd(Cardinality a, Cardinality b, std::string roleA, std::string roleB) {
  ErdTerm e;
  e.name = "M";
  e.entities.push_back({"A", {{"x", IntDom{}, KeyClass::NoKey, false}}});
  e.entities.push_back({"B", {{"y", IntDom{}, KeyClass::NoKey, false}}});
  e.relationships.push_back({"R", {{"A", std::move(roleA), a}, {"B", std::move(roleB), b}}});
  return e;
}

std::filesystem::path corpusDir() { return ERDC_TEST_CORPUS; }

std::filesystem::path scratchDir(const std::string& name) {
  auto dir = std::filesystem::path(ERDC_TEST_SCRATCH) / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string readFile(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

}  // namespace erdc::testing
