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

#include <filesystem>
#include <string>

#include "erdc/erd.hpp"
#include "erdc/lower.hpp"

namespace erdc::testing {

inline constexpr const char* kUniversityDsl =
    "erd Uni { entity Lecture { Id: Int unique; Title: String; Hours: Int default 4 null; } "
    "relationship Teaching { Lecturer as taught_by exactly 1; Lecture as teaches range 0..*; } "
    "entity Lecturer { Name: String; } }";

/// The university model written out as a term by hand.
ErdTerm universityErd();

/// Entities A and B (one Int attribute each) joined by relationship R.
ErdTerm twoEntityErd(Cardinality a, Cardinality b, std::string roleA = "ra", std::string roleB = "rb");

/// Source corpus directory and a fresh scratch directory for a test.
std::filesystem::path corpusDir();
std::filesystem::path scratchDir(const std::string& name);

std::string readFile(const std::filesystem::path& p);
void writeFile(const std::filesystem::path& p, const std::string& text);

}  // namespace erdc::testing
