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

#include <iosfwd>
#include <string>
#include <vector>

namespace erdc::cli {

enum ExitStatus : int {
  kOk = 0,
  kInvalid = 1,      // validation errors
  kIoFailure = 2,    // unreadable, unparseable or unwritable input/output
  kViolations = 3,   // consistency violations found
};

enum class Format { Auto, Dsl, Xml, Term };

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

/// Input "-" reads stdin; otherwise the format follows the extension
/// (.erd, .erdx, .erdterm) unless given explicitly.
int cmdCheck(const std::string& input, Format format, Streams io);
/// Output "-" or empty writes to stdout.
int cmdLower(const std::string& input, const std::string& output, Format format, Streams io);
int cmdCompile(const std::string& input, const std::string& outDir, const std::string& backend, Format format,
               Streams io);
int cmdVerify(const std::string& lowered, const std::string& snapshot, Streams io);

/// Parses the command line and dispatches.
int run(const std::vector<std::string>& args, Streams io);

}  // namespace erdc::cli
