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

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>

#include "erdc/db/store.hpp"

namespace erdc::db {

class IOError : public Error {
 public:
  using Error::Error;
};

class CorruptStoreError : public Error {
 public:
  CorruptStoreError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// `.dbsnap` text, version 1:
///
///   dbsnap/1
///   relation<TAB>Lecture<TAB>1<TAB>3<TAB>2<TAB>_key<TAB>Key(Lecture)<TAB>Title<TAB>String<TAB>Hours<TAB>Int?
///   k:1<TAB>s:Logic<TAB>N
///   k:2<TAB>s:Databases<TAB>i:4
///   end
///
/// The relation line carries name, keyed flag, nextKey, row count, then a
/// name/domain pair per column; a trailing '?' marks a nullable column.
/// Domains are Int, Float, Char, String, Bool, Date, Key(T) and User(T).
/// Row fields are tagged values: N, i:<int>, f:<float>, c:<code point>,
/// s:<text>, b:0|1, d:<epoch seconds>, k:<key>, o:<tag length>:<tag><payload>.
/// Floats use the shortest round-trip form; NaN is written as
/// f:nan:<16 hex digits of the bit pattern>. In every field backslash, tab,
/// newline and carriage return are escaped as \\ \t \n \r.
std::string renderSnapshot(const Store& store);
/// Throws CorruptStoreError with the 1-based offending line.
Store parseSnapshot(std::string_view text);

enum class SavePhase { TempOpened, PartialWrite, TempWritten, TempSynced, Renamed, DirSynced };

/// Called after each phase of saveStore; used to inject faults.
using SaveHook = std::function<void(SavePhase)>;

/// Writes a temporary file next to `path`, syncs it, renames it over
/// `path` and syncs the directory. A crash at any point leaves either the
/// old or the new snapshot at `path`. Throws IOError.
void saveStore(const Store& store, const std::filesystem::path& path, const SaveHook& hook = {});
/// Throws IOError if unreadable and CorruptStoreError if malformed.
Store loadStore(const std::filesystem::path& path);

}  // namespace erdc::db
