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
#include "erdc/db/database.hpp"

#include "erdc/db/snapshot.hpp"

namespace erdc::db {

Database::Database(Store initial) : current_(std::make_shared<const Store>(std::move(initial))) {}

Database::Database(const std::filesystem::path& path, Store initial) : path_(path) {
  if (std::filesystem::exists(path))
    current_ = std::make_shared<const Store>(loadStore(path));
  else
    current_ = std::make_shared<const Store>(std::move(initial));
}

std::shared_ptr<const Store> Database::snapshot() const {
  std::lock_guard lock(snapshotMutex_);
  return current_;
}

std::vector<Row> Database::queryAll(const Query& q) const { return runAll(q, *snapshot()); }

std::optional<Row> Database::queryOne(const Query& q) const { return runOne(q, *snapshot()); }

CommitResult Database::run(const Transaction& t) {
  std::lock_guard writer(writerMutex_);
  auto before = snapshot();
  RunResult r = runT(t, *before);
  if (r.result.aborted()) return r.result;
  if (path_) {
    try {
      saveStore(r.store, *path_);
    } catch (const std::exception& e) {
      return Aborted{TError{TErrorKind::UserDefinedError, std::string("cannot persist: ") + e.what()}};
    }
  }
  auto next = std::make_shared<const Store>(std::move(r.store));
  std::lock_guard lock(snapshotMutex_);
  current_ = std::move(next);
  return r.result;
}

}  // namespace erdc::db
