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
#include <memory>
#include <mutex>
#include <optional>

#include "erdc/db/transaction.hpp"

namespace erdc::db {

/// Serializes transactions and publishes immutable snapshots to readers.
/// Queries see the last committed state and never wait for a running
/// transaction. Thread-safe; single process.
class Database {
 public:
  explicit Database(Store initial = {});
  /// Loads `path` if it exists, otherwise starts from `initial`. Every
  /// commit is saved to `path` before it becomes visible.
  Database(const std::filesystem::path& path, Store initial);

  Database(const Database&) = delete;
  Database& operator=(const Database&) = delete;

  std::shared_ptr<const Store> snapshot() const;

  std::vector<Row> queryAll(const Query& q) const;
  std::optional<Row> queryOne(const Query& q) const;

  /// Runs `t` exclusively. If saving the new state fails the commit is
  /// turned into Aborted(UserDefinedError) and the state is unchanged.
  CommitResult run(const Transaction& t);

 private:
  mutable std::mutex snapshotMutex_;
  std::shared_ptr<const Store> current_;
  std::mutex writerMutex_;
  std::optional<std::filesystem::path> path_;
};

}  // namespace erdc::db
