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
#include "erdc/db/query.hpp"

#include "overloaded.hpp"

namespace erdc::db {

struct ScanNode {
  std::string relation;
};
struct JoinNode {
  Query left, right;
  std::vector<std::pair<std::string, std::string>> on;
};
struct FilterNode {
  Query input;
  RowPredicate predicate;
};
struct FilterEqNode {
  Query input;
  std::vector<std::pair<std::string, Value>> equalities;
};
struct ProjectNode {
  Query input;
  std::vector<std::string> columns;
};

struct Query::Node {
  std::variant<ScanNode, JoinNode, FilterNode, FilterEqNode, ProjectNode> v;
};

Query Query::scan(std::string relation) {
  return Query(std::make_shared<const Node>(Node{ScanNode{std::move(relation)}}));
}

Query Query::join(Query left, Query right, std::vector<std::pair<std::string, std::string>> on) {
  return Query(std::make_shared<const Node>(Node{JoinNode{std::move(left), std::move(right), std::move(on)}}));
}

Query Query::filter(Query q, RowPredicate p) {
  return Query(std::make_shared<const Node>(Node{FilterNode{std::move(q), std::move(p)}}));
}

Query Query::filterC(Query q, RowPredicate p) { return filter(std::move(q), std::move(p)); }

Query Query::filterEq(Query q, std::vector<std::pair<std::string, Value>> equalities) {
  return Query(std::make_shared<const Node>(Node{FilterEqNode{std::move(q), std::move(equalities)}}));
}

Query Query::project(Query q, std::vector<std::string> columns) {
  return Query(std::make_shared<const Node>(Node{ProjectNode{std::move(q), std::move(columns)}}));
}

std::size_t ResultSet::index(std::string_view column) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == column) return i;
  if (column.find('.') == std::string_view::npos) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const auto dot = columns[i].find('.');
      if (dot != std::string::npos && std::string_view(columns[i]).substr(dot + 1) == column) return i;
    }
  }
  throw UnknownColumn("<query>", std::string(column));
}

ResultSet evaluate(const Query& q, const Store& store) {
  return std::visit(
      Overloaded{
          [&](const ScanNode& n) {
            const Relation& rel = store.relation(n.relation);
            ResultSet rs;
            for (const auto& c : rel.columns()) rs.columns.push_back(n.relation + "." + c.name);
            rs.rows = rel.rows();
            return rs;
          },
          [&](const JoinNode& n) {
            ResultSet l = evaluate(n.left, store);
            ResultSet r = evaluate(n.right, store);
            std::vector<std::pair<std::size_t, std::size_t>> idx;
            for (const auto& [a, b] : n.on) idx.emplace_back(l.index(a), r.index(b));
            ResultSet out;
            out.columns = l.columns;
            out.columns.insert(out.columns.end(), r.columns.begin(), r.columns.end());
            for (const Row& x : l.rows) {
              for (const Row& y : r.rows) {
                bool match = true;
                for (const auto& [i, j] : idx) match = match && x[i] == y[j];
                if (!match) continue;
                Row row = x;
                row.insert(row.end(), y.begin(), y.end());
                out.rows.push_back(std::move(row));
              }
            }
            return out;
          },
          [&](const FilterNode& n) {
            ResultSet rs = evaluate(n.input, store);
            std::erase_if(rs.rows, [&](const Row& r) { return !n.predicate(r); });
            return rs;
          },
          [&](const FilterEqNode& n) {
            ResultSet rs = evaluate(n.input, store);
            std::vector<std::size_t> idx;
            for (const auto& e : n.equalities) idx.push_back(rs.index(e.first));
            std::erase_if(rs.rows, [&](const Row& r) {
              for (std::size_t i = 0; i < idx.size(); ++i)
                if (!(r[idx[i]] == n.equalities[i].second)) return true;
              return false;
            });
            return rs;
          },
          [&](const ProjectNode& n) {
            ResultSet in = evaluate(n.input, store);
            std::vector<std::size_t> idx;
            for (const auto& c : n.columns) idx.push_back(in.index(c));
            ResultSet out;
            for (std::size_t i : idx) out.columns.push_back(in.columns[i]);
            out.rows.reserve(in.rows.size());
            for (const Row& r : in.rows) {
              Row row;
              row.reserve(idx.size());
              for (std::size_t i : idx) row.push_back(r[i]);
              out.rows.push_back(std::move(row));
            }
            return out;
          },
      },
      q.node().v);
}

std::vector<Row> runAll(const Query& q, const Store& store) { return evaluate(q, store).rows; }

std::optional<Row> runOne(const Query& q, const Store& store) {
  auto rows = evaluate(q, store).rows;
  if (rows.empty()) return std::nullopt;
  return std::move(rows.front());
}

QueryResult runQ(const Query& q, QueryMode mode, const Store& store) {
  if (mode == QueryMode::All) return runAll(q, store);
  return runOne(q, store);
}

}  // namespace erdc::db
