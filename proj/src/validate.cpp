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
#include "erdc/validate.hpp"

#include <map>
#include <set>

#include "erdc/lower.hpp"

namespace erdc {

namespace {

class Collector {
 public:
  void error(DiagCode code, std::string msg, std::string decl = {}, std::string member = {}) {
    add(Severity::Error, code, std::move(msg), std::move(decl), std::move(member));
  }
  void warning(DiagCode code, std::string msg, std::string decl = {}, std::string member = {}) {
    add(Severity::Warning, code, std::move(msg), std::move(decl), std::move(member));
  }
  std::vector<Diagnostic> take() { return std::move(diags_); }

 private:
  void add(Severity s, DiagCode code, std::string msg, std::string decl, std::string member) {
    Diagnostic d{s, code, std::move(msg), std::nullopt};
    if (!decl.empty() || !member.empty()) d.location = DiagLocation{std::move(decl), std::move(member)};
    diags_.push_back(std::move(d));
  }
  std::vector<Diagnostic> diags_;
};

std::string quoted(const std::string& s) { return "'" + s + "'"; }

bool validCardinality(const Cardinality& c) {
  if (c.min() < 0) return false;
  if (c.isExactly()) return true;
  const auto max = c.max();
  return !max || (*max >= 1 && c.min() <= *max);
}

}  // namespace

std::vector<Diagnostic> validateErd(const ErdTerm& erd) {
  Collector out;
  if (!isIdentifier(erd.name))
    out.error(DiagCode::InvalidIdentifier, "ERD name " + quoted(erd.name) + " is not an identifier");

  std::set<std::string> entityNames;
  for (const auto& e : erd.entities) {
    if (!isIdentifier(e.name))
      out.error(DiagCode::InvalidIdentifier, "entity name is not an identifier", e.name);
    if (!entityNames.insert(e.name).second)
      out.error(DiagCode::DuplicateEntity, "entity declared more than once", e.name);
    if (e.attributes.empty())
      out.error(DiagCode::EmptyEntity, "entity has no attributes", e.name);
    std::set<std::string> attrNames;
    for (const auto& a : e.attributes) {
      if (!isIdentifier(a.name))
        out.error(DiagCode::InvalidIdentifier, "attribute name is not an identifier", e.name, a.name);
      if (!attrNames.insert(a.name).second)
        out.error(DiagCode::DuplicateAttribute, "attribute declared more than once", e.name, a.name);
      if (const auto* u = std::get_if<UserDefinedDom>(&a.domain); u && !isQualifiedIdentifier(u->typeName))
        out.error(DiagCode::InvalidIdentifier,
                  "user-defined type name " + quoted(u->typeName) + " is not a qualified identifier",
                  e.name, a.name);
      if (std::holds_alternative<KeyDom>(a.domain))
        out.error(DiagCode::KeyDomInInput,
                  "foreign key domains are introduced by lowering, not declared", e.name, a.name);
      if (a.keyClass == KeyClass::PKey) {
        if (a.nullable)
          out.error(DiagCode::PKeyNullable, "primary key attribute must not be nullable", e.name,
                    a.name);
        out.warning(DiagCode::PKeyDemoted,
                    "primary key demoted to unique; every entity gets an internal key", e.name,
                    a.name);
      }
    }
  }

  std::set<std::string> relNames;
  // (holder entity, column) pairs already taken, for FK collision checks.
  std::map<std::string, std::set<std::string>> columns;
  for (const auto& e : erd.entities)
    for (const auto& a : e.attributes) columns[e.name].insert(a.name);

  for (const auto& r : erd.relationships) {
    if (!isIdentifier(r.name))
      out.error(DiagCode::InvalidIdentifier, "relationship name is not an identifier", r.name);
    if (!relNames.insert(r.name).second)
      out.error(DiagCode::DuplicateRelationship, "relationship declared more than once", r.name);
    if (entityNames.count(r.name))
      out.error(DiagCode::NameClash, "relationship has the same name as an entity", r.name);
    if (r.ends.size() != 2) {
      out.error(DiagCode::RelationshipArity,
                "relationship has " + std::to_string(r.ends.size()) + " ends; exactly two required",
                r.name);
    }
    bool endsOk = r.ends.size() == 2;
    std::set<std::string> roles;
    for (const auto& end : r.ends) {
      if (!isIdentifier(end.role)) {
        out.error(DiagCode::InvalidIdentifier, "role name is not an identifier", r.name, end.role);
        endsOk = false;
      }
      if (!roles.insert(end.role).second) {
        out.error(DiagCode::DuplicateRole, "role name used by both ends", r.name, end.role);
        endsOk = false;
      }
      if (!entityNames.count(end.entity)) {
        out.error(DiagCode::UnknownEntity, "end refers to undeclared entity " + quoted(end.entity),
                  r.name, end.role);
        endsOk = false;
      }
      if (!validCardinality(end.cardinality)) {
        out.error(DiagCode::InvalidCardinality,
                  "cardinality needs 0 <= min <= max and max >= 1", r.name, end.role);
        endsOk = false;
      } else if (end.cardinality.max() == 0) {
        out.warning(DiagCode::ExactlyZero,
                    "cardinality Exactly 0: the relationship can never hold; nothing is stored",
                    r.name, end.role);
      }
    }
    if (!endsOk) continue;

    const RelClass cls = classifyRelationship(r);
    if (cls.kind == RelKind::Unsupported) {
      out.error(DiagCode::UnsupportedBothMinPositive,
                "both minimum cardinalities are greater than zero; such relationships cannot be "
                "generated",
                r.name);
      continue;
    }
    if (auto fk = placeForeignKey(r, cls)) {
      if (!columns[fk->holder].insert(fk->column).second)
        out.error(DiagCode::FkNameCollision,
                  "foreign key column " + quoted(fk->column) + " already exists in " +
                      quoted(fk->holder),
                  r.name);
    }
  }
  return out.take();
}

}  // namespace erdc
