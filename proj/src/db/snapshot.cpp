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
#include "erdc/db/snapshot.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <bit>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "overloaded.hpp"
#include "text.hpp"

namespace erdc::db {

CorruptStoreError::CorruptStoreError(std::size_t line, const std::string& message)
    : Error("corrupt snapshot at line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

constexpr std::string_view kVersion = "dbsnap/1";

std::string escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string domainSpec(const Column& c) {
  std::string d = std::visit(Overloaded{
                                 [](const UserDefinedDom& u) { return "User(" + u.typeName + ")"; },
                                 [&](const auto&) { return domainName(c.domain); },
                             },
                             c.domain);
  return c.nullable ? d + "?" : d;
}

std::string renderValue(const Value& v) {
  return std::visit(Overloaded{
                        [](Null) { return std::string("N"); },
                        [](std::int64_t x) { return "i:" + std::to_string(x); },
                        [](double x) {
                          if (std::isnan(x)) {
                            char buf[32];
                            std::snprintf(buf, sizeof buf, "%016llx",
                                          static_cast<unsigned long long>(std::bit_cast<std::uint64_t>(x)));
                            return "f:nan:" + std::string(buf);
                          }
                          return "f:" + text::formatDouble(x);
                        },
                        [](char32_t x) { return "c:" + std::to_string(static_cast<std::uint32_t>(x)); },
                        [](const std::string& x) { return "s:" + escape(x); },
                        [](bool x) { return std::string(x ? "b:1" : "b:0"); },
                        [](Date x) { return "d:" + std::to_string(x.seconds); },
                        [](Key x) { return "k:" + std::to_string(x.value); },
                        [](const Opaque& x) {
                          return "o:" + std::to_string(x.tag.size()) + ":" + escape(x.tag) + escape(x.payload);
                        },
                    },
                    v.repr());
}

}  // namespace

std::string renderSnapshot(const Store& store) {
  std::string out(kVersion);
  out += '\n';
  for (const auto& [name, rel] : store.relations()) {
    out += "relation\t" + escape(name) + "\t" + (rel.keyed() ? "1" : "0") + "\t" +
           std::to_string(rel.nextKey()) + "\t" + std::to_string(rel.rows().size());
    for (const auto& c : rel.columns()) out += "\t" + escape(c.name) + "\t" + escape(domainSpec(c));
    out += '\n';
    for (const Row& r : rel.rows()) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out += '\t';
        out += renderValue(r[i]);
      }
      out += '\n';
    }
  }
  out += "end\n";
  return out;
}

namespace {

class SnapshotReader {
 public:
  explicit SnapshotReader(std::string_view text) : text_(text) {}

  Store read() {
    auto first = nextLine();
    if (!first || *first != kVersion) fail("expected version line '" + std::string(kVersion) + "'");
    Store store;
    for (;;) {
      auto line = nextLine();
      if (!line) fail("missing 'end' line");
      if (*line == "end") break;
      readRelation(store, split(*line));
    }
    if (pos_ < text_.size()) {
      ++line_;
      fail("content after 'end'");
    }
    return store;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw CorruptStoreError(line_, msg); }

  std::optional<std::string_view> nextLine() {
    if (pos_ >= text_.size()) return std::nullopt;
    ++line_;
    const auto nl = text_.find('\n', pos_);
    if (nl == std::string_view::npos) fail("line not terminated by a newline");
    auto line = text_.substr(pos_, nl - pos_);
    pos_ = nl + 1;
    return line;
  }

  std::vector<std::string> split(std::string_view line) const {
    std::vector<std::string> fields(1);
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      if (c == '\t') {
        fields.emplace_back();
      } else if (c == '\\') {
        if (++i >= line.size()) fail("dangling backslash");
        switch (line[i]) {
          case '\\': fields.back() += '\\'; break;
          case 't': fields.back() += '\t'; break;
          case 'n': fields.back() += '\n'; break;
          case 'r': fields.back() += '\r'; break;
          default: fail(std::string("unknown escape \\") + line[i]);
        }
      } else if (c == '\r') {
        fail("unescaped carriage return");
      } else {
        fields.back() += c;
      }
    }
    return fields;
  }

  std::int64_t integer(const std::string& s, const char* what) const {
    auto v = text::parseInt(s);
    if (!v) fail(std::string("bad ") + what + " '" + s + "'");
    return *v;
  }

  Column column(const std::string& name, std::string spec) const {
    Column c;
    c.name = name;
    if (!spec.empty() && spec.back() == '?') {
      c.nullable = true;
      spec.pop_back();
    }
    auto inner = [&](std::string_view prefix) -> std::optional<std::string> {
      if (spec.size() > prefix.size() + 1 && spec.compare(0, prefix.size(), prefix) == 0 &&
          spec.back() == ')')
        return spec.substr(prefix.size(), spec.size() - prefix.size() - 1);
      return std::nullopt;
    };
    if (spec == "Int") {
      c.domain = IntDom{};
    } else if (spec == "Float") {
      c.domain = FloatDom{};
    } else if (spec == "Char") {
      c.domain = CharDom{};
    } else if (spec == "String") {
      c.domain = StringDom{};
    } else if (spec == "Bool") {
      c.domain = BoolDom{};
    } else if (spec == "Date") {
      c.domain = DateDom{};
    } else if (auto t = inner("Key(")) {
      c.domain = KeyDom{*t};
    } else if (auto u = inner("User(")) {
      c.domain = UserDefinedDom{*u, std::nullopt};
    } else {
      fail("unknown domain '" + spec + "'");
    }
    return c;
  }

  Value value(const std::string& f) const {
    if (f == "N") return Value();
    if (f.size() < 2 || f[1] != ':') fail("bad value field '" + f + "'");
    const std::string body = f.substr(2);
    switch (f[0]) {
      case 'i': return Value(integer(body, "Int"));
      case 'f': {
        if (body.rfind("nan:", 0) == 0 && body.size() == 20) {
          std::uint64_t bits = 0;
          for (char h : body.substr(4)) {
            const int d = std::isdigit(static_cast<unsigned char>(h)) ? h - '0'
                          : (h >= 'a' && h <= 'f')                    ? h - 'a' + 10
                                                                      : -1;
            if (d < 0) fail("bad NaN bits '" + body + "'");
            bits = bits * 16 + static_cast<std::uint64_t>(d);
          }
          const double x = std::bit_cast<double>(bits);
          if (!std::isnan(x)) fail("NaN bits do not encode a NaN");
          return Value(x);
        }
        auto x = text::parseDouble(body);
        if (!x || std::isnan(*x)) fail("bad Float '" + body + "'");
        return Value(*x);
      }
      case 'c': {
        const auto cp = integer(body, "Char");
        if (cp < 0 || cp > 0x10FFFF || !text::isScalarValue(static_cast<char32_t>(cp)))
          fail("bad Char code point " + body);
        return Value(static_cast<char32_t>(cp));
      }
      case 's': return Value(body);
      case 'b':
        if (body == "1") return Value(true);
        if (body == "0") return Value(false);
        fail("bad Bool '" + body + "'");
      case 'd': return Value(Date{integer(body, "Date")});
      case 'k': return Value(Key{integer(body, "Key")});
      case 'o': {
        const auto colon = body.find(':');
        if (colon == std::string::npos) fail("bad Opaque field");
        const auto len = integer(body.substr(0, colon), "Opaque tag length");
        const std::string rest = body.substr(colon + 1);
        if (len < 0 || static_cast<std::size_t>(len) > rest.size()) fail("bad Opaque tag length");
        return Value(Opaque{rest.substr(0, static_cast<std::size_t>(len)),
                            rest.substr(static_cast<std::size_t>(len))});
      }
      default: fail("unknown value tag '" + f.substr(0, 1) + "'");
    }
  }

  void readRelation(Store& store, const std::vector<std::string>& h) {
    if (h.size() < 5 || h[0] != "relation" || h.size() % 2 != 1)
      fail("expected a relation header or 'end'");
    const std::string& name = h[1];
    if (h[2] != "0" && h[2] != "1") fail("bad keyed flag '" + h[2] + "'");
    const bool keyed = h[2] == "1";
    const auto nextKey = integer(h[3], "nextKey");
    const auto count = integer(h[4], "row count");
    if (count < 0) fail("negative row count");
    if (store.hasRelation(name)) fail("duplicate relation '" + name + "'");
    std::vector<Column> cols;
    for (std::size_t i = 5; i < h.size(); i += 2) cols.push_back(column(h[i], h[i + 1]));
    const std::size_t headerLine = line_;
    std::vector<Row> rows;
    for (std::int64_t i = 0; i < count; ++i) {
      auto line = nextLine();
      if (!line) fail("expected " + std::to_string(count) + " rows, found " + std::to_string(i));
      Row row;
      if (!cols.empty() || !line->empty())
        for (const auto& f : split(*line)) row.push_back(value(f));
      if (row.size() != cols.size()) fail("row has " + std::to_string(row.size()) + " fields");
      rows.push_back(std::move(row));
    }
    try {
      Store staged;
      staged.putRelation(name, Relation(cols, keyed), nextKey);
      for (auto& r : rows) {
        if (keyed && (r.empty() || r[0].kind() != ValueKind::Key))
          throw SchemaMismatch("row without key");
        staged.addFact(name, std::move(r));
      }
      Relation built = staged.relation(name);
      if (built.nextKey() != nextKey) throw SchemaMismatch("key not below nextKey");
      store.putRelation(name, std::move(built), nextKey);
    } catch (const SchemaMismatch& e) {
      throw CorruptStoreError(headerLine, e.what());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

class Fd {
 public:
  explicit Fd(int fd) : fd_(fd) {}
  Fd(const Fd&) = delete;
  Fd& operator=(const Fd&) = delete;
  ~Fd() {
    if (fd_ >= 0) ::close(fd_);
  }
  int get() const { return fd_; }
  int release() { return std::exchange(fd_, -1); }

 private:
  int fd_;
};

[[noreturn]] void ioFail(const std::string& what, const std::filesystem::path& p) {
  throw IOError(what + " '" + p.string() + "': " + std::strerror(errno));
}

void writeAll(int fd, std::string_view data, const std::filesystem::path& p) {
  while (!data.empty()) {
    const ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      ioFail("cannot write", p);
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
}

}  // namespace

Store parseSnapshot(std::string_view text) { return SnapshotReader(text).read(); }

void saveStore(const Store& store, const std::filesystem::path& path, const SaveHook& hook) {
  auto phase = [&](SavePhase p) {
    if (hook) hook(p);
  };
  const std::string data = renderSnapshot(store);
  std::filesystem::path dir = path.parent_path();
  if (dir.empty()) dir = ".";
  const std::filesystem::path tmp =
      path.string() + ".tmp." + std::to_string(static_cast<long>(::getpid()));

  Fd fd(::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644));
  if (fd.get() < 0) ioFail("cannot create", tmp);
  phase(SavePhase::TempOpened);
  const std::size_t half = data.size() / 2;
  writeAll(fd.get(), std::string_view(data).substr(0, half), tmp);
  phase(SavePhase::PartialWrite);
  writeAll(fd.get(), std::string_view(data).substr(half), tmp);
  phase(SavePhase::TempWritten);
  if (::fsync(fd.get()) != 0) ioFail("cannot sync", tmp);
  phase(SavePhase::TempSynced);
  if (::close(fd.release()) != 0) ioFail("cannot close", tmp);
  if (::rename(tmp.c_str(), path.c_str()) != 0) {
    const int saved = errno;
    ::unlink(tmp.c_str());
    errno = saved;
    ioFail("cannot rename over", path);
  }
  phase(SavePhase::Renamed);
  Fd dfd(::open(dir.c_str(), O_RDONLY | O_DIRECTORY | O_CLOEXEC));
  if (dfd.get() >= 0) ::fsync(dfd.get());
  phase(SavePhase::DirSynced);
}

Store loadStore(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ioFail("cannot open", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) ioFail("cannot read", path);
  return parseSnapshot(ss.str());
}

}  // namespace erdc::db
