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
#include "text.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>

namespace erdc::text {

bool isScalarValue(char32_t cp) {
  return cp <= 0x10FFFF && !(cp >= 0xD800 && cp <= 0xDFFF);
}

void appendUtf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::optional<char32_t> decodeUtf8(std::string_view s, std::size_t& pos) {
  if (pos >= s.size()) return std::nullopt;
  const auto b0 = static_cast<unsigned char>(s[pos]);
  std::size_t len = 0;
  char32_t cp = 0;
  if (b0 < 0x80) {
    ++pos;
    return b0;
  } else if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return std::nullopt;
  }
  if (pos + len > s.size()) return std::nullopt;
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) return std::nullopt;
    cp = (cp << 6) | (b & 0x3F);
  }
  // Reject overlong encodings.
  static constexpr std::array<char32_t, 5> kMin = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || !isScalarValue(cp)) return std::nullopt;
  pos += len;
  return cp;
}

std::optional<char32_t> singleScalar(std::string_view s) {
  std::size_t pos = 0;
  auto cp = decodeUtf8(s, pos);
  if (!cp || pos != s.size()) return std::nullopt;
  return cp;
}

std::string formatDouble(double v) {
  if (std::isnan(v)) return std::signbit(v) ? "-nan" : "nan";
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  std::string s(buf.data(), end);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::optional<double> parseDouble(std::string_view s) {
  if (s.empty()) return std::nullopt;
  double v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<std::int64_t> parseInt(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::int64_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) return std::nullopt;
  return v;
}

namespace {

bool needsDecimalEscape(char32_t c) { return c < 0x20 || c == 0x7F; }

void appendEscaped(std::string& out, char32_t c, char quote) {
  switch (c) {
    case '\\': out += "\\\\"; return;
    case '\n': out += "\\n"; return;
    case '\t': out += "\\t"; return;
    case '\r': out += "\\r"; return;
    default: break;
  }
  if (c == static_cast<char32_t>(quote)) {
    out.push_back('\\');
    out.push_back(quote);
  } else if (needsDecimalEscape(c)) {
    out += "\\" + std::to_string(static_cast<unsigned>(c));
  } else {
    appendUtf8(out, c);
  }
}

}  // namespace

std::string quoteString(std::string_view s) {
  std::string out = "\"";
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (c >= 0x80) {
      out.push_back(static_cast<char>(c));  // UTF-8 passes through untouched
      continue;
    }
    appendEscaped(out, c, '"');
    // \1 followed by '2' would read back as \12; Haskell separates with \&.
    if (needsDecimalEscape(c) && c != '\n' && c != '\t' && c != '\r' && i + 1 < s.size() &&
        std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
      out += "\\&";
    }
  }
  out.push_back('"');
  return out;
}

std::string quoteChar(char32_t c) {
  std::string out = "'";
  appendEscaped(out, c, '\'');
  out.push_back('\'');
  return out;
}

std::string formatIsoDate(std::int64_t epochSeconds) {
  using namespace std::chrono;
  const sys_seconds tp{seconds{epochSeconds}};
  const auto day = floor<days>(tp);
  const year_month_day ymd{day};
  const hh_mm_ss hms{tp - day};
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%04d-%02u-%02uT%02d:%02d:%02dZ",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()), static_cast<int>(hms.hours().count()),
                static_cast<int>(hms.minutes().count()), static_cast<int>(hms.seconds().count()));
  return buf.data();
}

namespace {

std::optional<int> fixedDigits(std::string_view s, std::size_t pos, std::size_t n) {
  if (pos + n > s.size()) return std::nullopt;
  int v = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const char c = s[pos + i];
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

std::optional<std::int64_t> parseIsoDate(std::string_view s) {
  using namespace std::chrono;
  auto y = fixedDigits(s, 0, 4);
  auto mo = fixedDigits(s, 5, 2);
  auto d = fixedDigits(s, 8, 2);
  if (!y || !mo || !d || s.size() < 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
  const year_month_day ymd{year{*y}, month{static_cast<unsigned>(*mo)},
                           day{static_cast<unsigned>(*d)}};
  if (!ymd.ok()) return std::nullopt;
  std::int64_t secs = sys_days{ymd}.time_since_epoch().count() * std::int64_t{86400};
  std::size_t pos = 10;
  if (pos == s.size()) return secs;
  if (s[pos] != 'T') return std::nullopt;
  auto hh = fixedDigits(s, pos + 1, 2);
  auto mm = fixedDigits(s, pos + 4, 2);
  if (!hh || !mm || s.size() < pos + 6 || s[pos + 3] != ':' || *hh > 23 || *mm > 59)
    return std::nullopt;
  secs += *hh * 3600 + *mm * 60;
  pos += 6;
  if (pos < s.size() && s[pos] == ':') {
    auto ss = fixedDigits(s, pos + 1, 2);
    if (!ss || *ss > 59) return std::nullopt;
    secs += *ss;
    pos += 3;
  }
  if (pos == s.size()) return secs;
  if (s[pos] == 'Z') return pos + 1 == s.size() ? std::optional(secs) : std::nullopt;
  if (s[pos] == '+' || s[pos] == '-') {
    auto oh = fixedDigits(s, pos + 1, 2);
    auto om = fixedDigits(s, pos + 4, 2);
    if (!oh || !om || s.size() != pos + 6 || s[pos + 3] != ':') return std::nullopt;
    const std::int64_t offset = *oh * 3600 + *om * 60;
    return s[pos] == '+' ? secs - offset : secs + offset;
  }
  return std::nullopt;
}

char Scanner::get() {
  if (atEnd()) return '\0';
  const char c = src_[pos_++];
  if (c == '\n') {
    ++line_;
    col_ = 1;
  } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
    ++col_;  // count scalar values, not continuation bytes
  }
  return c;
}

bool Scanner::consume(char c) {
  if (peek() != c) return false;
  get();
  return true;
}

bool Scanner::consume(std::string_view s) {
  if (src_.substr(pos_, s.size()) != s) return false;
  for (std::size_t i = 0; i < s.size(); ++i) get();
  return true;
}

void Scanner::skipSpace(bool lineComments) {
  for (;;) {
    const char c = peek();
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      get();
    } else if (lineComments && c == '/' && peek(1) == '/') {
      while (!atEnd() && peek() != '\n') get();
    } else {
      return;
    }
  }
}

std::string_view Scanner::identifier() {
  const std::size_t start = pos_;
  if (!std::isalpha(static_cast<unsigned char>(peek()))) return {};
  while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') get();
  return src_.substr(start, pos_ - start);
}

char32_t Scanner::escape() {
  const std::size_t l = line_, c = col_;
  get();  // backslash
  const char e = get();
  switch (e) {
    case '\\': return '\\';
    case '"': return '"';
    case '\'': return '\'';
    case 'n': return '\n';
    case 't': return '\t';
    case 'r': return '\r';
    default: break;
  }
  if (e >= '0' && e <= '9') {
    std::uint32_t v = static_cast<std::uint32_t>(e - '0');
    while (peek() >= '0' && peek() <= '9') {
      v = v * 10 + static_cast<std::uint32_t>(get() - '0');
      if (v > 0x10FFFF) failAt(l, c, "escape below 1114112");
    }
    if (!isScalarValue(v)) failAt(l, c, "escape naming a Unicode scalar value");
    return v;
  }
  failAt(l, c, "escape sequence");
}

std::string Scanner::stringLiteral() {
  const std::size_t l = line_, c = col_;
  if (!consume('"')) fail("'\"'");
  std::string out;
  for (;;) {
    if (atEnd()) failAt(l, c, "closing '\"'");
    const char ch = peek();
    if (ch == '"') {
      get();
      return out;
    }
    if (ch == '\\') {
      if (peek(1) == '&') {
        get();
        get();
        continue;
      }
      appendUtf8(out, escape());
      continue;
    }
    if (ch == '\n') failAt(line_, col_, "closing '\"' before end of line");
    out.push_back(get());
  }
}

char32_t Scanner::charLiteral() {
  if (!consume('\'')) fail("'\\''");
  char32_t value = 0;
  if (peek() == '\\') {
    value = escape();
  } else {
    std::size_t p = pos_;
    auto cp = decodeUtf8(src_, p);
    if (!cp || *cp == '\'' || *cp == '\n') fail("character");
    while (pos_ < p) get();
    value = *cp;
  }
  if (!consume('\'')) fail("closing '\\''");
  return value;
}

std::string_view Scanner::number(bool& isFloat) {
  isFloat = false;
  const std::size_t start = pos_;
  consume('-');
  if (!std::isdigit(static_cast<unsigned char>(peek()))) return {};
  while (std::isdigit(static_cast<unsigned char>(peek()))) get();
  if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
    isFloat = true;
    get();
    while (std::isdigit(static_cast<unsigned char>(peek()))) get();
  }
  if (peek() == 'e' || peek() == 'E') {
    const char sign = peek(1);
    const bool hasSign = sign == '+' || sign == '-';
    if (std::isdigit(static_cast<unsigned char>(peek(hasSign ? 2 : 1)))) {
      isFloat = true;
      get();
      if (hasSign) get();
      while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    }
  }
  return src_.substr(start, pos_ - start);
}

void Scanner::fail(const std::string& expected) const { failAt(line_, col_, expected); }

void Scanner::failAt(std::size_t line, std::size_t col, const std::string& expected) const {
  throw ParseError(SourceSpan{file_, line, col, line_, col_}, expected);
}

}  // namespace erdc::text
