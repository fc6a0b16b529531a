// Copyright 2026 The Lexigraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexigraph/text.h"

#include <algorithm>
#include <cctype>

namespace lexigraph {

namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }

}  // namespace

std::string NormalizeSpace(std::string_view text) {
  std::string out;
  bool pending = false;
  for (char c : text) {
    if (IsSpace(c)) {
      pending = !out.empty();
      continue;
    }
    if (pending) out.push_back(' ');
    pending = false;
    out.push_back(c);
  }
  return out;
}

std::string ToLower(std::string_view text) {
  std::string out(text);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string ToUpper(std::string_view text) {
  std::string out(text);
  for (char &c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::string Trim(std::string_view text) {
  size_t b = 0, e = text.size();
  while (b < e && IsSpace(text[b])) ++b;
  while (e > b && IsSpace(text[e - 1])) --e;
  return std::string(text.substr(b, e - b));
}

std::vector<std::string> Split(std::string_view text, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (;;) {
    size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(text.substr(start));
      return out;
    }
    out.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string Join(const std::vector<std::string> &parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&]() {
    if (!current.empty()) tokens.push_back(current);
    current.clear();
  };
  for (char c : text) {
    if (IsSpace(c)) {
      flush();
    } else if (c == '(' || c == ')' || c == ',' || c == ';') {
      flush();
      tokens.emplace_back(1, c);
    } else {
      current.push_back(c);
    }
  }
  flush();
  // A sentence-final period is not part of the last word unless the word is
  // a known abbreviation.
  if (!tokens.empty()) {
    std::string &last = tokens.back();
    static const char *kAbbrev[] = {"usu.", "esp.", "etc.", "e.g.", "specif."};
    bool abbrev = std::any_of(std::begin(kAbbrev), std::end(kAbbrev),
                              [&](const char *a) { return last == a; });
    if (!abbrev && last.size() > 1 && last.back() == '.') last.pop_back();
  }
  return tokens;
}

std::set<std::string> SplitAlternatives(std::string_view phrase) {
  // Drop parenthesized material.
  std::string text;
  int depth = 0;
  for (char c : phrase) {
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      if (depth > 0) --depth;
    } else if (depth == 0) {
      text.push_back(c);
    }
  }
  std::vector<std::string> pieces;
  std::string current;
  for (const std::string &tok : Tokenize(text)) {
    if (tok == "," || tok == "or" || tok == "etc." || tok == "etc") {
      if (!current.empty()) pieces.push_back(current);
      current.clear();
      continue;
    }
    if (!current.empty()) current.push_back(' ');
    current += tok;
  }
  if (!current.empty()) pieces.push_back(current);
  std::set<std::string> out;
  for (const std::string &p : pieces) {
    std::string norm = NormalizeSpace(ToLower(p));
    if (!norm.empty()) out.insert(norm);
  }
  return out;
}

bool IsDeterminer(std::string_view word) {
  static const char *kDeterminers[] = {"a",   "an",    "the",  "some", "one",
                                       "any", "this",  "that", "its",  "his",
                                       "her", "their", "one's"};
  return std::any_of(std::begin(kDeterminers), std::end(kDeterminers),
                     [&](const char *d) { return word == d; });
}

std::string HeadWord(std::string_view phrase) {
  static const char *kStops[] = {"of", "that", "which", "who", "being",
                                 "(", ",", "to", "for", "with"};
  std::string head;
  for (const std::string &raw : Tokenize(ToLower(phrase))) {
    if (std::any_of(std::begin(kStops), std::end(kStops),
                    [&](const char *s) { return raw == s; })) {
      if (!head.empty()) break;
      continue;
    }
    if (IsDeterminer(raw) || raw == "or" || raw == "and") continue;
    head = raw;
  }
  return head;
}

bool StartsWith(std::string_view text, std::string_view prefix) {
  return text.substr(0, prefix.size()) == prefix;
}

bool EndsWith(std::string_view text, std::string_view suffix) {
  return text.size() >= suffix.size() &&
         text.substr(text.size() - suffix.size()) == suffix;
}

}  // namespace lexigraph
