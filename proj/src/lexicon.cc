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

#include "lexigraph/lexicon.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <tuple>

#include "lexigraph/text.h"

namespace lexigraph {

LexError::LexError(const std::string &what, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

std::string_view PosName(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::kVi: return "vi";
    case PartOfSpeech::kVt: return "vt";
    case PartOfSpeech::kVb: return "vb";
    case PartOfSpeech::kNoun: return "n";
    case PartOfSpeech::kAdj: return "adj";
    case PartOfSpeech::kAdv: return "adv";
    case PartOfSpeech::kPrep: return "prep";
  }
  return "?";
}

std::optional<PartOfSpeech> ParsePos(std::string_view name) {
  for (PartOfSpeech p : {PartOfSpeech::kVi, PartOfSpeech::kVt, PartOfSpeech::kVb,
                         PartOfSpeech::kNoun, PartOfSpeech::kAdj, PartOfSpeech::kAdv,
                         PartOfSpeech::kPrep}) {
    if (PosName(p) == name) return p;
  }
  return std::nullopt;
}

bool IsVerb(PartOfSpeech pos) {
  return pos == PartOfSpeech::kVi || pos == PartOfSpeech::kVt || pos == PartOfSpeech::kVb;
}

std::vector<PartOfSpeech> ExpandPos(PartOfSpeech pos) {
  if (pos == PartOfSpeech::kVb) return {PartOfSpeech::kVi, PartOfSpeech::kVt};
  return {pos};
}

// ---------------------------------------------------------------------------
// SenseLabel

SenseLabel::SenseLabel(std::string_view text) : text_(text) {
  if (!Valid(text)) throw LexError("invalid sense label '" + std::string(text) + "'");
}

bool SenseLabel::Valid(std::string_view text) {
  size_t i = 0;
  auto digits = [&]() {
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return i > start;
  };
  if (!digits()) return false;
  if (i < text.size() && std::islower(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '(') {
    ++i;
    if (!digits()) return false;
    if (i >= text.size() || text[i] != ')') return false;
    ++i;
  }
  return i == text.size();
}

std::optional<SenseLabel> SenseLabel::Parent() const {
  if (text_.empty()) return std::nullopt;
  if (text_.back() == ')') {
    SenseLabel parent;
    parent.text_ = text_.substr(0, text_.find('('));
    return parent;
  }
  if (std::islower(static_cast<unsigned char>(text_.back()))) {
    SenseLabel parent;
    parent.text_ = text_.substr(0, text_.size() - 1);
    return parent;
  }
  return std::nullopt;
}

bool SenseLabel::IsDescendantOf(const SenseLabel &other) const {
  for (auto p = Parent(); p; p = p->Parent()) {
    if (*p == other) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// SenseKey

std::string SenseKey::ToString() const {
  return headword + ":" + std::string(PosName(pos)) + ":" + std::to_string(homograph) +
         ":" + label.text();
}

SenseKey SenseKey::Parse(std::string_view text) {
  std::vector<std::string> parts = Split(text, ':');
  if (parts.size() != 3 && parts.size() != 4) {
    throw LexError("sense key '" + std::string(text) + "' must be head:pos:label");
  }
  SenseKey key;
  key.headword = Trim(parts[0]);
  auto pos = ParsePos(Trim(parts[1]));
  if (!pos) throw LexError("unknown part of speech in '" + std::string(text) + "'");
  key.pos = *pos;
  if (parts.size() == 4) {
    try {
      key.homograph = std::stoi(parts[2]);
    } catch (const std::exception &) {
      throw LexError("bad homograph number in '" + std::string(text) + "'");
    }
    if (key.homograph <= 0) throw LexError("bad homograph number in '" + std::string(text) + "'");
  }
  key.label = SenseLabel(Trim(parts.back()));
  return key;
}

// ---------------------------------------------------------------------------
// Sense / Lexicon

std::optional<std::string> Sense::subject() const {
  for (const std::string &s : status) {
    if (StartsWith(s, "subject:")) return s.substr(8);
  }
  return std::nullopt;
}

bool Sense::operator==(const Sense &o) const {
  return std::tie(headword, pos, homograph, label, line_index, status, raw_definition,
                  usage_note, synonym_refs) ==
         std::tie(o.headword, o.pos, o.homograph, o.label, o.line_index, o.status,
                  o.raw_definition, o.usage_note, o.synonym_refs);
}

bool Lexicon::HasSense(const SenseKey &key) const {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const Sense &s) { return s.key() == key; });
}

std::vector<SenseKey> Lexicon::SenseKeys() const {
  std::vector<SenseKey> keys;
  std::set<SenseKey> seen;
  for (const Sense &s : entries) {
    if (seen.insert(s.key()).second) keys.push_back(s.key());
  }
  return keys;
}

std::vector<const Sense *> Lexicon::LinesOf(const SenseKey &key) const {
  std::vector<const Sense *> lines;
  for (const Sense &s : entries) {
    if (s.key() == key) lines.push_back(&s);
  }
  return lines;
}

// ---------------------------------------------------------------------------
// LEXF

namespace {

bool IsSynonymText(std::string_view text) {
  if (text.empty()) return false;
  bool letter = false;
  for (char c : text) {
    if (std::isupper(static_cast<unsigned char>(c))) {
      letter = true;
    } else if (c != ' ' && c != '-') {
      return false;
    }
  }
  return letter;
}

bool ValidStatus(std::string_view s) {
  static const char *kFixed[] = {"obs", "dial", "Brit", "specif"};
  for (const char *f : kFixed) {
    if (s == f) return true;
  }
  return (StartsWith(s, "subject:") && s.size() > 8) || (StartsWith(s, "field:") && s.size() > 6);
}

struct EntryHead {
  std::string headword;
  PartOfSpeech pos;
  int homograph;
};

}  // namespace

void ParseLexfInto(std::string_view text, Lexicon *lexicon) {
  std::optional<EntryHead> current;
  std::set<std::tuple<std::string, PartOfSpeech, int>> seen_entries;
  for (const Sense &s : lexicon->entries) seen_entries.emplace(s.headword, s.pos, s.homograph);

  std::vector<std::string> lines = Split(text, '\n');
  for (size_t n = 0; n < lines.size(); ++n) {
    int line_no = static_cast<int>(n) + 1;
    std::string line = lines[n];
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;

    std::vector<std::string> f = Split(trimmed, '|');
    const std::string &kind = f[0];
    auto need = [&](size_t count) {
      if (f.size() != count) {
        throw LexError(kind + " record needs " + std::to_string(count) + " fields, got " +
                           std::to_string(f.size()),
                       line_no);
      }
    };
    auto label_of = [&](const std::string &t) {
      if (!SenseLabel::Valid(Trim(t))) throw LexError("invalid sense label '" + t + "'", line_no);
      return SenseLabel(Trim(t));
    };
    auto require_entry = [&]() {
      if (!current) throw LexError(kind + " record before any E record", line_no);
    };
    auto add_line = [&](Sense sense) {
      sense.headword = current->headword;
      sense.pos = current->pos;
      sense.homograph = current->homograph;
      sense.source_line = line_no;
      int index = 0;
      for (const Sense &s : lexicon->entries) {
        if (s.key() == sense.key()) ++index;
      }
      sense.line_index = index;
      lexicon->entries.push_back(std::move(sense));
    };

    if (kind == "E") {
      need(4);
      EntryHead head;
      head.headword = NormalizeSpace(f[1]);
      if (head.headword.empty()) throw LexError("empty headword", line_no);
      auto pos = ParsePos(Trim(f[2]));
      if (!pos) throw LexError("unknown part of speech '" + f[2] + "'", line_no);
      head.pos = *pos;
      try {
        size_t used = 0;
        head.homograph = std::stoi(Trim(f[3]), &used);
        if (used != Trim(f[3]).size()) throw std::invalid_argument("trailing");
      } catch (const std::exception &) {
        throw LexError("bad homograph number '" + f[3] + "'", line_no);
      }
      if (head.homograph <= 0) throw LexError("bad homograph number '" + f[3] + "'", line_no);
      if (!seen_entries.emplace(head.headword, head.pos, head.homograph).second) {
        throw LexError("duplicate sense key: entry " + head.headword + ":" +
                           std::string(PosName(head.pos)) + ":" + std::to_string(head.homograph) +
                           " already defined",
                       line_no);
      }
      current = head;
    } else if (kind == "S") {
      need(5);
      require_entry();
      Sense sense;
      sense.label = label_of(f[1]);
      for (const std::string &st : Split(f[2], ',')) {
        std::string s = Trim(st);
        if (s.empty()) continue;
        if (!ValidStatus(s)) throw LexError("unknown status label '" + s + "'", line_no);
        sense.status.insert(s);
      }
      std::string def = NormalizeSpace(f[3]);
      if (IsSynonymText(def)) {
        sense.synonym_refs.push_back(ToLower(def));
      } else {
        if (def.empty()) throw LexError("empty definition", line_no);
        sense.raw_definition = def;
      }
      std::string usage = NormalizeSpace(f[4]);
      if (!usage.empty()) sense.usage_note = usage;
      add_line(std::move(sense));
    } else if (kind == "Y") {
      need(3);
      require_entry();
      Sense sense;
      sense.label = label_of(f[1]);
      std::string syn = NormalizeSpace(f[2]);
      if (!IsSynonymText(syn)) throw LexError("synonym must be uppercase: '" + syn + "'", line_no);
      sense.synonym_refs.push_back(ToLower(syn));
      add_line(std::move(sense));
    } else if (kind == "F") {
      if (f.size() < 3) throw LexError("F record needs 3 fields, got " + std::to_string(f.size()), line_no);
      require_entry();
      SenseKey key{current->headword, current->pos, current->homograph, label_of(f[1])};
      if (!lexicon->HasSense(key)) {
        throw LexError("F record references unknown sense " + key.ToString(), line_no);
      }
      std::vector<std::string> rest(f.begin() + 2, f.end());
      lexicon->seed_frames[key].push_back(NormalizeSpace(Join(rest, "|")));
    } else if (kind == "R") {
      need(4);
      ResolutionRecord rec;
      try {
        rec.from = SenseKey::Parse(f[1]);
        rec.target = SenseKey::Parse(f[3]);
      } catch (const LexError &e) {
        throw LexError(e.what(), line_no);
      }
      rec.genus_word = ToLower(NormalizeSpace(f[2]));
      if (rec.genus_word.empty()) throw LexError("empty genus word", line_no);
      lexicon->resolutions.push_back(std::move(rec));
    } else {
      throw LexError("malformed record kind '" + kind + "'", line_no);
    }
  }
}

Lexicon ParseLexf(std::string_view text) {
  Lexicon lexicon;
  ParseLexfInto(text, &lexicon);
  return lexicon;
}

void LoadLexfInto(const std::string &path, Lexicon *lexicon) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LexError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    ParseLexfInto(buf.str(), lexicon);
  } catch (const LexError &e) {
    throw LexError(path + ": " + e.what());
  }
}

Lexicon LoadLexf(const std::string &path) {
  Lexicon lexicon;
  LoadLexfInto(path, &lexicon);
  return lexicon;
}

std::string WriteLexf(const Lexicon &lexicon) {
  std::ostringstream out;
  std::optional<std::tuple<std::string, PartOfSpeech, int>> current;
  auto flush_frames = [&]() {
    if (!current) return;
    for (const auto &[key, lines] : lexicon.seed_frames) {
      if (std::tie(key.headword, key.pos, key.homograph) !=
          std::tie(std::get<0>(*current), std::get<1>(*current), std::get<2>(*current))) {
        continue;
      }
      for (const std::string &l : lines) out << "F|" << key.label.text() << "|" << l << "\n";
    }
  };
  for (const Sense &s : lexicon.entries) {
    auto head = std::make_tuple(s.headword, s.pos, s.homograph);
    if (!current || *current != head) {
      flush_frames();
      current = head;
      out << "E|" << s.headword << "|" << PosName(s.pos) << "|" << s.homograph << "\n";
    }
    std::vector<std::string> status(s.status.begin(), s.status.end());
    if (s.synonym_only() && status.empty() && !s.usage_note) {
      out << "Y|" << s.label.text() << "|" << ToUpper(s.synonym_refs.front()) << "\n";
    } else {
      std::string def = s.synonym_only() ? ToUpper(s.synonym_refs.front()) : s.raw_definition;
      out << "S|" << s.label.text() << "|" << Join(status, ",") << "|" << def << "|"
          << s.usage_note.value_or("") << "\n";
    }
  }
  flush_frames();
  for (const ResolutionRecord &r : lexicon.resolutions) {
    out << "R|" << r.from.headword << ":" << PosName(r.from.pos) << ":" << r.from.homograph
        << ":" << r.from.label.text() << "|" << r.genus_word << "|" << r.target.headword << ":"
        << PosName(r.target.pos) << ":" << r.target.homograph << ":" << r.target.label.text()
        << "\n";
  }
  return out.str();
}

std::vector<Sense> SensesOf(const Lexicon &lexicon, std::string_view headword,
                            std::optional<PartOfSpeech> pos) {
  std::vector<Sense> out;
  for (const Sense &s : lexicon.entries) {
    if (s.headword != headword) continue;
    if (pos) {
      std::vector<PartOfSpeech> expanded = ExpandPos(s.pos);
      if (s.pos != *pos && std::find(expanded.begin(), expanded.end(), *pos) == expanded.end()) {
        continue;
      }
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace lexigraph
