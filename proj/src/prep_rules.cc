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

#include "lexigraph/prep_rules.h"

#include <fstream>
#include <sstream>

#include "lexigraph/lexicon.h"
#include "lexigraph/text.h"

#ifndef LEXIGRAPH_DATA_DIR
#define LEXIGRAPH_DATA_DIR "data"
#endif

namespace lexigraph {

std::string DefaultDataDir() { return LEXIGRAPH_DATA_DIR; }

std::string_view SlotActionName(SlotAction action) {
  switch (action) {
    case SlotAction::kFill: return "FILL";
    case SlotAction::kRestrict: return "RESTRICT";
    case SlotAction::kAddSlot: return "ADD-SLOT";
  }
  return "?";
}

std::optional<SlotAction> ParseSlotAction(std::string_view name) {
  for (SlotAction a : {SlotAction::kFill, SlotAction::kRestrict, SlotAction::kAddSlot}) {
    if (SlotActionName(a) == name) return a;
  }
  return std::nullopt;
}

std::string_view PrepSpecKindName(PrepSpecKind kind) {
  switch (kind) {
    case PrepSpecKind::kObjectRestriction: return "OBJECT-RESTRICTION";
    case PrepSpecKind::kContextCondition: return "CONTEXT-CONDITION";
    case PrepSpecKind::kObjectCharacterization: return "OBJECT-CHARACTERIZATION";
    case PrepSpecKind::kContextCharacterization: return "CONTEXT-CHARACTERIZATION";
  }
  return "?";
}

namespace {

std::optional<PrepSpecKind> ParseKind(std::string_view name) {
  for (PrepSpecKind k : {PrepSpecKind::kObjectRestriction, PrepSpecKind::kContextCondition,
                         PrepSpecKind::kObjectCharacterization, PrepSpecKind::kContextCharacterization}) {
    if (PrepSpecKindName(k) == name) return k;
  }
  return std::nullopt;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LexError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Non-comment, non-blank rows split on tabs, with their line numbers.
std::vector<std::pair<int, std::vector<std::string>>> TsvRows(std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string>>> rows;
  std::vector<std::string> lines = Split(text, '\n');
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string line = lines[i];
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || Trim(line)[0] == '#') continue;
    std::vector<std::string> fields = Split(line, '\t');
    for (std::string &f : fields) f = Trim(f);
    rows.emplace_back(static_cast<int>(i) + 1, std::move(fields));
  }
  return rows;
}

// Order in which kinds are tried against a payload phrase.
constexpr PrepSpecKind kKindOrder[] = {PrepSpecKind::kContextCharacterization, PrepSpecKind::kContextCondition,
                                       PrepSpecKind::kObjectCharacterization, PrepSpecKind::kObjectRestriction};

}  // namespace

PrepRules PrepRules::Parse(std::string_view text) {
  PrepRules rules;
  for (const auto &[line, f] : TsvRows(text)) {
    if (f.size() != 4) throw LexError("rule row needs 4 columns", line);
    auto action = ParseSlotAction(f[3]);
    if (!action) throw LexError("unknown slot action '" + f[3] + "'", line);
    rules.rules_[{ToLower(f[0]), f[1]}] = SlotRule{f[2], *action};
  }
  return rules;
}

PrepRules PrepRules::Load(const std::string &path) {
  try {
    return Parse(ReadFile(path));
  } catch (const LexError &e) {
    throw LexError(path + ": " + e.what());
  }
}

std::optional<SlotRule> PrepRules::SlotActionFor(std::string_view prep, std::string_view family) const {
  auto it = rules_.find({ToLower(prep), std::string(family)});
  if (it == rules_.end()) return std::nullopt;
  return it->second;
}

std::set<std::string> PrepRules::FamiliesFor(std::string_view prep) const {
  std::set<std::string> out;
  std::string p = ToLower(prep);
  for (const auto &[key, rule] : rules_) {
    if (key.first == p) out.insert(key.second);
  }
  return out;
}

CueTable CueTable::Parse(std::string_view text) {
  CueTable table;
  for (const auto &[line, f] : TsvRows(text)) {
    if (f[0] == "xref") {
      if (f.size() != 4) throw LexError("xref row needs 4 columns", line);
      auto action = ParseSlotAction(f[3]);
      if (!action) throw LexError("unknown slot action '" + f[3] + "'", line);
      table.xrefs_[ToLower(f[1])] = SlotRule{f[2], *action};
      continue;
    }
    if (f.size() != 3) throw LexError("cue row needs 3 columns", line);
    auto kind = ParseKind(f[0]);
    if (!kind) throw LexError("unknown specification kind '" + f[0] + "'", line);
    if (f[1] != "prefix" && f[1] != "noun") throw LexError("cue type must be prefix or noun", line);
    table.cues_.push_back({*kind, f[1] == "prefix", ToLower(f[2])});
  }
  return table;
}

CueTable CueTable::Load(const std::string &path) {
  try {
    return Parse(ReadFile(path));
  } catch (const LexError &e) {
    throw LexError(path + ": " + e.what());
  }
}

PrepSpec CueTable::Classify(const std::string &raw) const {
  std::string phrase = NormalizeSpace(ToLower(raw));
  for (PrepSpecKind kind : kKindOrder) {
    for (const Cue &c : cues_) {
      if (c.kind == kind && c.prefix && StartsWith(phrase, c.text)) return {kind, phrase};
    }
  }
  std::string head = HeadWord(phrase);
  for (PrepSpecKind kind : kKindOrder) {
    for (const Cue &c : cues_) {
      if (c.kind == kind && !c.prefix && c.text == head) return {kind, head};
    }
  }
  for (const std::string &tok : Tokenize(phrase)) {
    for (const Cue &c : cues_) {
      if (c.kind == PrepSpecKind::kContextCondition && !c.prefix && c.text == tok) {
        return {PrepSpecKind::kContextCondition, phrase};
      }
    }
  }
  // Fallback by article: "the <noun>" says what the object is, "a <noun>"
  // what type it must be.
  if (StartsWith(phrase, "the ")) return {PrepSpecKind::kObjectCharacterization, head};
  return {PrepSpecKind::kObjectRestriction, head.empty() ? phrase : head};
}

std::optional<SlotRule> CueTable::CrossReference(const std::string &phrase) const {
  auto it = xrefs_.find(NormalizeSpace(ToLower(phrase)));
  if (it == xrefs_.end()) return std::nullopt;
  return it->second;
}

PrepSense ClassifyPrepSense(const std::string &prep, std::string_view definition, const CueTable &cues) {
  static const std::string kPreamble = "used as a function word to indicate";
  std::string text = NormalizeSpace(ToLower(definition));
  while (!text.empty() && (text.back() == '.' || text.back() == ';')) text.pop_back();
  PrepSense sense;
  sense.prep = prep;
  if (StartsWith(text, kPreamble)) {
    std::string payload = Trim(text.substr(kPreamble.size()));
    for (const std::string &phrase : SplitAlternatives(payload)) sense.specs.insert(cues.Classify(phrase));
    if (sense.specs.empty()) throw LexError("empty function-word definition for '" + prep + "'");
    return sense;
  }
  std::vector<std::string> tokens = Tokenize(text);
  if (auto rule = cues.CrossReference(text)) {
    sense.cross_reference = text;
    sense.slot_action = rule;
    return sense;
  }
  if (!tokens.empty() && (IsPreposition(tokens.front()) || IsPreposition(tokens.back()))) {
    sense.cross_reference = text;
    return sense;
  }
  throw LexError("cannot classify definition of '" + prep + "': '" + std::string(definition) + "'");
}

}  // namespace lexigraph
