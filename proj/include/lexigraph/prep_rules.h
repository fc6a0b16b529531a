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

// Prepositions: classification of their dictionary definitions and the
// table mapping a preposition, for a given predicate family, to a frame slot.

#ifndef LEXIGRAPH_PREP_RULES_H_
#define LEXIGRAPH_PREP_RULES_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lexigraph {

enum class SlotAction { kFill, kRestrict, kAddSlot };

std::string_view SlotActionName(SlotAction action);
std::optional<SlotAction> ParseSlotAction(std::string_view name);

struct SlotRule {
  std::string slot;
  SlotAction action = SlotAction::kFill;

  auto operator<=>(const SlotRule &) const = default;
};

// (prep, predicate family) -> slot action, loaded from a TSV table.
class PrepRules {
 public:
  // Columns: prep, predicate-family, slot, action. "#" lines are comments.
  // Throws LexError on malformed rows.
  static PrepRules Parse(std::string_view text);
  static PrepRules Load(const std::string &path);

  std::optional<SlotRule> SlotActionFor(std::string_view prep, std::string_view family) const;

  // Families that have a rule for this preposition.
  std::set<std::string> FamiliesFor(std::string_view prep) const;

  bool empty() const { return rules_.empty(); }

 private:
  std::map<std::pair<std::string, std::string>, SlotRule> rules_;
};

enum class PrepSpecKind {
  kObjectRestriction,
  kContextCondition,
  kObjectCharacterization,
  kContextCharacterization
};

std::string_view PrepSpecKindName(PrepSpecKind kind);

struct PrepSpec {
  PrepSpecKind kind;
  std::string payload;

  auto operator<=>(const PrepSpec &) const = default;
};

struct PrepSense {
  std::string prep;
  std::set<PrepSpec> specs;
  std::optional<SlotRule> slot_action;
  // Set when the definition points at another preposition's meaning
  // ("with reference to").
  std::optional<std::string> cross_reference;

  bool primitive_style() const { return !cross_reference.has_value(); }
};

// Cue words deciding which kind a payload phrase belongs to, plus slot
// actions for known cross-reference definitions.
class CueTable {
 public:
  // Rows: "<KIND>\tprefix|noun\t<cue>" or "xref\t<phrase>\t<SLOT>\t<ACTION>".
  static CueTable Parse(std::string_view text);
  static CueTable Load(const std::string &path);

  PrepSpec Classify(const std::string &phrase) const;
  std::optional<SlotRule> CrossReference(const std::string &phrase) const;

 private:
  struct Cue {
    PrepSpecKind kind;
    bool prefix;
    std::string text;
  };
  std::vector<Cue> cues_;
  std::map<std::string, SlotRule> xrefs_;
};

// Classifies one definition of a preposition. Throws LexError when the
// definition neither starts with the function-word preamble nor reads as a
// cross-reference to another preposition.
PrepSense ClassifyPrepSense(const std::string &prep, std::string_view definition, const CueTable &cues);

// Directory holding the bundled data files.
std::string DefaultDataDir();

}  // namespace lexigraph

#endif  // LEXIGRAPH_PREP_RULES_H_
