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

// Case frames for verb senses: seeds read from F records, specialization of
// subsenses, and the change a defining use makes to its genus frame.

#ifndef LEXIGRAPH_FRAMES_H_
#define LEXIGRAPH_FRAMES_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "lexigraph/defgraph.h"
#include "lexigraph/lexicon.h"
#include "lexigraph/prep_rules.h"

namespace lexigraph {

enum class CaseLabel { kPat, kAgt };

std::string_view CaseLabelName(CaseLabel c);
std::optional<CaseLabel> ParseCaseLabel(std::string_view name);

// Canonical slot order; names outside the standard set sort after it,
// alphabetically.
const std::vector<std::string> &StandardSlotNames();
bool SlotNameLess(const std::string &a, const std::string &b);

// An oblique reference to an unknown concept.
struct Descriptor {
  std::string var;
  std::vector<std::string> features;

  bool operator==(const Descriptor &) const = default;
};

using Filler = std::variant<std::string, Descriptor>;

std::string FillerText(const Filler &filler);

struct Slot {
  std::string name;
  std::set<CaseLabel> cases;
  std::optional<std::string> binding;  // slot this one coincides with
  std::optional<Filler> filler;
  std::optional<std::string> marker;   // preposition that introduces it
  std::vector<std::string> restrictions;
  std::vector<Slot> children;

  // Adds a restriction phrase unless already present.
  void AddRestriction(const std::string &phrase);

  bool operator==(const Slot &) const = default;
};

struct Condition {
  std::string left;
  std::string op;  // "NE"
  std::string right;

  std::string ToString() const { return left + " " + op + " " + right; }
  auto operator<=>(const Condition &) const = default;
};

struct Frame {
  std::string predicate;
  bool provisional = false;
  PartOfSpeech pos = PartOfSpeech::kVi;
  std::vector<Condition> conditions;
  std::vector<Slot> slots;
  std::optional<SenseKey> sense;
  std::vector<std::string> provenance;

  // Slot at a dotted path ("ACCIDENTAL-ATTRS.RESPECT"), or nullptr.
  const Slot *Find(const std::string &path) const;
  Slot *Find(const std::string &path);
  // Creates missing slots along the path.
  Slot &Ensure(const std::string &path);
  // Dotted path of the first slot with this name in canonical order.
  std::optional<std::string> PathOf(const std::string &name) const;
  // All slot paths in canonical order.
  std::vector<std::string> SlotPaths() const;
};

// ---------------------------------------------------------------------------
// Seeds and specialization.

// Builds a frame from seed lines ("PRED", "COND", "SLOT" grammar). Throws
// LexError on an unknown line shape or a condition naming a missing slot.
Frame ParseSeedFrame(const std::vector<std::string> &lines, const SenseKey &key);

// Applies SLOT lines (no PRED/COND) onto an existing frame.
void ApplySeedLines(Frame *frame, const std::vector<std::string> &lines);

// Seed frames for every sense whose F lines declare a predicate.
std::map<SenseKey, Frame> LoadSeedFrames(const Lexicon &lexicon);

// Specializes a parent frame for a subsense using the subsense's F lines and
// usage note. Throws LexError if the subsense label is not below the
// parent's label.
Frame SpecializeSubsense(const Frame &parent, const Sense &subsense, const Lexicon &lexicon,
                         const PrepRules &rules);

// ---------------------------------------------------------------------------
// Use in a definition.

enum class DeltaKind { kFill, kRestrict, kAddSlot };

std::string_view DeltaKindName(DeltaKind kind);

struct UseDelta {
  DeltaKind kind;
  std::string path;
  std::string value;

  bool operator==(const UseDelta &) const = default;
};

struct UseResult {
  Frame frame;
  std::vector<UseDelta> deltas;
  std::vector<Phrase> residue;  // differentiae with no slot mapping
};

// Maps each differentia of a parsed definition onto the base frame.
UseResult ApplyUse(const Frame &base, const ParsedDefinition &use, const PrepRules &rules);

// ApplyUse over every line of a sense, plus its subject label (fills SUBJ)
// and a "used of X" usage note (restricts SUBJ).
UseResult ApplySenseUse(const Frame &base, const std::vector<const Sense *> &lines, const PrepRules &rules);

// Prepositions named in a "used with ..." usage note.
std::vector<std::string> UsagePrepositions(const std::optional<std::string> &usage_note);

// Subject named in a "used of ..." usage note.
std::optional<std::string> UsageSubject(const std::optional<std::string> &usage_note);

// ---------------------------------------------------------------------------
// Canonical form and comparison.

struct TupleEntry {
  std::string sort_key;  // orders entries canonically
  std::string path;      // readable position, e.g. "SUBJ.bind"
  std::string value;

  bool operator==(const TupleEntry &) const = default;
};

using FrameTuple = std::vector<TupleEntry>;

FrameTuple Canonicalize(const Frame &frame);

struct FrameDiff {
  std::string path;
  std::string sort_key;
  std::string a_value;  // "none" when absent
  std::string b_value;
};

std::optional<FrameDiff> DiffFrames(const Frame &a, const Frame &b);

// Value a frame's tuple holds at a sort key, or "none".
std::string TupleValue(const FrameTuple &tuple, const std::string &sort_key);

// Indented text tree.
std::string DumpFrame(const Frame &frame);

// ---------------------------------------------------------------------------
// Frames for every sense of a lexicon.

class FrameStore {
 public:
  FrameStore(const Lexicon &lexicon, const DefinitionGraph &graph, const PrepRules &rules);

  const Frame *Get(const SenseKey &key) const;
  const std::map<SenseKey, Frame> &frames() const { return frames_; }

  // For senses derived from their genus: the use applied and the genus
  // sense it was applied to.
  const UseResult *UseOf(const SenseKey &key) const;
  std::optional<SenseKey> GenusOf(const SenseKey &key) const;

 private:
  const Frame &Derive(const SenseKey &key, std::set<SenseKey> *active);

  const Lexicon &lexicon_;
  const DefinitionGraph &graph_;
  const PrepRules &rules_;
  std::map<SenseKey, Frame> seeds_;
  std::map<SenseKey, Frame> frames_;
  std::map<SenseKey, UseResult> uses_;
  std::map<SenseKey, SenseKey> genus_;
};

// Genus sense a sense's frame derives from: the target of a resolved arc,
// or of an arc with a single internal target.
std::optional<SenseKey> DeterminateGenus(const DefinitionGraph &graph, const SenseKey &key);

}  // namespace lexigraph

#endif  // LEXIGRAPH_FRAMES_H_
