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

// Lexical entries, the LEXF file format, and the structural analysis of
// definition text into genus and differentiae.

#ifndef LEXIGRAPH_LEXICON_H_
#define LEXIGRAPH_LEXICON_H_

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lexigraph {

// Raised for malformed input data. Carries the 1-based source line when the
// error comes from a file.
class LexError : public std::runtime_error {
 public:
  explicit LexError(const std::string &what, int line = 0);
  int line() const { return line_; }

 private:
  int line_;
};

enum class PartOfSpeech { kVi, kVt, kVb, kNoun, kAdj, kAdv, kPrep };

std::string_view PosName(PartOfSpeech pos);
std::optional<PartOfSpeech> ParsePos(std::string_view name);
bool IsVerb(PartOfSpeech pos);

// A "vb" entry is both transitive and intransitive.
std::vector<PartOfSpeech> ExpandPos(PartOfSpeech pos);

// Hierarchical sense label: digits, an optional letter, an optional
// parenthesized number ("1", "1b", "1b(2)").
class SenseLabel {
 public:
  SenseLabel() = default;
  // Throws LexError if the text does not follow the label grammar.
  explicit SenseLabel(std::string_view text);

  static bool Valid(std::string_view text);

  const std::string &text() const { return text_; }

  // Label one level up, or nullopt for a top-level number.
  std::optional<SenseLabel> Parent() const;

  // True if this label is a proper descendant of other.
  bool IsDescendantOf(const SenseLabel &other) const;

  auto operator<=>(const SenseLabel &) const = default;

 private:
  std::string text_;
};

// Identifies one numbered sense (all of its definition lines).
struct SenseKey {
  std::string headword;
  PartOfSpeech pos = PartOfSpeech::kVi;
  int homograph = 1;
  SenseLabel label;

  // "<headword>:<pos>:<homograph>:<label>".
  std::string ToString() const;

  // Accepts "head:pos:label" (homograph 1) or "head:pos:hom:label".
  static SenseKey Parse(std::string_view text);

  auto operator<=>(const SenseKey &) const = default;
};

// One definition line of a dictionary entry.
struct Sense {
  std::string headword;
  PartOfSpeech pos = PartOfSpeech::kVi;
  int homograph = 1;
  SenseLabel label;
  int line_index = 0;  // position among the lines sharing the label
  std::set<std::string> status;
  std::string raw_definition;
  std::optional<std::string> usage_note;
  std::vector<std::string> synonym_refs;
  int source_line = 0;  // diagnostics only; not part of equality

  SenseKey key() const { return {headword, pos, homograph, label}; }
  bool synonym_only() const { return raw_definition.empty() && !synonym_refs.empty(); }

  // Value of a "subject:<noun>" status, if present.
  std::optional<std::string> subject() const;

  bool operator==(const Sense &other) const;
};

struct ResolutionRecord {
  SenseKey from;
  std::string genus_word;
  SenseKey target;

  bool operator==(const ResolutionRecord &) const = default;
};

struct Lexicon {
  std::vector<Sense> entries;
  std::map<SenseKey, std::vector<std::string>> seed_frames;
  std::vector<ResolutionRecord> resolutions;

  bool empty() const { return entries.empty(); }
  bool HasSense(const SenseKey &key) const;

  // Distinct sense keys in file order.
  std::vector<SenseKey> SenseKeys() const;

  // All definition lines of one sense, in file order.
  std::vector<const Sense *> LinesOf(const SenseKey &key) const;

  bool operator==(const Lexicon &) const = default;
};

// Parses LEXF text. The Into form appends to an existing lexicon so that
// several files can be combined.
Lexicon ParseLexf(std::string_view text);
void ParseLexfInto(std::string_view text, Lexicon *lexicon);

// Reads and parses a LEXF file.
Lexicon LoadLexf(const std::string &path);
void LoadLexfInto(const std::string &path, Lexicon *lexicon);

// Writes a lexicon back out as LEXF. Parsing the output yields an equal
// lexicon.
std::string WriteLexf(const Lexicon &lexicon);

// All definition lines across homographs for a headword, optionally limited
// to one part of speech (a "vb" entry matches vi and vt queries).
std::vector<Sense> SensesOf(const Lexicon &lexicon, std::string_view headword,
                            std::optional<PartOfSpeech> pos = std::nullopt);

// ---------------------------------------------------------------------------
// Definition structure.

enum class PhraseKind { kPrepPhrase, kAdverb, kInfinitive, kClause, kCoordination };

std::string_view PhraseKindName(PhraseKind kind);

struct Phrase {
  PhraseKind kind = PhraseKind::kPrepPhrase;
  std::optional<std::string> prep;  // present iff kind == kPrepPhrase
  std::string text;

  bool operator==(const Phrase &) const = default;
};

struct ParsedDefinition {
  std::vector<std::string> genus;
  std::optional<std::string> genus_complement;
  std::optional<std::string> specified_object;
  std::vector<Phrase> differentiae;
  bool negated = false;

  // Definitions ending in "to be" take an adjective complement.
  bool TakesAdjectiveComplement() const;

  bool operator==(const ParsedDefinition &) const = default;
};

// Words recognized as coordinated verb heads in addition to the first word.
const std::set<std::string> &DefiningVerbs();

// Segments definition text into genus head(s) and differentiae. Throws
// LexError if a verb definition has no recognizable verb head.
ParsedDefinition ParseDefinition(std::string_view text, PartOfSpeech pos);

// Parsed form of one definition line; synonym-only lines yield the synonym
// as a single genus head.
ParsedDefinition ParseSenseLine(const Sense &sense);

bool IsPreposition(std::string_view word);
bool IsHedge(std::string_view word);
bool IsAdverb(std::string_view word);

}  // namespace lexigraph

#endif  // LEXIGRAPH_LEXICON_H_
