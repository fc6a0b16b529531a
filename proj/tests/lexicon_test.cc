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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "lexigraph/lexicon.h"
#include "lexigraph/text.h"
#include "test_util.h"

namespace lexigraph {
namespace {

using testing::Corpus;
using testing::DataPath;
using testing::Key;

std::vector<std::string> Texts(const std::vector<Phrase> &phrases) {
  std::vector<std::string> out;
  for (const Phrase &p : phrases) {
    out.push_back(std::string(PhraseKindName(p.kind)) + ":" + p.prep.value_or("") + ":" + p.text);
  }
  return out;
}

TEST_CASE("single entry parses") {
  Lexicon l = ParseLexf(
      "E|change|vi|1\n"
      "S|1||become different in one or more respects without becoming something else|\n");
  REQUIRE(l.entries.size() == 1);
  const Sense &s = l.entries[0];
  CHECK(s.headword == "change");
  CHECK(s.pos == PartOfSpeech::kVi);
  CHECK(s.homograph == 1);
  CHECK(s.label.text() == "1");
  CHECK(s.raw_definition == "become different in one or more respects without becoming something else");
  CHECK_FALSE(s.usage_note.has_value());
  CHECK(s.key().ToString() == "change:vi:1:1");
}

TEST_CASE("empty input gives empty lexicon") {
  CHECK(ParseLexf("").empty());
  CHECK(ParseLexf("# only a comment\n\n").empty());
}

TEST_CASE("synonym lines") {
  Lexicon l = ParseLexf("E|change|vi|1\nS|1a||lose or acquire|\nY|1a|ALTER\nS|2||BREAK|used with into\n");
  REQUIRE(l.entries.size() == 3);
  CHECK(l.entries[1].synonym_only());
  CHECK(l.entries[1].raw_definition.empty());
  CHECK(l.entries[1].synonym_refs == std::vector<std::string>{"alter"});
  CHECK(l.entries[1].line_index == 1);
  CHECK(l.entries[2].synonym_only());
  CHECK(l.entries[2].usage_note == "used with into");
}

TEST_CASE("ingestion errors carry line numbers") {
  auto line_of = [](const std::string &text) {
    try {
      ParseLexf(text);
    } catch (const LexError &e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("E|a|vi|1\nQ|1|x\n") == 2);                       // bad kind
  CHECK(line_of("E|a|vi|1\nS|1|def|\n") == 2);                    // field count
  CHECK(line_of("E|a|vi\n") == 1);                                // field count
  CHECK(line_of("E|a|vi|1\nS|1||x|\nE|a|vi|1\n") == 3);           // duplicate key
  CHECK(line_of("E|a|vi|1\nS|1||x|\nF|2|PRED X\n") == 3);         // unknown sense
  CHECK(line_of("E|a|zz|1\n") == 1);                              // bad pos
  CHECK(line_of("E|a|vi|0\n") == 1);                              // bad homograph
  CHECK(line_of("E|a|vi|1\nS|1x(2||x|\n") == 2);                  // bad label
  CHECK(line_of("S|1||x|\n") == 1);                               // no entry
  CHECK(line_of("E|a|vi|1\nS|1|weird||\n") == 2);                 // bad status
  CHECK(line_of("R|a:vi|b|c:vi:1\n") == 1);                       // bad key
}

TEST_CASE("F lines keep pipes in the payload") {
  Lexicon l = ParseLexf("E|a|vi|1\nS|1||x y|\nF|1|SLOT SUBJ CASE PAT|AGT\n");
  REQUIRE(l.seed_frames.size() == 1);
  CHECK(l.seed_frames.begin()->second == std::vector<std::string>{"SLOT SUBJ CASE PAT|AGT"});
}

TEST_CASE("sense labels") {
  CHECK(SenseLabel::Valid("1"));
  CHECK(SenseLabel::Valid("1b"));
  CHECK(SenseLabel::Valid("1b(2)"));
  CHECK(SenseLabel::Valid("11b"));
  CHECK(SenseLabel::Valid("4(1)"));
  CHECK_FALSE(SenseLabel::Valid("lb"));
  CHECK_FALSE(SenseLabel::Valid("1B"));
  CHECK_FALSE(SenseLabel::Valid("1b(2"));
  CHECK_FALSE(SenseLabel::Valid(""));
  CHECK(SenseLabel("1b(2)").Parent()->text() == "1b");
  CHECK(SenseLabel("1b").Parent()->text() == "1");
  CHECK_FALSE(SenseLabel("1").Parent().has_value());
  CHECK(SenseLabel("1b(2)").IsDescendantOf(SenseLabel("1")));
  CHECK_FALSE(SenseLabel("1").IsDescendantOf(SenseLabel("1")));
  CHECK_FALSE(SenseLabel("2a").IsDescendantOf(SenseLabel("1")));
}

TEST_CASE("sense keys") {
  SenseKey k = Key("change:vi:1b(1)");
  CHECK(k.homograph == 1);
  CHECK(k.ToString() == "change:vi:1:1b(1)");
  CHECK(Key("chop and change:vi:2:2").homograph == 2);
  CHECK_THROWS_AS(Key("change:qq:1"), LexError);
}

TEST_CASE("corpus counts") {
  const Lexicon &l = Corpus();
  std::set<std::string> change_labels;
  for (const Sense &s : SensesOf(l, "change", PartOfSpeech::kVi)) change_labels.insert(s.label.text());
  CHECK(change_labels.size() == 19);

  std::set<SenseKey> using_rows;
  int using_lines = 0;
  for (const Sense &s : l.entries) {
    if (s.headword == "change") continue;
    using_rows.insert(s.key());
    ++using_lines;
  }
  CHECK(using_rows.size() == 47);
  CHECK(using_lines == 49);
}

TEST_CASE("senses_of") {
  const Lexicon &l = Corpus();
  CHECK(SensesOf(l, "zzz", PartOfSpeech::kVi).empty());
  CHECK(SensesOf(l, "change").size() >= SensesOf(l, "change", PartOfSpeech::kVi).size());
  // A vb entry answers a vi query.
  CHECK(SensesOf(l, "coalify", PartOfSpeech::kVi).size() == 1);
  CHECK(SensesOf(l, "follow", PartOfSpeech::kVi).empty());
  auto turn = SensesOf(l, "turn", PartOfSpeech::kVi);
  REQUIRE(turn.size() == 4);
  CHECK(turn[0].label.text() == "3b(1)");
  CHECK(turn[3].label.text() == "6b(2)");
}

TEST_CASE("loading is deterministic") {
  CHECK(LoadLexf(DataPath("change_corpus.lexf")) == LoadLexf(DataPath("change_corpus.lexf")));
}

TEST_CASE("parse_definition examples") {
  ParsedDefinition d = ParseDefinition("change into coal by the process of coalification", PartOfSpeech::kVb);
  CHECK(d.genus == std::vector<std::string>{"change"});
  CHECK(Texts(d.differentiae) ==
        std::vector<std::string>{"prep-phrase:into:coal", "prep-phrase:by:the process of coalification"});

  d = ParseDefinition("to clear (water) from a boat by dipping and throwing over the side", PartOfSpeech::kVt);
  CHECK(d.genus == std::vector<std::string>{"clear"});
  CHECK(d.specified_object == "water");
  CHECK(d.differentiae.front().prep == "from");

  d = ParseDefinition("not change", PartOfSpeech::kVi);
  CHECK(d.genus == std::vector<std::string>{"change"});
  CHECK(d.negated);
  CHECK(d.differentiae.empty());

  CHECK_THROWS_AS(ParseDefinition("into the night", PartOfSpeech::kVi), LexError);
  CHECK_THROWS_AS(ParseDefinition("", PartOfSpeech::kVi), LexError);
}

TEST_CASE("coordinated heads") {
  CHECK(ParseDefinition("pale or blush", PartOfSpeech::kVi).genus == std::vector<std::string>{"pale", "blush"});
  CHECK(ParseDefinition("lose or acquire some characteristic, property, or tendency", PartOfSpeech::kVi).genus ==
        std::vector<std::string>{"lose", "acquire"});
  ParsedDefinition d =
      ParseDefinition("turn into or become something materially different from before", PartOfSpeech::kVi);
  CHECK(d.genus == std::vector<std::string>{"turn", "become"});
  CHECK(d.genus_complement == "something materially different");
  CHECK(Texts(d.differentiae) == std::vector<std::string>{"prep-phrase:from:before"});
  d = ParseDefinition("undergo substantial substitution or replacement or be wholly replaced", PartOfSpeech::kVi);
  CHECK(d.genus == std::vector<std::string>{"undergo", "be"});
}

TEST_CASE("differentiae segmentation on corpus lines") {
  auto diffs = [](const std::string &text) { return Texts(ParseDefinition(text, PartOfSpeech::kVi).differentiae); };
  CHECK(diffs("change sharply in purport, mood, or attitude") ==
        std::vector<std::string>{"adverb::sharply", "prep-phrase:in:purport, mood, or attitude"});
  CHECK(diffs("change abruptly in line or set often with suggestion of opening") ==
        std::vector<std::string>{"adverb::abruptly", "prep-phrase:in:line or set",
                                 "prep-phrase:with:suggestion of opening"});
  CHECK(diffs("change with or as if with the wind") == std::vector<std::string>{"adverb::with or as if with the wind"});
  CHECK(diffs("change esp. pointlessly or capriciously") ==
        std::vector<std::string>{"adverb::pointlessly or capriciously"});
  CHECK(diffs("change suddenly (as from one course to another)") ==
        std::vector<std::string>{"adverb::suddenly", "clause::as from one course to another"});
  CHECK(diffs("change suddenly or violently into vapor") ==
        std::vector<std::string>{"adverb::suddenly or violently", "prep-phrase:into:vapor"});
  CHECK(diffs("change into") == std::vector<std::string>{"prep-phrase:into:"});
  CHECK(diffs("change from time to time or from one instance or occasion to another") ==
        std::vector<std::string>{"prep-phrase:from:time", "prep-phrase:to:time", "prep-phrase:from:one instance or occasion",
                                 "prep-phrase:to:another"});
  CHECK(diffs("change from one course or opinion to another as if blown by the wind") ==
        std::vector<std::string>{"prep-phrase:from:one course or opinion", "prep-phrase:to:another",
                                 "adverb::as if blown by the wind"});
  CHECK(diffs("change on the surface or throughout to a whitish mealy or crystalline powder")[2] ==
        "prep-phrase:to:a whitish mealy or crystalline powder");
}

TEST_CASE("adjective complement") {
  CHECK(ParseDefinition("cause to be", PartOfSpeech::kVt).TakesAdjectiveComplement());
  CHECK_FALSE(ParseDefinition("change into curd", PartOfSpeech::kVi).TakesAdjectiveComplement());
}

TEST_CASE("parse_definition is total over the corpus") {
  for (const Sense &s : Corpus().entries) {
    CAPTURE(s.key().ToString());
    ParsedDefinition d = ParseSenseLine(s);
    CHECK_FALSE(d.genus.empty());
  }
}

TEST_CASE("coordination count matches verb-head coordinators") {
  // Oracle: count "or"/"and" tokens directly followed by a defining verb,
  // before the first differentia boundary.
  for (const Sense &s : Corpus().entries) {
    if (s.synonym_only()) continue;
    std::vector<std::string> tokens = Tokenize(s.raw_definition);
    int coordinators = 0;
    for (size_t i = 0; i + 1 < tokens.size(); ++i) {
      if ((tokens[i] == "or" || tokens[i] == "and") && DefiningVerbs().count(tokens[i + 1])) ++coordinators;
    }
    CAPTURE(s.raw_definition);
    CHECK(ParseSenseLine(s).genus.size() == static_cast<size_t>(1 + coordinators));
  }
}

// ---------------------------------------------------------------------------
// Round-trip property over generated lexicons.

std::string RandomWord(std::mt19937 &rng) {
  static const char *kWords[] = {"alpha", "beta", "gamma", "delta", "turn", "shift", "pass", "stone", "milk"};
  std::uniform_int_distribution<int> d(0, 8);
  return kWords[d(rng)];
}

Lexicon RandomLexicon(std::mt19937 &rng) {
  Lexicon l;
  std::uniform_int_distribution<int> entries(0, 5), senses(1, 4), coin(0, 1), die(0, 5);
  static const char *kLabels[] = {"1", "1a", "1b", "1b(1)", "1b(2)", "2", "2a", "3", "11b"};
  static const char *kStatus[] = {"obs", "dial", "Brit", "specif", "subject:moon", "field:chem"};
  static const PartOfSpeech kPos[] = {PartOfSpeech::kVi, PartOfSpeech::kVt, PartOfSpeech::kVb, PartOfSpeech::kNoun};
  std::set<std::tuple<std::string, PartOfSpeech, int>> used;
  int n = entries(rng);
  for (int e = 0; e < n; ++e) {
    std::string head = RandomWord(rng);
    if (coin(rng)) head += " " + RandomWord(rng);
    PartOfSpeech pos = kPos[die(rng) % 4];
    int hom = 1 + coin(rng);
    if (!used.emplace(head, pos, hom).second) continue;
    int m = senses(rng);
    for (int s = 0; s < m; ++s) {
      Sense sense;
      sense.headword = head;
      sense.pos = pos;
      sense.homograph = hom;
      sense.label = SenseLabel(kLabels[std::uniform_int_distribution<int>(0, 8)(rng)]);
      int index = 0;
      for (const Sense &o : l.entries) index += o.key() == sense.key();
      sense.line_index = index;
      if (coin(rng)) sense.status.insert(kStatus[die(rng)]);
      if (die(rng) == 0) {
        sense.synonym_refs.push_back(RandomWord(rng));
      } else {
        sense.raw_definition = RandomWord(rng) + " into " + RandomWord(rng) + ", or " + RandomWord(rng);
      }
      if (coin(rng)) sense.usage_note = "used with " + RandomWord(rng);
      l.entries.push_back(sense);
      if (die(rng) == 0) l.seed_frames[sense.key()].push_back("SLOT SUBJ CASE PAT|AGT");
    }
  }
  if (!l.entries.empty() && coin(rng)) {
    l.resolutions.push_back({l.entries.front().key(), "turn", l.entries.back().key()});
  }
  return l;
}

TEST_CASE("round trip: write then parse yields an equal lexicon") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 500; ++trial) {
    Lexicon l = RandomLexicon(rng);
    std::string text = WriteLexf(l);
    CAPTURE(text);
    Lexicon back = ParseLexf(text);
    REQUIRE(back == l);
    CHECK(WriteLexf(back) == text);
  }
}

TEST_CASE("round trip on the bundled corpus") {
  Lexicon l = testing::ResolvedCorpus();
  CHECK(ParseLexf(WriteLexf(l)) == l);
}

}  // namespace
}  // namespace lexigraph
