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


// Disambiguation of verbs in short sentences by walking their sense
// selection networks with answers read off the sentence, plus slot
// carryover across sentences.

#ifndef LEXIGRAPH_PARSER_H_
#define LEXIGRAPH_PARSER_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lexigraph/frames.h"
#include "lexigraph/lexicon.h"
#include "lexigraph/prep_rules.h"
#include "lexigraph/ssn.h"

namespace lexigraph {

enum class ChunkKind { kVerb, kNounPhrase, kPrepPhrase, kAdverb, kParticle };

std::string_view ChunkKindName(ChunkKind kind);

struct Chunk {
  ChunkKind kind = ChunkKind::kNounPhrase;
  std::vector<std::string> tokens;  // the preposition itself is not included
  std::optional<std::string> prep;  // prep phrases and particles
  std::string lemma;                // verbs: the headword found in the lexicon

  std::string Text() const;
  std::string Head() const;  // last token, "" when empty

  bool operator==(const Chunk &) const = default;
};

// Lowercased word tokens; punctuation dropped.
std::vector<std::string> SentenceTokens(std::string_view text);

// Headword of the lexicon this verb form belongs to, trying the form itself
// and -s, -d, -ed, -ing removals.
std::optional<std::string> VerbLemma(const std::string &word, const Lexicon &lexicon);

// Noun phrase, verb, then prep phrases, adverbs, particles and an object.
// Throws LexError on empty input. Without a known verb there is no verb chunk.
std::vector<Chunk> ChunkSentence(const std::vector<std::string> &tokens, const Lexicon &lexicon);

// What the answer oracle reads from a sentence.
struct SentenceContext {
  std::optional<std::string> subject;       // subject noun phrase text
  std::optional<std::string> object;        // direct object text
  std::vector<std::pair<std::string, std::string>> preps;  // (prep, object text)
  std::vector<std::string> adverbs;
  std::vector<std::string> particles;

  bool HasPrep(const std::string &prep) const;
  std::optional<std::string> ObjectOf(const std::string &prep) const;
};

SentenceContext ContextOf(const std::vector<Chunk> &chunks);

struct ParserResources {
  const Lexicon &lexicon;
  const FrameStore &frames;
  const std::map<std::string, Ssn> &ssns;
  const PrepRules &rules;
};

// Hands out ?v1, ?v2, ... across a discourse.
class DescriptorCounter {
 public:
  std::string Next() { return "?v" + std::to_string(++n_); }
  int issued() const { return n_; }

 private:
  int n_ = 0;
};

struct DisambiguationResult {
  std::string word;
  std::string lemma;
  std::set<SenseKey> candidates;
  bool unique = false;
  std::optional<Frame> frame;  // representative frame, instantiated
  std::vector<std::string> open_questions;
  // Slot path -> value placed from the sentence.
  std::vector<std::pair<std::string, std::string>> fills;
};

// Answers a network's questions from a sentence context. Questions the
// sentence does not settle are answered from the sense whose frame names the
// subject, when exactly one does.
AnswerOracle ContextOracle(const ParserResources &res, const Ssn &ssn, const SentenceContext &ctx);

// Object is an essential change of kind unless its head (or every
// alternative's head) is attribute vocabulary of the family-1 frames or the
// subject's own head. nullopt when alternatives disagree.
std::optional<bool> EssentialChange(const ParserResources &res, const std::string &object,
                                    const std::optional<std::string> &subject);

// Disambiguates the verb chunk of a chunked sentence. Throws LexError when
// there is no verb chunk or its headword has no network.
DisambiguationResult Disambiguate(const ParserResources &res, const std::vector<Chunk> &chunks,
                                  DescriptorCounter *counter);

// Same, from an already extracted context.
DisambiguationResult DisambiguateContext(const ParserResources &res, const std::string &word,
                                         const std::string &lemma, const SentenceContext &ctx,
                                         DescriptorCounter *counter);

// Tokenize, chunk and disambiguate one sentence.
DisambiguationResult ParseSentence(const ParserResources &res, std::string_view text, DescriptorCounter *counter);

// Uses a definition's differentiae as the context for its genus word.
struct DefinitionDisambiguation {
  SenseKey sense;
  std::string genus_word;
  std::vector<SenseKey> candidates;  // ranked: sense-key order
  std::optional<ResolutionRecord> record;  // when exactly one sense remains
  std::vector<std::string> open_questions;
};

std::optional<DefinitionDisambiguation> DisambiguateInDefinition(const ParserResources &res,
                                                                 const SenseKey &sense);

// Every sense whose genus word has a network.
std::vector<DefinitionDisambiguation> AutoResolve(const ParserResources &res);

// Discourse --------------------------------------------------------------

struct Entity {
  std::string var;
  std::string head;
  int sentence = 0;
};

struct Binding {
  std::string var;
  std::string value;
  int sentence = 0;  // sentence whose fill bound it
};

struct DiscourseState {
  std::vector<Entity> entities;
  std::vector<Binding> bindings;
  // Per sentence: unfilled slot paths holding descriptors.
  std::map<int, std::vector<std::string>> pending;
};

struct DiscourseResult {
  std::vector<DisambiguationResult> sentences;
  DiscourseState state;
};

// With coreference off every sentence is disambiguated on its own.
DiscourseResult ParseDiscourse(const ParserResources &res, const std::vector<std::string> &sentences,
                               bool coreference = true);

// Indented text and TSV renderings.
std::string ResultToText(const DisambiguationResult &result);
std::string ResultToTsv(const DisambiguationResult &result);

}  // namespace lexigraph

#endif  // LEXIGRAPH_PARSER_H_
