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


// Sense selection networks: per headword, a tree of questions whose answers
// narrow the set of senses a use of the word can have.

#ifndef LEXIGRAPH_SSN_H_
#define LEXIGRAPH_SSN_H_

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lexigraph/frames.h"
#include "lexigraph/lexicon.h"

namespace lexigraph {

enum class QuestionKind { kPos, kTransitivity, kObjIs, kObjSat, kAdjComplement, kUsage, kFrameDiff };

std::string_view QuestionKindName(QuestionKind kind);

// Answers for condition questions (USAGE, OBJ-IS, ADJ-COMPLEMENT).
inline constexpr std::string_view kPresent = "present";
inline constexpr std::string_view kAbsent = "absent";
// Answer at a node carrying a sense: the carried sense itself applies.
inline constexpr std::string_view kGeneral = "general";

struct Question {
  QuestionKind kind = QuestionKind::kFrameDiff;
  // FRAME-DIFF: readable slot path and tuple sort key. USAGE: the required
  // prepositions. OBJ-IS: the object word.
  std::string path;
  std::string sort_key;
  std::vector<std::string> preps;
  std::vector<std::string> alternatives;  // branch answers, in branch order

  std::string ToString() const;
};

struct SsnBranch {
  std::string answer;
  int child = -1;
};

struct SsnNode {
  std::optional<Question> question;  // absent at terminals
  std::vector<SsnBranch> branches;
  // Terminal: its sense. Question node: the general sense it carries, if any.
  std::optional<SenseKey> sense;

  bool terminal() const { return !question.has_value(); }
};

class Ssn {
 public:
  const std::string &headword() const { return headword_; }
  const std::vector<SsnNode> &nodes() const { return nodes_; }
  const SsnNode &root() const { return nodes_.front(); }
  const std::set<SenseKey> &senses() const { return senses_; }
  const Frame &FrameOf(const SenseKey &key) const { return frames_.at(key); }

  int QuestionCount() const;
  // Terminal node ids in node order.
  std::vector<int> Terminals() const;

 private:
  friend class SsnBuilder;
  std::string headword_;
  std::vector<SsnNode> nodes_;
  std::set<SenseKey> senses_;
  std::map<SenseKey, Frame> frames_;
};

// Compiles the network for every sense of a headword. Throws LexError when the
// headword has no senses, a sense has no frame, or two senses of the headword
// have identical canonical frames.
Ssn CompileSsn(const Lexicon &lexicon, const FrameStore &frames, const std::string &headword);

// Compiles networks for every headword in the lexicon.
std::map<std::string, Ssn> CompileAll(const Lexicon &lexicon, const FrameStore &frames);

// An answer label for the question, or nullopt for unknown.
using AnswerOracle = std::function<std::optional<std::string>(const Question &)>;

struct TraversalResult {
  std::set<SenseKey> senses;
  bool terminal = false;  // one terminal reached and nothing else retained
  std::vector<std::string> open_questions;
  std::vector<int> visited;  // question nodes reached, in visit order
};

TraversalResult Traverse(const Ssn &ssn, const AnswerOracle &oracle);

// Per node id, the answers that lead from the root to it.
std::map<int, std::vector<std::pair<std::string, std::string>>> PathsToNodes(const Ssn &ssn);

std::string SsnToDot(const Ssn &ssn);
std::string SsnToText(const Ssn &ssn);

}  // namespace lexigraph

#endif  // LEXIGRAPH_SSN_H_
