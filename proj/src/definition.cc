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

// Segmentation of definition text into genus and differentiae. This is a
// longest-match chunker over tokens, not a grammar.

#include <algorithm>
#include <cctype>

#include "lexigraph/lexicon.h"
#include "lexigraph/text.h"

namespace lexigraph {

namespace {

bool In(std::string_view word, std::initializer_list<std::string_view> set) {
  return std::find(set.begin(), set.end(), word) != set.end();
}

bool IsCoordinator(std::string_view w) { return w == "or" || w == "and"; }

bool IsParticle(std::string_view w) {
  return In(w, {"up", "out", "off", "over", "round", "down", "back", "away"});
}

// Prepositions that open a new differentia chunk. "of" only continues a
// noun phrase.
bool StartsChunk(std::string_view w) { return w != "of" && IsPreposition(w); }

bool IsWord(std::string_view w) {
  return !w.empty() && std::isalpha(static_cast<unsigned char>(w[0]));
}

// Joins tokens back into text, with commas and parentheses attached.
std::string JoinTokens(const std::vector<std::string> &tokens) {
  std::string out;
  for (const std::string &t : tokens) {
    bool attach_left = t == "," || t == ")" || t == ";";
    if (!out.empty() && !attach_left && out.back() != '(') out.push_back(' ');
    out += t;
  }
  return out;
}

struct Chunk {
  PhraseKind kind;
  std::string prep;
  std::vector<std::string> tokens;
  bool as_if = false;
};

class Segmenter {
 public:
  Segmenter(std::vector<std::string> tokens, PartOfSpeech pos)
      : tok_(std::move(tokens)), pos_(pos) {}

  ParsedDefinition Run(std::string_view text) {
    size_t i = 0;
    if (i < tok_.size() && tok_[i] == "to" && IsVerb(pos_)) ++i;
    if (i < tok_.size() && tok_[i] == "not") {
      out_.negated = true;
      ++i;
    }
    if (IsVerb(pos_)) {
      if (i >= tok_.size() || !IsWord(tok_[i]) || StartsChunk(tok_[i])) {
        throw LexError("no verb head in definition '" + std::string(text) + "'");
      }
      i = Heads(i);
    } else {
      i = NounHead(i);
      if (out_.genus.empty()) {
        throw LexError("no head word in definition '" + std::string(text) + "'");
      }
    }
    Differentiae(i);
    if (!complements_.empty()) out_.genus_complement = Join(complements_, "; ");
    return out_;
  }

 private:
  const std::string &At(size_t i) const {
    static const std::string kEmpty;
    return i < tok_.size() ? tok_[i] : kEmpty;
  }

  bool CoordinatedVerb(size_t i) const {
    return IsCoordinator(At(i)) && DefiningVerbs().count(At(i + 1)) > 0;
  }

  // True if the adverb run starting at i ends at a chunk boundary, so the
  // run modifies the verb rather than a following complement.
  bool AdverbRunIsFree(size_t i) const {
    while (i < tok_.size() && (IsAdverb(tok_[i]) || IsCoordinator(tok_[i]))) ++i;
    return i >= tok_.size() || StartsChunk(tok_[i]) || IsHedge(tok_[i]) || tok_[i] == "(" ||
           (tok_[i] == "as" && At(i + 1) == "if");
  }

  // Verb heads, particles, specified object and complement.
  size_t Heads(size_t i) {
    out_.genus.push_back(tok_[i++]);
    std::vector<std::string> complement;
    auto flush_complement = [&]() {
      while (!complement.empty() && (IsCoordinator(complement.back()) || complement.back() == ",")) {
        complement.pop_back();
      }
      if (!complement.empty()) complements_.push_back(JoinTokens(complement));
      complement.clear();
    };
    bool just_headed = true;
    while (i < tok_.size()) {
      const std::string &w = tok_[i];
      if (just_headed) {
        // "turn into or become": the preposition belongs to the first head.
        if (StartsChunk(w) && CoordinatedVerb(i + 1)) {
          i += 1;
          continue;
        }
        if (IsParticle(w) &&
            (i + 1 >= tok_.size() || StartsChunk(At(i + 1)) || IsCoordinator(At(i + 1)) ||
             In(w, {"up", "out", "off", "away", "back", "down"}))) {
          ++i;
          continue;
        }
        if (w == "(" && !out_.specified_object) {
          size_t close = i + 1;
          while (close < tok_.size() && tok_[close] != ")") ++close;
          std::vector<std::string> inner(tok_.begin() + i + 1, tok_.begin() + close);
          out_.specified_object = JoinTokens(inner);
          i = close < tok_.size() ? close + 1 : close;
          just_headed = false;
          continue;
        }
      }
      if (CoordinatedVerb(i)) {
        flush_complement();
        out_.genus.push_back(tok_[i + 1]);
        i += 2;
        just_headed = true;
        continue;
      }
      if (StartsChunk(w) || IsHedge(w) || w == "(" || w == ";" || (w == "as" && At(i + 1) == "if")) {
        break;
      }
      if (complement.empty() && IsAdverb(w) && AdverbRunIsFree(i)) break;
      if (w == "more" && IsAdverb(At(i + 1)) && complement.empty() && AdverbRunIsFree(i + 1)) break;
      complement.push_back(w);
      just_headed = false;
      ++i;
    }
    flush_complement();
    return i;
  }

  size_t NounHead(size_t i) {
    std::vector<std::string> np;
    while (i < tok_.size() && !StartsChunk(tok_[i]) && tok_[i] != "(" && tok_[i] != ";") {
      np.push_back(tok_[i++]);
    }
    std::string head = HeadWord(JoinTokens(np));
    if (!head.empty()) out_.genus.push_back(head);
    return i;
  }

  void Close() {
    if (!current_) return;
    Chunk c = std::move(*current_);
    current_.reset();
    while (!c.tokens.empty() && (IsCoordinator(c.tokens.back()) || c.tokens.back() == ",")) {
      c.tokens.pop_back();
    }
    Phrase p;
    p.kind = c.kind;
    p.text = JoinTokens(c.tokens);
    if (c.kind == PhraseKind::kPrepPhrase) p.prep = c.prep;
    if (c.kind != PhraseKind::kPrepPhrase && p.text.empty()) return;
    out_.differentiae.push_back(std::move(p));
  }

  void Open(PhraseKind kind, std::string prep = "") {
    Close();
    current_ = Chunk{kind, std::move(prep), {}, false};
  }

  bool ObjectEmpty() const {
    return std::all_of(current_->tokens.begin(), current_->tokens.end(),
                       [](const std::string &t) { return IsCoordinator(t) || t == ","; });
  }

  void Differentiae(size_t i) {
    while (i < tok_.size()) {
      const std::string &w = tok_[i];
      if (w == "(") {
        size_t close = i + 1;
        int depth = 1;
        while (close < tok_.size()) {
          if (tok_[close] == "(") ++depth;
          if (tok_[close] == ")" && --depth == 0) break;
          ++close;
        }
        Close();
        current_ = Chunk{PhraseKind::kClause, "", {tok_.begin() + i + 1, tok_.begin() + close}, false};
        Close();
        i = close + 1;
        continue;
      }
      if (current_ && current_->as_if) {
        current_->tokens.push_back(w);
        ++i;
        continue;
      }
      if (IsHedge(w) || w == ";") {
        Close();
        ++i;
        continue;
      }
      if (w == "as" && At(i + 1) == "if") {
        std::vector<std::string> lead;
        if (current_ && current_->kind == PhraseKind::kPrepPhrase && ObjectEmpty()) {
          lead.push_back(current_->prep);
          lead.insert(lead.end(), current_->tokens.begin(), current_->tokens.end());
          current_.reset();
        }
        Open(PhraseKind::kAdverb);
        current_->tokens = lead;
        current_->tokens.push_back("as");
        current_->tokens.push_back("if");
        current_->as_if = true;
        i += 2;
        continue;
      }
      if (StartsChunk(w)) {
        // "from before": a bare adverbial preposition as the last word.
        if (current_ && current_->kind == PhraseKind::kPrepPhrase && current_->tokens.empty() &&
            i + 1 == tok_.size()) {
          current_->tokens.push_back(w);
          ++i;
          continue;
        }
        if (w == "to" && (At(i + 1) == "be" || DefiningVerbs().count(At(i + 1)))) {
          Open(PhraseKind::kInfinitive);
          ++i;
          while (i < tok_.size() && !StartsChunk(tok_[i]) && !IsHedge(tok_[i]) && tok_[i] != "(") {
            current_->tokens.push_back(tok_[i++]);
          }
          continue;
        }
        Open(PhraseKind::kPrepPhrase, w);
        ++i;
        continue;
      }
      bool adverb_start = IsAdverb(w) || (In(w, {"more", "most", "less"}) && IsAdverb(At(i + 1)));
      if (adverb_start) {
        // Inside a noun phrase an -ly word is an adjective ("a whitish mealy
        // powder") unless it ends the phrase.
        size_t first = IsAdverb(w) ? i : i + 1;
        bool in_noun_phrase = current_ && current_->kind != PhraseKind::kAdverb &&
                              !ObjectEmpty() && !AdverbRunIsFree(first);
        if (!in_noun_phrase) {
          if (!current_ || current_->kind != PhraseKind::kAdverb) {
            if (!(current_ && current_->kind == PhraseKind::kPrepPhrase && ObjectEmpty() &&
                  !current_->tokens.empty())) {
              Open(PhraseKind::kAdverb);
            }
          }
          current_->tokens.push_back(w);
          ++i;
          continue;
        }
      }
      if (IsCoordinator(w) && current_ && current_->kind == PhraseKind::kAdverb) {
        if (IsAdverb(At(i + 1)) || In(At(i + 1), {"more", "most", "less"})) {
          current_->tokens.push_back(w);
        } else {
          Close();
        }
        ++i;
        continue;
      }
      if (!current_ || current_->kind == PhraseKind::kAdverb) Open(PhraseKind::kClause);
      current_->tokens.push_back(w);
      ++i;
    }
    Close();
  }

  std::vector<std::string> tok_;
  PartOfSpeech pos_;
  ParsedDefinition out_;
  std::vector<std::string> complements_;
  std::optional<Chunk> current_;
};

}  // namespace

std::string_view PhraseKindName(PhraseKind kind) {
  switch (kind) {
    case PhraseKind::kPrepPhrase: return "prep-phrase";
    case PhraseKind::kAdverb: return "adverb";
    case PhraseKind::kInfinitive: return "infinitive";
    case PhraseKind::kClause: return "clause";
    case PhraseKind::kCoordination: return "coordination";
  }
  return "?";
}

bool ParsedDefinition::TakesAdjectiveComplement() const {
  return !differentiae.empty() && differentiae.back().kind == PhraseKind::kInfinitive &&
         differentiae.back().text == "be";
}

const std::set<std::string> &DefiningVerbs() {
  static const std::set<std::string> kVerbs = {
      "accept", "acquire", "adopt",  "alter",  "be",      "become", "begin",
      "blush",  "cause",   "cease",  "change", "come",    "decrease", "disrobe",
      "engage", "experience", "get", "give",   "go",      "grow",   "increase",
      "lose",   "make",    "pale",   "pass",   "rearray", "shift",  "take",
      "turn",   "undergo"};
  return kVerbs;
}

bool IsPreposition(std::string_view w) {
  return In(w, {"aboard", "about",  "above",   "across",  "after",   "against",    "along",
                "among",  "around", "at",      "before",  "behind",  "below",      "beneath",
                "beside", "between", "beyond", "by",      "down",    "during",     "for",
                "from",   "in",     "inside",  "into",    "of",      "off",        "on",
                "onto",   "out",    "outside", "over",    "past",    "round",      "since",
                "through", "throughout", "to", "toward",  "towards", "under",      "until",
                "up",     "upon",   "with",    "within",  "without"});
}

bool IsHedge(std::string_view w) {
  return In(w, {"usu.", "usu", "esp.", "esp", "often", "chiefly", "specif", "specif.", "e.g.",
                "sometimes"});
}

bool IsAdverb(std::string_view w) {
  if (w.size() < 5 || !EndsWith(w, "ly")) return false;
  return !In(w, {"jelly", "belly", "family", "folly", "assembly", "supply", "reply", "holly",
                 "bully", "rally", "tally", "early", "only", "ugly", "silly", "lovely",
                 "friendly", "anomaly", "monopoly", "italy"});
}

ParsedDefinition ParseDefinition(std::string_view text, PartOfSpeech pos) {
  std::vector<std::string> tokens = Tokenize(ToLower(NormalizeSpace(text)));
  if (tokens.empty()) throw LexError("empty definition text");
  return Segmenter(std::move(tokens), pos).Run(text);
}

ParsedDefinition ParseSenseLine(const Sense &sense) {
  if (sense.synonym_only()) {
    ParsedDefinition parsed;
    parsed.genus = {sense.synonym_refs.front()};
    return parsed;
  }
  return ParseDefinition(sense.raw_definition, sense.pos);
}

}  // namespace lexigraph
