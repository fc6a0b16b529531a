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


#include "lexigraph/parser.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "lexigraph/text.h"

namespace lexigraph {

std::string_view ChunkKindName(ChunkKind kind) {
  switch (kind) {
    case ChunkKind::kVerb: return "verb";
    case ChunkKind::kNounPhrase: return "noun-phrase";
    case ChunkKind::kPrepPhrase: return "prep-phrase";
    case ChunkKind::kAdverb: return "adverb";
    case ChunkKind::kParticle: return "particle";
  }
  return "?";
}

std::string Chunk::Text() const { return Join(tokens, " "); }

std::string Chunk::Head() const { return tokens.empty() ? "" : tokens.back(); }

std::vector<std::string> SentenceTokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    unsigned char u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || c == '\'' || c == '-') {
      cur += static_cast<char>(std::tolower(u));
    } else if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

namespace {

bool HasVerbSense(const Lexicon &lexicon, const std::string &word) {
  for (const SenseKey &k : lexicon.SenseKeys()) {
    if (k.headword == word && IsVerb(k.pos)) return true;
  }
  return false;
}

bool IsPronoun(const std::string &word) { return word == "it" || word == "they"; }

std::string StripProvisional(const std::string &value) {
  static const std::string kMark = " (provisional)";
  return EndsWith(value, kMark) ? value.substr(0, value.size() - kMark.size()) : value;
}

std::string LastComponent(const std::string &path) {
  size_t dot = path.rfind('.');
  return dot == std::string::npos ? path : path.substr(dot + 1);
}

bool Contains(const std::vector<std::string> &v, const std::string &s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

std::optional<std::string> VerbLemma(const std::string &word, const Lexicon &lexicon) {
  std::vector<std::string> forms = {word};
  auto strip = [&](const std::string &suffix, const std::string &add) {
    if (word.size() > suffix.size() + 1 && EndsWith(word, suffix)) {
      forms.push_back(word.substr(0, word.size() - suffix.size()) + add);
    }
  };
  strip("ied", "y");
  strip("ies", "y");
  strip("d", "");
  strip("ed", "");
  strip("s", "");
  strip("ing", "");
  strip("ing", "e");
  for (const std::string &f : forms) {
    if (HasVerbSense(lexicon, f)) return f;
  }
  return std::nullopt;
}

std::vector<Chunk> ChunkSentence(const std::vector<std::string> &tokens, const Lexicon &lexicon) {
  if (tokens.empty()) throw LexError("empty input");
  // Main verb: the first known verb form not right after a determiner.
  int verb = -1;
  std::string lemma;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (IsPreposition(tokens[i]) || IsDeterminer(tokens[i])) continue;
    if (i > 0 && IsDeterminer(tokens[i - 1])) continue;
    if (auto l = VerbLemma(tokens[i], lexicon)) {
      verb = static_cast<int>(i);
      lemma = *l;
      break;
    }
  }
  std::vector<Chunk> out;
  size_t i = 0;
  if (verb > 0) {
    out.push_back({ChunkKind::kNounPhrase, {tokens.begin(), tokens.begin() + verb}, std::nullopt, ""});
  }
  if (verb >= 0) {
    out.push_back({ChunkKind::kVerb, {tokens[verb]}, std::nullopt, lemma});
    i = verb + 1;
  }
  auto stops = [&](size_t j) { return IsPreposition(tokens[j]) || IsAdverb(tokens[j]); };
  while (i < tokens.size()) {
    const std::string &tok = tokens[i];
    if (IsPreposition(tok)) {
      Chunk c{ChunkKind::kPrepPhrase, {}, tok, ""};
      ++i;
      while (i < tokens.size() && !stops(i)) c.tokens.push_back(tokens[i++]);
      if (c.tokens.empty()) c.kind = ChunkKind::kParticle;
      out.push_back(c);
    } else if (IsAdverb(tok)) {
      out.push_back({ChunkKind::kAdverb, {tok}, std::nullopt, ""});
      ++i;
    } else {
      Chunk c{ChunkKind::kNounPhrase, {}, std::nullopt, ""};
      while (i < tokens.size() && !stops(i)) c.tokens.push_back(tokens[i++]);
      out.push_back(c);
    }
  }
  return out;
}

bool SentenceContext::HasPrep(const std::string &prep) const {
  return std::any_of(preps.begin(), preps.end(), [&](const auto &p) { return p.first == prep; }) ||
         Contains(particles, prep);
}

std::optional<std::string> SentenceContext::ObjectOf(const std::string &prep) const {
  for (const auto &[p, obj] : preps) {
    if (p == prep) return obj;
  }
  return std::nullopt;
}

SentenceContext ContextOf(const std::vector<Chunk> &chunks) {
  SentenceContext ctx;
  bool after_verb = false;
  for (const Chunk &c : chunks) {
    switch (c.kind) {
      case ChunkKind::kVerb: after_verb = true; break;
      case ChunkKind::kNounPhrase:
        if (!after_verb && !ctx.subject) {
          ctx.subject = c.Text();
        } else if (after_verb && !ctx.object) {
          ctx.object = c.Text();
        }
        break;
      case ChunkKind::kPrepPhrase: ctx.preps.emplace_back(*c.prep, c.Text()); break;
      case ChunkKind::kAdverb: ctx.adverbs.push_back(c.Text()); break;
      case ChunkKind::kParticle: ctx.particles.push_back(*c.prep); break;
    }
  }
  return ctx;
}

// ---------------------------------------------------------------------------
// Answering questions

namespace {

// Words of the restrictions under ACCIDENTAL-ATTRS in BECOME-DIFFERENT frames.
std::set<std::string> AttributeVocabulary(const FrameStore &frames) {
  std::set<std::string> vocab;
  for (const auto &[key, f] : frames.frames()) {
    if (f.predicate != "BECOME-DIFFERENT") continue;
    const Slot *attrs = f.Find("ACCIDENTAL-ATTRS");
    if (!attrs) continue;
    std::function<void(const Slot &)> walk = [&](const Slot &s) {
      for (const std::string &r : s.restrictions) {
        for (const std::string &w : SentenceTokens(r)) {
          if (!IsDeterminer(w) && !IsPreposition(w) && w != "or" && w != "and") vocab.insert(w);
        }
      }
      for (const Slot &c : s.children) walk(c);
    };
    walk(*attrs);
  }
  return vocab;
}

std::string SubjectHead(const std::optional<std::string> &subject) {
  return subject ? HeadWord(ToLower(*subject)) : "";
}

// Does a (possibly "; "-joined) restriction value admit this head word?
bool RestrictionAdmits(const std::string &value, const std::string &head) {
  for (const std::string &part : Split(value, ';')) {
    for (const std::string &alt : SplitAlternatives(Trim(part))) {
      if (alt == head || HeadWord(alt) == head) return true;
      for (const std::string &w : SentenceTokens(alt)) {
        if (w == head) return true;
      }
    }
  }
  return false;
}

}  // namespace

std::optional<bool> EssentialChange(const ParserResources &res, const std::string &object,
                                    const std::optional<std::string> &subject) {
  std::set<std::string> vocab = AttributeVocabulary(res.frames);
  std::string subj = SubjectHead(subject);
  bool any_accidental = false, any_essential = false;
  std::set<std::string> alts = SplitAlternatives(ToLower(object));
  if (alts.empty()) alts.insert(ToLower(object));
  for (const std::string &alt : alts) {
    std::string head = HeadWord(alt);
    if (head.empty()) continue;
    if (vocab.count(head) || head == subj) {
      any_accidental = true;
    } else {
      any_essential = true;
    }
  }
  if (any_essential && any_accidental) return std::nullopt;
  if (!any_essential && !any_accidental) return std::nullopt;
  return any_essential;
}

AnswerOracle ContextOracle(const ParserResources &res, const Ssn &ssn, const SentenceContext &ctx) {
  std::string subj = SubjectHead(ctx.subject);
  // The one sense whose frame fills SUBJ with the subject's head.
  std::optional<SenseKey> anchor;
  if (!subj.empty()) {
    int matches = 0;
    for (const SenseKey &k : ssn.senses()) {
      const Slot *s = ssn.FrameOf(k).Find("SUBJ");
      if (s && s->filler && ToLower(FillerText(*s->filler)) == subj) {
        anchor = k;
        ++matches;
      }
    }
    if (matches != 1) anchor.reset();
  }

  auto direct = [&res, &ctx, subj](const Question &q) -> std::optional<std::string> {
    const auto &alts = q.alternatives;
    auto pick = [&](const std::string &v) -> std::optional<std::string> {
      if (Contains(alts, v)) return v;
      return std::nullopt;
    };
    switch (q.kind) {
      case QuestionKind::kPos: return pick("verb");
      case QuestionKind::kTransitivity: return std::string(ctx.object ? "transitive" : "intransitive");
      case QuestionKind::kObjIs:
        return std::string(ctx.object && HeadWord(*ctx.object) == q.path ? kPresent : kAbsent);
      case QuestionKind::kAdjComplement:
        if (ctx.object) return std::nullopt;
        return std::string(kAbsent);
      case QuestionKind::kUsage:
        for (const std::string &p : q.preps) {
          if (ctx.HasPrep(p)) return std::string(kPresent);
        }
        return std::string(kAbsent);
      case QuestionKind::kObjSat: return std::nullopt;
      case QuestionKind::kFrameDiff: break;
    }
    const std::string &path = q.path;
    std::string slot = LastComponent(path);
    if (path == "predicate") {
      std::optional<std::set<std::string>> families;
      for (const auto &[prep, obj] : ctx.preps) {
        std::set<std::string> f = res.rules.FamiliesFor(prep);
        if (f.empty()) continue;
        if (!families) {
          families = f;
        } else {
          std::set<std::string> both;
          std::set_intersection(families->begin(), families->end(), f.begin(), f.end(),
                                std::inserter(both, both.begin()));
          families = both;
        }
      }
      if (!families) return std::nullopt;
      std::optional<std::string> found;
      for (const std::string &a : alts) {
        if (families->count(StripProvisional(a))) {
          if (found) return std::nullopt;
          found = a;
        }
      }
      return found;
    }
    if (path == "pos") return pick(ctx.object ? "vt" : "vi");
    if (path == "transitivity") return pick(ctx.object ? "transitive" : "intransitive");
    if (path == "SUBJ.bind") {
      bool from = ctx.HasPrep("from");
      std::optional<std::string> target = ctx.ObjectOf("into");
      if (!target) target = ctx.ObjectOf("to");
      if (from && target) return pick("none");
      if (ctx.HasPrep("in")) return pick("none");
      if (target && !target->empty()) {
        auto essential = EssentialChange(res, *target, ctx.subject);
        if (!essential) return std::nullopt;
        return *essential ? pick("FROM-STATE") : pick("none");
      }
      return std::nullopt;
    }
    if (EndsWith(path, ".filler")) {
      std::string owner = LastComponent(path.substr(0, path.size() - 7));
      if (owner == "SUBJ") {
        if (subj.empty()) return std::nullopt;
        for (const std::string &a : alts) {
          if (a == subj || HeadWord(a) == subj) return a;
        }
        return pick("none");
      }
      for (const auto &[prep, obj] : ctx.preps) {
        for (const std::string &family : res.rules.FamiliesFor(prep)) {
          auto rule = res.rules.SlotActionFor(prep, family);
          if (!rule || rule->slot != owner) continue;
          for (const std::string &a : alts) {
            if (a == ToLower(obj)) return a;
          }
        }
      }
      return std::nullopt;
    }
    if (EndsWith(path, ".restrict")) {
      std::string owner = LastComponent(path.substr(0, path.size() - 9));
      if (owner == "RESPECT") {
        auto obj = ctx.ObjectOf("in");
        if (!obj || obj->empty()) return std::nullopt;
        std::string head = HeadWord(ToLower(*obj));
        for (const std::string &a : alts) {
          if (a != "none" && RestrictionAdmits(a, head)) return a;
        }
        return std::string("none");
      }
      if (owner == "SUBJ" && !subj.empty()) {
        for (const std::string &a : alts) {
          if (a != "none" && RestrictionAdmits(a, subj)) return a;
        }
      }
      return std::nullopt;
    }
    if (EndsWith(path, ".marker")) {
      for (const std::string &a : alts) {
        if (a == "none") continue;
        for (const std::string &p : Split(a, ' ')) {
          if (p != "or" && ctx.HasPrep(p)) return a;
        }
      }
      return std::nullopt;
    }
    return std::nullopt;
  };

  const Ssn *net = &ssn;
  return [direct, anchor, net](const Question &q) -> std::optional<std::string> {
    if (auto a = direct(q)) return a;
    if (anchor && q.kind == QuestionKind::kFrameDiff) {
      std::string v = TupleValue(Canonicalize(net->FrameOf(*anchor)), q.sort_key);
      if (Contains(q.alternatives, v)) return v;
    }
    return std::nullopt;
  };
}

// ---------------------------------------------------------------------------
// Disambiguation

namespace {

bool IsOpenFiller(const std::optional<Filler> &f) {
  if (!f) return true;
  const Descriptor *d = std::get_if<Descriptor>(&*f);
  return d && StartsWith(d->var, "?d");
}

bool IsDescriptor(const std::optional<Filler> &f) { return f && std::holds_alternative<Descriptor>(*f); }

// Candidate whose frame stands for the set: a common label ancestor if one
// is among the candidates, else the shortest label with a settled predicate.
SenseKey Representative(const std::set<SenseKey> &cands, const FrameStore &frames) {
  for (const SenseKey &p : cands) {
    bool all = std::all_of(cands.begin(), cands.end(), [&](const SenseKey &k) {
      return k == p || (k.headword == p.headword && k.pos == p.pos && k.homograph == p.homograph &&
                        k.label.IsDescendantOf(p.label));
    });
    if (all) return p;
  }
  std::optional<SenseKey> best;
  for (const SenseKey &k : cands) {
    const Frame *f = frames.Get(k);
    if (f && f->provisional) continue;
    if (!best || k.label.text().size() < best->label.text().size()) best = k;
  }
  return best ? *best : *cands.begin();
}

void Instantiate(Frame *f, const SentenceContext &ctx, const PrepRules &rules, DescriptorCounter *counter,
                 std::vector<std::pair<std::string, std::string>> *fills) {
  auto fill = [&](const std::string &path, const std::string &value) {
    Slot &s = f->Ensure(path);
    if (!IsOpenFiller(s.filler)) return;
    s.filler = value;
    fills->emplace_back(path, value);
  };
  if (ctx.subject && f->Find("SUBJ")) fill("SUBJ", *ctx.subject);
  for (const auto &[prep, obj] : ctx.preps) {
    if (obj.empty()) continue;
    auto rule = rules.SlotActionFor(prep, f->predicate);
    if (!rule) continue;
    auto path = f->PathOf(rule->slot);
    if (!path && rule->action == SlotAction::kRestrict) continue;
    fill(path ? *path : rule->slot, obj);
  }
  for (const std::string &adv : ctx.adverbs) {
    auto path = f->PathOf("MANNER");
    fill(path ? *path : "MANNER", adv);
  }
  // Coinciding slots share their value.
  for (const std::string &path : f->SlotPaths()) {
    Slot *s = f->Find(path);
    if (!s->binding) continue;
    auto other = f->PathOf(*s->binding);
    if (!other) continue;
    Slot *o = f->Find(*other);
    if (!IsOpenFiller(s->filler) && IsOpenFiller(o->filler)) {
      fill(*other, FillerText(*s->filler));
    } else if (IsOpenFiller(s->filler) && !IsOpenFiller(o->filler)) {
      fill(path, FillerText(*o->filler));
    }
  }
  static const std::set<std::string> kMandatory = {"SUBJ", "FROM-STATE", "TO-STATE"};
  for (const std::string &path : f->SlotPaths()) {
    Slot *s = f->Find(path);
    std::string name = LastComponent(path);
    bool mandatory = kMandatory.count(name) || (name == "OBJ" && ctx.object);
    if (!mandatory || !IsOpenFiller(s->filler)) continue;
    std::vector<std::string> features = s->restrictions;
    if (features.empty()) features.push_back(name + " in context");
    s->filler = Descriptor{counter->Next(), features};
  }
}

std::vector<std::string> DescriptorPaths(const Frame &f) {
  std::vector<std::string> out;
  for (const std::string &p : f.SlotPaths()) {
    if (IsDescriptor(f.Find(p)->filler)) out.push_back(p);
  }
  return out;
}

}  // namespace

DisambiguationResult DisambiguateContext(const ParserResources &res, const std::string &word,
                                         const std::string &lemma, const SentenceContext &ctx,
                                         DescriptorCounter *counter) {
  auto it = res.ssns.find(lemma);
  if (it == res.ssns.end()) throw LexError("no sense network for '" + lemma + "'");
  const Ssn &ssn = it->second;
  TraversalResult tr = Traverse(ssn, ContextOracle(res, ssn, ctx));
  DisambiguationResult r;
  r.word = word;
  r.lemma = lemma;
  r.candidates = tr.senses;
  r.unique = tr.senses.size() == 1;
  r.open_questions = tr.open_questions;
  SenseKey rep = Representative(tr.senses, res.frames);
  Frame f = ssn.FrameOf(rep);
  Instantiate(&f, ctx, res.rules, counter, &r.fills);
  r.frame = f;
  return r;
}

DisambiguationResult Disambiguate(const ParserResources &res, const std::vector<Chunk> &chunks,
                                  DescriptorCounter *counter) {
  auto verb = std::find_if(chunks.begin(), chunks.end(), [](const Chunk &c) { return c.kind == ChunkKind::kVerb; });
  if (verb == chunks.end()) throw LexError("no known verb in sentence");
  return DisambiguateContext(res, verb->Text(), verb->lemma, ContextOf(chunks), counter);
}

DisambiguationResult ParseSentence(const ParserResources &res, std::string_view text, DescriptorCounter *counter) {
  return Disambiguate(res, ChunkSentence(SentenceTokens(text), res.lexicon), counter);
}

std::optional<DefinitionDisambiguation> DisambiguateInDefinition(const ParserResources &res,
                                                                 const SenseKey &sense) {
  std::vector<const Sense *> lines = res.lexicon.LinesOf(sense);
  const Sense *line = nullptr;
  for (const Sense *l : lines) {
    if (!l->synonym_only()) {
      line = l;
      break;
    }
  }
  if (!line && !lines.empty()) line = lines.front();
  if (!line) return std::nullopt;
  ParsedDefinition d = ParseSenseLine(*line);
  if (d.genus.empty()) return std::nullopt;
  std::string genus = ToLower(d.genus.front());
  if (!res.ssns.count(genus)) return std::nullopt;

  SentenceContext ctx;
  for (const Sense *l : lines) {
    if (auto s = l->subject()) ctx.subject = *s;
    if (auto s = UsageSubject(l->usage_note)) ctx.subject = *s;
  }
  for (const Phrase &p : d.differentiae) {
    if (p.kind == PhraseKind::kPrepPhrase) ctx.preps.emplace_back(*p.prep, p.text);
    if (p.kind == PhraseKind::kAdverb) ctx.adverbs.push_back(p.text);
  }
  const Ssn &ssn = res.ssns.at(genus);
  TraversalResult tr = Traverse(ssn, ContextOracle(res, ssn, ctx));
  DefinitionDisambiguation out;
  out.sense = sense;
  out.genus_word = genus;
  out.candidates.assign(tr.senses.begin(), tr.senses.end());
  out.open_questions = tr.open_questions;
  if (tr.senses.size() == 1) out.record = ResolutionRecord{sense, genus, *tr.senses.begin()};
  return out;
}

std::vector<DefinitionDisambiguation> AutoResolve(const ParserResources &res) {
  std::vector<DefinitionDisambiguation> out;
  for (const SenseKey &k : res.lexicon.SenseKeys()) {
    if (auto d = DisambiguateInDefinition(res, k)) out.push_back(std::move(*d));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Discourse

DiscourseResult ParseDiscourse(const ParserResources &res, const std::vector<std::string> &sentences,
                               bool coreference) {
  DiscourseResult out;
  DescriptorCounter counter;
  std::vector<SentenceContext> contexts;
  for (size_t i = 0; i < sentences.size(); ++i) {
    int idx = static_cast<int>(i);
    std::vector<Chunk> chunks = ChunkSentence(SentenceTokens(sentences[i]), res.lexicon);
    auto verb = std::find_if(chunks.begin(), chunks.end(), [](const Chunk &c) { return c.kind == ChunkKind::kVerb; });
    if (verb == chunks.end()) throw LexError("no known verb in sentence " + std::to_string(i + 1));
    SentenceContext ctx = ContextOf(chunks);

    std::optional<int> antecedent;
    std::string head = SubjectHead(ctx.subject);
    if (coreference && !head.empty()) {
      for (auto e = out.state.entities.rbegin(); e != out.state.entities.rend(); ++e) {
        if (IsPronoun(head) || e->head == head) {
          antecedent = e->sentence;
          break;
        }
      }
    }
    if (antecedent && IsPronoun(head)) ctx.subject = contexts[*antecedent].subject;

    out.sentences.push_back(DisambiguateContext(res, verb->Text(), verb->lemma, ctx, &counter));
    contexts.push_back(ctx);
    if (!head.empty() && !IsPronoun(head)) out.state.entities.push_back({counter.Next(), head, idx});

    // Carry this sentence's phrases back to the sentence it continues.
    if (antecedent && !out.state.pending[*antecedent].empty()) {
      int a = *antecedent;
      SentenceContext merged = contexts[a];
      for (const auto &p : ctx.preps) {
        if (!merged.HasPrep(p.first)) merged.preps.push_back(p);
      }
      for (const std::string &adv : ctx.adverbs) {
        if (!Contains(merged.adverbs, adv)) merged.adverbs.push_back(adv);
      }
      DescriptorCounter scratch;
      DisambiguationResult redo =
          DisambiguateContext(res, out.sentences[a].word, out.sentences[a].lemma, merged, &scratch);
      const Frame &old = *out.sentences[a].frame;
      std::map<std::string, std::string> old_vars;
      for (const std::string &p : DescriptorPaths(old)) {
        old_vars[LastComponent(p)] = std::get<Descriptor>(*old.Find(p)->filler).var;
      }
      for (const std::string &p : redo.frame->SlotPaths()) {
        Slot *s = redo.frame->Find(p);
        auto ov = old_vars.find(LastComponent(p));
        if (IsDescriptor(s->filler)) {
          Descriptor &d = std::get<Descriptor>(*s->filler);
          d.var = ov != old_vars.end() ? ov->second : counter.Next();
        } else if (s->filler && ov != old_vars.end()) {
          out.state.bindings.push_back({ov->second, FillerText(*s->filler), idx});
        }
      }
      out.sentences[a] = redo;
      contexts[a] = merged;
      out.state.pending[a] = DescriptorPaths(*redo.frame);
    }
    out.state.pending[idx] = DescriptorPaths(*out.sentences.back().frame);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

std::string ResultToText(const DisambiguationResult &r) {
  std::ostringstream out;
  out << "word " << r.word << " (" << r.lemma << ")\n";
  for (const SenseKey &k : r.candidates) out << "  sense " << k.ToString() << "\n";
  out << "  " << (r.unique ? "unique" : "ambiguous") << "\n";
  for (const auto &[path, value] : r.fills) out << "  fill " << path << " = " << value << "\n";
  if (r.frame) {
    for (const std::string &p : r.frame->SlotPaths()) {
      const Slot *s = r.frame->Find(p);
      if (IsDescriptor(s->filler)) out << "  open " << p << " = " << FillerText(*s->filler) << "\n";
    }
  }
  for (const std::string &q : r.open_questions) out << "  question " << q << "\n";
  return out.str();
}

std::string ResultToTsv(const DisambiguationResult &r) {
  std::vector<std::string> senses, fills;
  for (const SenseKey &k : r.candidates) senses.push_back(k.ToString());
  for (const auto &[path, value] : r.fills) fills.push_back(path + "=" + value);
  return r.word + "\t" + Join(senses, ",") + "\t" + Join(fills, ";") + "\n";
}

}  // namespace lexigraph
