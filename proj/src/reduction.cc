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


#include "lexigraph/reduction.h"

#include <algorithm>
#include <sstream>

#include "lexigraph/text.h"

namespace lexigraph {

std::string_view ReductionRuleName(ReductionRule rule) {
  switch (rule) {
    case ReductionRule::kMultiConcept: return "MULTI-CONCEPT";
    case ReductionRule::kSlotFill: return "SLOT-FILL";
    case ReductionRule::kWordGovernment: return "WORD-GOVERNMENT";
    case ReductionRule::kOptionalComponent: return "OPTIONAL-COMPONENT";
  }
  return "?";
}

const std::vector<ReductionRule> &RuleOrder() {
  static const std::vector<ReductionRule> kOrder = {ReductionRule::kMultiConcept, ReductionRule::kSlotFill,
                                                    ReductionRule::kWordGovernment,
                                                    ReductionRule::kOptionalComponent};
  return kOrder;
}

const std::set<std::string> &DefaultOperators() {
  static const std::set<std::string> kOps = {"cause", "cease", "begin", "attempt", "refuse", "serve", "NOT"};
  return kOps;
}

namespace {

std::vector<ParsedDefinition> ParsedLines(const Lexicon &lexicon, const SenseKey &key) {
  std::vector<ParsedDefinition> out;
  for (const Sense *line : lexicon.LinesOf(key)) out.push_back(ParseSenseLine(*line));
  return out;
}

std::string DeltaText(const UseDelta &d) {
  return std::string(DeltaKindName(d.kind)) + " " + d.path + "=" + d.value;
}

// A noun sense of the word whose leading noun phrase names an instrument.
bool DefinedAsInstrument(const Lexicon &lexicon, const std::string &word) {
  static const std::set<std::string> kCues = {"instrument", "tool", "implement", "utensil"};
  std::vector<std::string> forms = {word};
  if (EndsWith(word, "s")) forms.push_back(word.substr(0, word.size() - 1));
  for (const std::string &form : forms) {
    for (const Sense &s : SensesOf(lexicon, form, PartOfSpeech::kNoun)) {
      for (const std::string &tok : Tokenize(ToLower(s.raw_definition))) {
        if (IsPreposition(tok)) break;
        if (kCues.count(tok)) return true;
      }
    }
  }
  return false;
}

}  // namespace

std::optional<NonprimitiveEvidence> RuleMultiConcept(const ReductionContext &ctx, const SenseKey &key) {
  for (const ParsedDefinition &d : ParsedLines(ctx.lexicon, key)) {
    if (d.genus.empty()) continue;
    if (d.negated && ctx.operators.count("NOT")) {
      return NonprimitiveEvidence{key, ReductionRule::kMultiConcept, "NOT over " + d.genus.front()};
    }
    if (ctx.operators.count(d.genus.front())) {
      return NonprimitiveEvidence{key, ReductionRule::kMultiConcept, "operator " + d.genus.front()};
    }
  }
  return std::nullopt;
}

std::optional<NonprimitiveEvidence> RuleSlotFill(const ReductionContext &ctx, const SenseKey &key) {
  const UseResult *use = ctx.frames.UseOf(key);
  if (!use) return std::nullopt;
  std::vector<std::string> parts;
  for (const UseDelta &d : use->deltas) {
    if (d.kind == DeltaKind::kFill || d.kind == DeltaKind::kRestrict) parts.push_back(DeltaText(d));
  }
  if (!parts.empty()) return NonprimitiveEvidence{key, ReductionRule::kSlotFill, Join(parts, "; ")};
  std::vector<const Sense *> lines = ctx.lexicon.LinesOf(key);
  bool synonym = !lines.empty() && std::all_of(lines.begin(), lines.end(),
                                               [](const Sense *s) { return s->synonym_only(); });
  if (synonym) {
    return NonprimitiveEvidence{key, ReductionRule::kSlotFill,
                                "pure synonym of " + ctx.frames.GenusOf(key)->ToString()};
  }
  return std::nullopt;
}

std::optional<NonprimitiveEvidence> RuleWordGovernment(const ReductionContext &ctx, const SenseKey &key) {
  auto genus = ctx.frames.GenusOf(key);
  if (!genus) return std::nullopt;
  const Frame *frame = ctx.frames.Get(*genus);
  if (!frame) return std::nullopt;
  auto rule = ctx.rules.SlotActionFor("with", frame->predicate);
  bool governs = (rule && rule->slot == "INSTRUMENT") || frame->PathOf("INSTRUMENT").has_value();
  if (!governs) return std::nullopt;
  for (const ParsedDefinition &d : ParsedLines(ctx.lexicon, key)) {
    for (const Phrase &p : d.differentiae) {
      if (p.kind != PhraseKind::kPrepPhrase || p.prep != "with") continue;
      std::string head = HeadWord(p.text);
      if (!head.empty() && DefinedAsInstrument(ctx.lexicon, head)) {
        return NonprimitiveEvidence{key, ReductionRule::kWordGovernment, "with " + head + " (instrument)"};
      }
    }
  }
  return std::nullopt;
}

std::optional<NonprimitiveEvidence> RuleOptionalComponent(const ReductionContext &ctx, const SenseKey &key) {
  std::vector<std::string> manner;
  for (const Sense *line : ctx.lexicon.LinesOf(key)) {
    if (line->synonym_only()) return std::nullopt;
    ParsedDefinition d = ParseSenseLine(*line);
    if (d.negated || d.genus_complement || d.specified_object) return std::nullopt;
    for (const Phrase &p : d.differentiae) {
      if (p.kind == PhraseKind::kAdverb) {
        manner.push_back(p.text);
      } else if (!(p.kind == PhraseKind::kClause && StartsWith(p.text, "as "))) {
        // Only parenthetical "as ..." glosses may accompany the adverbs.
        return std::nullopt;
      }
    }
  }
  if (manner.empty()) return std::nullopt;
  return NonprimitiveEvidence{key, ReductionRule::kOptionalComponent, "MANNER " + Join(manner, "; ")};
}

std::optional<NonprimitiveEvidence> ApplyRule(const ReductionContext &ctx, ReductionRule rule,
                                              const SenseKey &key) {
  switch (rule) {
    case ReductionRule::kMultiConcept: return RuleMultiConcept(ctx, key);
    case ReductionRule::kSlotFill: return RuleSlotFill(ctx, key);
    case ReductionRule::kWordGovernment: return RuleWordGovernment(ctx, key);
    case ReductionRule::kOptionalComponent: return RuleOptionalComponent(ctx, key);
  }
  return std::nullopt;
}

std::optional<NonprimitiveEvidence> FirstEvidence(const ReductionContext &ctx, const SenseKey &key) {
  for (ReductionRule rule : RuleOrder()) {
    if (auto e = ApplyRule(ctx, rule, key)) return e;
  }
  return std::nullopt;
}

std::map<ReductionRule, int> ReductionReport::Tallies() const {
  std::map<ReductionRule, int> out;
  for (ReductionRule r : RuleOrder()) out[r] = 0;
  for (const NonprimitiveEvidence &e : set_aside) ++out[e.rule];
  return out;
}

ReductionReport ReduceFixpoint(const ReductionContext &ctx, std::optional<std::vector<SenseKey>> candidates) {
  std::vector<SenseKey> remaining;
  if (candidates) {
    remaining = *candidates;
  } else {
    for (const SenseKey &k : ctx.lexicon.SenseKeys()) {
      if (IsVerb(k.pos)) remaining.push_back(k);
    }
  }
  std::sort(remaining.begin(), remaining.end());
  remaining.erase(std::unique(remaining.begin(), remaining.end()), remaining.end());

  ReductionReport report;
  report.initial = static_cast<int>(remaining.size());
  while (true) {
    ++report.iterations;
    std::vector<SenseKey> kept;
    size_t before = report.set_aside.size();
    for (const SenseKey &k : remaining) {
      if (auto e = FirstEvidence(ctx, k)) {
        report.set_aside.push_back(*e);
      } else {
        kept.push_back(k);
      }
    }
    remaining = std::move(kept);
    if (report.set_aside.size() == before) break;
  }
  report.remaining = std::move(remaining);
  if (!report.set_aside.empty()) {
    report.notes.push_back("cannot-derive-primitive direction unverified for every set-aside sense");
  }
  for (const NonprimitiveEvidence &e : report.set_aside) {
    if (e.rule == ReductionRule::kMultiConcept) {
      report.notes.push_back("operator contribution owed for " + e.sense.ToString() + " (" + e.detail + ")");
    }
  }
  return report;
}

std::string ReportToTsv(const ReductionReport &report) {
  std::ostringstream out;
  out << "sense\tstatus\trule\tdetail\n";
  for (const NonprimitiveEvidence &e : report.set_aside) {
    out << e.sense.ToString() << "\tset-aside\t" << ReductionRuleName(e.rule) << "\t" << e.detail << "\n";
  }
  for (const SenseKey &k : report.remaining) out << k.ToString() << "\tcandidate\t-\t-\n";
  return out.str();
}

std::string ReportSummary(const ReductionReport &report) {
  std::ostringstream out;
  out << "initial " << report.initial << "\n";
  out << "set aside " << report.set_aside.size() << "\n";
  for (const auto &[rule, n] : report.Tallies()) out << "  " << ReductionRuleName(rule) << " " << n << "\n";
  out << "remaining " << report.remaining.size() << "\n";
  out << "iterations " << report.iterations << "\n";
  for (const std::string &n : report.notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace lexigraph
