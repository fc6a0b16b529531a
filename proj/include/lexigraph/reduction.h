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


// Rules that show a verb sense cannot be primitive, and the loop that applies
// them until nothing more is set aside.

#ifndef LEXIGRAPH_REDUCTION_H_
#define LEXIGRAPH_REDUCTION_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lexigraph/defgraph.h"
#include "lexigraph/frames.h"
#include "lexigraph/lexicon.h"
#include "lexigraph/prep_rules.h"

namespace lexigraph {

// Declared in application order.
enum class ReductionRule { kMultiConcept, kSlotFill, kWordGovernment, kOptionalComponent };

std::string_view ReductionRuleName(ReductionRule rule);
const std::vector<ReductionRule> &RuleOrder();

struct NonprimitiveEvidence {
  SenseKey sense;
  ReductionRule rule;
  std::string detail;

  bool operator==(const NonprimitiveEvidence &) const = default;
};

// Genus verbs that combine with another verb concept. "NOT" stands for a
// negated genus.
const std::set<std::string> &DefaultOperators();

// Everything the rules read.
struct ReductionContext {
  const Lexicon &lexicon;
  const FrameStore &frames;
  const PrepRules &rules;
  std::set<std::string> operators = DefaultOperators();
};

// Negated genus, or a genus from the operator list.
std::optional<NonprimitiveEvidence> RuleMultiConcept(const ReductionContext &ctx, const SenseKey &key);

// The use of the genus fills or restricts a slot of its frame, or the sense
// is a bare synonym of its genus.
std::optional<NonprimitiveEvidence> RuleSlotFill(const ReductionContext &ctx, const SenseKey &key);

// A "with" phrase whose object is defined as an instrument, over a genus
// whose family governs "with" as INSTRUMENT.
std::optional<NonprimitiveEvidence> RuleWordGovernment(const ReductionContext &ctx, const SenseKey &key);

// Genus plus manner adverbs only.
std::optional<NonprimitiveEvidence> RuleOptionalComponent(const ReductionContext &ctx, const SenseKey &key);

std::optional<NonprimitiveEvidence> ApplyRule(const ReductionContext &ctx, ReductionRule rule,
                                              const SenseKey &key);

// First rule in RuleOrder() that fires.
std::optional<NonprimitiveEvidence> FirstEvidence(const ReductionContext &ctx, const SenseKey &key);

struct ReductionReport {
  int initial = 0;
  std::vector<NonprimitiveEvidence> set_aside;
  std::vector<SenseKey> remaining;
  int iterations = 0;
  std::vector<std::string> notes;

  std::map<ReductionRule, int> Tallies() const;
};

// Applies the rules to the candidates (all verb senses when omitted) until an
// iteration sets nothing aside.
ReductionReport ReduceFixpoint(const ReductionContext &ctx,
                               std::optional<std::vector<SenseKey>> candidates = std::nullopt);

// Columns: sense, status, rule, detail.
std::string ReportToTsv(const ReductionReport &report);
std::string ReportSummary(const ReductionReport &report);

}  // namespace lexigraph

#endif  // LEXIGRAPH_REDUCTION_H_
