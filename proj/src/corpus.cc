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


#include "lexigraph/corpus.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "lexigraph/defgraph.h"
#include "lexigraph/frames.h"
#include "lexigraph/parser.h"
#include "lexigraph/reduction.h"
#include "lexigraph/ssn.h"
#include "lexigraph/text.h"

namespace lexigraph {

Manifest Manifest::Parse(std::string_view text) {
  Manifest m;
  std::vector<std::string> lines = Split(text, '\n');
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string line = lines[i];
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || Trim(line)[0] == '#') continue;
    std::vector<std::string> f = Split(line, '\t');
    int n = static_cast<int>(i) + 1;
    if (f.size() != 4) throw LexError("manifest row needs 4 columns", n);
    for (std::string &s : f) s = Trim(s);
    if (f[3].empty()) throw LexError("manifest row lacks a derivation", n);
    m.rows.push_back({f[0], f[1], f[2], f[3], n});
  }
  return m;
}

Manifest Manifest::Load(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LexError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Parse(buf.str());
  } catch (const LexError &e) {
    throw LexError(path + ": " + e.what());
  }
}

bool FixtureReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const FixtureCheck &c) { return c.ok; });
}

std::vector<FixtureCheck> FixtureReport::Mismatches() const {
  std::vector<FixtureCheck> out;
  std::copy_if(checks.begin(), checks.end(), std::back_inserter(out), [](const FixtureCheck &c) { return !c.ok; });
  return out;
}

std::string FixtureReport::ToText() const {
  std::ostringstream out;
  for (const FixtureCheck &c : checks) {
    out << (c.ok ? "ok" : "MISMATCH") << " " << c.row.kind << " " << c.row.key << " expected=" << c.row.value
        << " actual=" << c.actual << "\n";
  }
  return out.str();
}

Lexicon LoadBundledCorpus(const std::string &data_dir) {
  Lexicon l = LoadLexf(data_dir + "/change_corpus.lexf");
  LoadLexfInto(data_dir + "/resolutions.lexf", &l);
  return l;
}

namespace {

bool IsChangeVi(const SenseKey &k) { return k.headword == "change" && k.pos == PartOfSpeech::kVi; }

bool InFamily(const SenseKey &k, const SenseKey &root) {
  return k.headword == root.headword && k.pos == root.pos && k.homograph == root.homograph &&
         (k.label == root.label || k.label.IsDescendantOf(root.label));
}

const Slot *RespectSlot(const Frame &f) {
  auto path = f.PathOf("RESPECT");
  return path ? f.Find(*path) : nullptr;
}

// Everything the checks look at, computed once.
class Facts {
 public:
  Facts(const Lexicon &lexicon, const PrepRules &rules)
      : lexicon_(lexicon),
        graph_(BuildResolvedGraph(lexicon)),
        frames_(lexicon, graph_, rules),
        rules_(rules),
        ctx_{lexicon, frames_, rules},
        report_(ReduceFixpoint(ctx_)) {}

  std::string Count(const std::string &key) const {
    if (key == "change_vi_labels") {
      std::set<std::string> labels;
      for (const SenseKey &k : lexicon_.SenseKeys()) {
        if (IsChangeVi(k)) labels.insert(k.label.text());
      }
      return std::to_string(labels.size());
    }
    if (key == "using_senses" || key == "using_lines") {
      size_t senses = 0, lines = 0;
      for (const SenseKey &k : lexicon_.SenseKeys()) {
        if (k.headword == "change") continue;
        ++senses;
        lines += lexicon_.LinesOf(k).size();
      }
      return std::to_string(key == "using_senses" ? senses : lines);
    }
    if (key == "respect_rows") {
      // Restrictions a subsense adds to the RESPECT slot of its parent.
      size_t n = 0;
      for (const auto &[k, f] : frames_.frames()) {
        if (!IsChangeVi(k) || !k.label.Parent()) continue;
        const Slot *mine = RespectSlot(f);
        if (!mine) continue;
        SenseKey parent = k;
        parent.label = *k.label.Parent();
        const Frame *pf = frames_.Get(parent);
        const Slot *theirs = pf ? RespectSlot(*pf) : nullptr;
        for (const std::string &r : mine->restrictions) {
          if (!theirs || std::find(theirs->restrictions.begin(), theirs->restrictions.end(), r) ==
                             theirs->restrictions.end()) {
            ++n;
          }
        }
      }
      return std::to_string(n);
    }
    if (key == "respect_uses") {
      size_t n = 0;
      for (const SenseKey &k : lexicon_.SenseKeys()) {
        const UseResult *use = frames_.UseOf(k);
        if (!use) continue;
        if (std::any_of(use->deltas.begin(), use->deltas.end(), [](const UseDelta &d) {
              return d.kind == DeltaKind::kRestrict && EndsWith(d.path, "RESPECT");
            })) {
          ++n;
        }
      }
      return std::to_string(n);
    }
    if (key == "set_aside") return std::to_string(report_.set_aside.size());
    if (key == "remaining_outside") {
      return std::to_string(std::count_if(report_.remaining.begin(), report_.remaining.end(),
                                          [](const SenseKey &k) { return !IsChangeVi(k); }));
    }
    return "unknown count";
  }

  std::string Tally(const std::string &rule) const {
    for (const auto &[r, n] : report_.Tallies()) {
      if (ReductionRuleName(r) == rule) return std::to_string(n);
    }
    for (ReductionRule r : RuleOrder()) {
      if (ReductionRuleName(r) == rule) return "0";
    }
    return "unknown rule";
  }

  bool HasRespect(const SenseKey &k, const std::string &text) const {
    const Frame *f = frames_.Get(k);
    const Slot *s = f ? RespectSlot(*f) : nullptr;
    std::string want = NormalizeSpace(text);
    return s && std::any_of(s->restrictions.begin(), s->restrictions.end(),
                            [&](const std::string &r) { return NormalizeSpace(r) == want; });
  }

  bool HasUse(const SenseKey &k, const std::string &text) const {
    const UseResult *use = frames_.UseOf(k);
    std::string want = NormalizeSpace(text);
    return use && std::any_of(use->deltas.begin(), use->deltas.end(), [&](const UseDelta &d) {
             return d.kind == DeltaKind::kRestrict && EndsWith(d.path, "RESPECT") && NormalizeSpace(d.value) == want;
           });
  }

  // Expected "ambiguous", "family <key>", or an exact target key.
  std::pair<bool, std::string> Resolution(const SenseKey &k, const std::string &expected) const {
    if (!resolved_) {
      // Networks only compile for a corpus whose frames are distinct.
      ssns_ = CompileAll(lexicon_, frames_);
      resolved_.emplace();
      ParserResources res{lexicon_, frames_, *ssns_, rules_};
      for (auto &d : AutoResolve(res)) resolved_->emplace(d.sense, std::move(d));
    }
    auto it = resolved_->find(k);
    if (it == resolved_->end()) return {false, "no proposal"};
    const DefinitionDisambiguation &d = it->second;
    std::vector<std::string> keys;
    for (const SenseKey &c : d.candidates) keys.push_back(c.ToString());
    std::string actual = d.record ? d.record->target.ToString() : "{" + Join(keys, ",") + "}";
    if (expected == "ambiguous") return {!d.record && d.candidates.size() > 1, actual};
    if (StartsWith(expected, "family ")) {
      SenseKey root = SenseKey::Parse(Trim(expected.substr(7)));
      bool all = !d.candidates.empty() && std::all_of(d.candidates.begin(), d.candidates.end(),
                                                      [&](const SenseKey &c) { return InFamily(c, root); });
      return {all, actual};
    }
    return {d.record && d.record->target == SenseKey::Parse(expected), actual};
  }

 private:
  const Lexicon &lexicon_;
  DefinitionGraph graph_;
  FrameStore frames_;
  const PrepRules &rules_;
  ReductionContext ctx_;
  ReductionReport report_;
  mutable std::optional<std::map<std::string, Ssn>> ssns_;
  mutable std::optional<std::map<SenseKey, DefinitionDisambiguation>> resolved_;
};

}  // namespace

FixtureReport VerifyFixture(const Lexicon &lexicon, const PrepRules &rules, const Manifest &manifest) {
  FixtureReport report;
  Facts facts(lexicon, rules);
  for (const ManifestRow &row : manifest.rows) {
    FixtureCheck c{row, "", false};
    try {
      if (row.kind == "count") {
        c.actual = facts.Count(row.key);
        c.ok = c.actual == row.value;
      } else if (row.kind == "tally") {
        c.actual = facts.Tally(row.key);
        c.ok = c.actual == row.value;
      } else if (row.kind == "respect") {
        c.ok = facts.HasRespect(SenseKey::Parse(row.key), row.value);
        c.actual = c.ok ? row.value : "absent";
      } else if (row.kind == "use") {
        c.ok = facts.HasUse(SenseKey::Parse(row.key), row.value);
        c.actual = c.ok ? row.value : "absent";
      } else if (row.kind == "resolution") {
        auto [ok, actual] = facts.Resolution(SenseKey::Parse(row.key), row.value);
        c.ok = ok;
        c.actual = actual;
      } else {
        c.actual = "unknown kind";
      }
    } catch (const LexError &e) {
      c.actual = std::string("error: ") + e.what();
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace lexigraph
