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


#include "lexigraph/ssn.h"

#include <algorithm>
#include <sstream>

#include "lexigraph/text.h"

namespace lexigraph {

std::string_view QuestionKindName(QuestionKind kind) {
  switch (kind) {
    case QuestionKind::kPos: return "POS";
    case QuestionKind::kTransitivity: return "TRANSITIVITY";
    case QuestionKind::kObjIs: return "OBJ-IS";
    case QuestionKind::kObjSat: return "OBJ-SAT";
    case QuestionKind::kAdjComplement: return "ADJ-COMPLEMENT";
    case QuestionKind::kUsage: return "USAGE";
    case QuestionKind::kFrameDiff: return "FRAME-DIFF";
  }
  return "?";
}

std::string Question::ToString() const {
  std::string out(QuestionKindName(kind));
  switch (kind) {
    case QuestionKind::kUsage: out += "(used with " + Join(preps, " or ") + ")"; break;
    case QuestionKind::kObjIs:
    case QuestionKind::kObjSat:
    case QuestionKind::kFrameDiff: out += "(" + path + ")"; break;
    default: break;
  }
  return out + " {" + Join(alternatives, " | ") + "}";
}

int Ssn::QuestionCount() const {
  return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(), [](const SsnNode &n) { return !n.terminal(); }));
}

std::vector<int> Ssn::Terminals() const {
  std::vector<int> out;
  for (size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].terminal()) out.push_back(static_cast<int>(i));
  }
  return out;
}

namespace {

using Group = std::vector<SenseKey>;

Group Minus(const Group &group, const std::set<SenseKey> &drop) {
  Group out;
  for (const SenseKey &k : group) {
    if (!drop.count(k)) out.push_back(k);
  }
  return out;
}

// A necessary condition some senses place on their context.
struct Requirement {
  QuestionKind kind;
  std::string path;
  std::vector<std::string> preps;
  std::set<SenseKey> requiring;
};

// "used with P" notes that are not hedged with "usu." or "often".
std::vector<std::string> HardUsagePreps(const Sense &line) {
  if (!line.usage_note) return {};
  std::string note = ToLower(*line.usage_note);
  size_t at = note.find("used with");
  if (at == std::string::npos) return {};
  std::string before = note.substr(0, at);
  if (before.find("usu.") != std::string::npos || before.find("often") != std::string::npos) return {};
  return UsagePrepositions(line.usage_note);
}

}  // namespace

class SsnBuilder {
 public:
  SsnBuilder(const Lexicon &lexicon, const FrameStore &frames, const std::string &headword)
      : lexicon_(lexicon) {
    ssn_.headword_ = headword;
    for (const SenseKey &k : lexicon.SenseKeys()) {
      if (k.headword != headword) continue;
      const Frame *f = frames.Get(k);
      if (!f) throw LexError("no frame for " + k.ToString());
      ssn_.senses_.insert(k);
      ssn_.frames_.emplace(k, *f);
      tuples_.emplace(k, Canonicalize(*f));
    }
    if (ssn_.senses_.empty()) throw LexError("no senses for headword '" + headword + "'");
    for (auto a = tuples_.begin(); a != tuples_.end(); ++a) {
      for (auto b = std::next(a); b != tuples_.end(); ++b) {
        if (a->second == b->second) {
          throw LexError("senses " + a->first.ToString() + " and " + b->first.ToString() +
                         " have identical frames");
        }
      }
    }
  }

  Ssn Build() {
    Group all(ssn_.senses_.begin(), ssn_.senses_.end());
    Pos(all);
    return std::move(ssn_);
  }

 private:
  int NewNode() {
    ssn_.nodes_.emplace_back();
    return static_cast<int>(ssn_.nodes_.size()) - 1;
  }

  // One terminal per sense; branches that reach the same sense share it.
  int Leaf(const SenseKey &k) {
    if (auto it = leaves_.find(k); it != leaves_.end()) return it->second;
    int id = NewNode();
    ssn_.nodes_[id].sense = k;
    leaves_[k] = id;
    return id;
  }

  // Question node whose branches are built by `child` for each answer group.
  template <typename ChildFn>
  int Ask(Question q, const std::vector<std::pair<std::string, Group>> &branches, std::optional<SenseKey> carried,
          ChildFn child) {
    int id = NewNode();
    for (const auto &[answer, group] : branches) q.alternatives.push_back(answer);
    ssn_.nodes_[id].question = q;
    ssn_.nodes_[id].sense = carried;
    for (const auto &[answer, group] : branches) {
      int c = child(group);
      ssn_.nodes_[id].branches.push_back({answer, c});
    }
    return id;
  }

  int Pos(const Group &group) {
    if (group.size() == 1) return Leaf(group.front());
    std::map<std::string, Group> by;
    for (const SenseKey &k : group) by[IsVerb(k.pos) ? "verb" : std::string(PosName(k.pos))].push_back(k);
    if (by.size() < 2) return Transitivity(group);
    std::vector<std::pair<std::string, Group>> branches(by.begin(), by.end());
    Question q;
    q.kind = QuestionKind::kPos;
    return Ask(q, branches, std::nullopt, [&](const Group &g) { return Transitivity(g); });
  }

  int Transitivity(const Group &group) {
    if (group.size() == 1) return Leaf(group.front());
    Group intr, trans;
    for (const SenseKey &k : group) {
      if (!IsVerb(k.pos)) return Conditions(group);
      if (k.pos != PartOfSpeech::kVt) intr.push_back(k);
      if (k.pos != PartOfSpeech::kVi) trans.push_back(k);
    }
    if (intr.empty() || trans.empty() || intr == trans) return Conditions(group);
    Question q;
    q.kind = QuestionKind::kTransitivity;
    return Ask(q, {{"intransitive", intr}, {"transitive", trans}}, std::nullopt,
               [&](const Group &g) { return Conditions(g); });
  }

  int Conditions(const Group &group) {
    std::vector<Requirement> reqs;
    auto add = [&](QuestionKind kind, const std::string &path, const std::vector<std::string> &preps,
                   const SenseKey &k) {
      for (Requirement &r : reqs) {
        if (r.kind == kind && r.path == path && r.preps == preps) {
          r.requiring.insert(k);
          return;
        }
      }
      reqs.push_back({kind, path, preps, {k}});
    };
    for (const SenseKey &k : group) {
      for (const Sense *line : lexicon_.LinesOf(k)) {
        if (line->synonym_only()) continue;
        ParsedDefinition d = ParseSenseLine(*line);
        if (d.specified_object) add(QuestionKind::kObjIs, HeadWord(*d.specified_object), {}, k);
        if (d.TakesAdjectiveComplement()) add(QuestionKind::kAdjComplement, "", {}, k);
      }
      for (const Sense *line : lexicon_.LinesOf(k)) {
        std::vector<std::string> preps = HardUsagePreps(*line);
        if (!preps.empty()) add(QuestionKind::kUsage, "", preps, k);
      }
    }
    std::stable_sort(reqs.begin(), reqs.end(), [](const Requirement &a, const Requirement &b) {
      auto rank = [](QuestionKind q) { return q == QuestionKind::kObjIs ? 0 : q == QuestionKind::kAdjComplement ? 1 : 2; };
      return rank(a.kind) < rank(b.kind);
    });
    return Condition(group, reqs, 0);
  }

  int Condition(const Group &group, const std::vector<Requirement> &reqs, size_t i) {
    if (group.size() == 1) return Leaf(group.front());
    if (i == reqs.size()) return FrameDiff(group);
    Group absent = Minus(group, reqs[i].requiring);
    if (absent.size() == group.size() || absent.empty()) return Condition(group, reqs, i + 1);
    Question q{reqs[i].kind, reqs[i].path, "", reqs[i].preps, {}};
    return Ask(q, {{std::string(kPresent), group}, {std::string(kAbsent), absent}}, std::nullopt,
               [&](const Group &g) { return Condition(g, reqs, i + 1); });
  }

  // The sense every other member of the group is a subsense of.
  std::optional<SenseKey> LabelParent(const Group &group) {
    for (const SenseKey &p : group) {
      bool all = std::all_of(group.begin(), group.end(), [&](const SenseKey &k) {
        return k == p || (k.headword == p.headword && k.pos == p.pos && k.homograph == p.homograph &&
                          k.label.IsDescendantOf(p.label));
      });
      if (all) return p;
    }
    return std::nullopt;
  }

  int FrameDiff(const Group &group) {
    if (group.size() == 1) return Leaf(group.front());
    if (auto it = diffs_.find(group); it != diffs_.end()) return it->second;
    int id = SplitFrames(group);
    diffs_[group] = id;
    return id;
  }

  int SplitFrames(const Group &group) {
    std::optional<SenseKey> carried;
    Group rest = group;
    if (group.size() > 2) {
      carried = LabelParent(group);
      if (carried) rest = Minus(group, {*carried});
    }
    std::set<std::string> keys;
    std::map<std::string, std::string> paths;
    for (const SenseKey &k : rest) {
      for (const TupleEntry &e : tuples_.at(k)) {
        keys.insert(e.sort_key);
        paths[e.sort_key] = e.path;
      }
    }
    for (const std::string &key : keys) {
      std::map<std::string, Group> by;
      for (const SenseKey &k : rest) by[TupleValue(tuples_.at(k), key)].push_back(k);
      if (by.size() < 2) continue;
      std::vector<std::pair<std::string, Group>> branches(by.begin(), by.end());
      Question q{QuestionKind::kFrameDiff, paths[key], key, {}, {}};
      return Ask(q, branches, carried, [&](const Group &g) { return FrameDiff(g); });
    }
    throw LexError("cannot separate senses of '" + ssn_.headword_ + "'");
  }

  const Lexicon &lexicon_;
  Ssn ssn_;
  std::map<SenseKey, FrameTuple> tuples_;
  std::map<SenseKey, int> leaves_;
  std::map<Group, int> diffs_;
};

Ssn CompileSsn(const Lexicon &lexicon, const FrameStore &frames, const std::string &headword) {
  return SsnBuilder(lexicon, frames, headword).Build();
}

std::map<std::string, Ssn> CompileAll(const Lexicon &lexicon, const FrameStore &frames) {
  std::map<std::string, Ssn> out;
  for (const SenseKey &k : lexicon.SenseKeys()) {
    if (!out.count(k.headword)) out.emplace(k.headword, CompileSsn(lexicon, frames, k.headword));
  }
  return out;
}

TraversalResult Traverse(const Ssn &ssn, const AnswerOracle &oracle) {
  TraversalResult r;
  std::set<int> terminals;
  bool partial = false;
  std::set<int> seen;
  std::function<void(int)> visit = [&](int id) {
    if (!seen.insert(id).second) return;
    const SsnNode &n = ssn.nodes()[id];
    if (n.terminal()) {
      r.senses.insert(*n.sense);
      terminals.insert(id);
      return;
    }
    r.visited.push_back(id);
    std::optional<std::string> answer = oracle(*n.question);
    if (answer && n.sense && *answer == kGeneral) {
      r.senses.insert(*n.sense);
      partial = true;
      return;
    }
    if (answer) {
      for (const SsnBranch &b : n.branches) {
        if (b.answer == *answer) {
          visit(b.child);
          return;
        }
      }
      if (n.sense) {
        r.senses.insert(*n.sense);
        partial = true;
        return;
      }
    }
    r.open_questions.push_back(n.question->ToString());
    if (n.sense) r.senses.insert(*n.sense);
    for (const SsnBranch &b : n.branches) visit(b.child);
  };
  visit(0);
  r.terminal = terminals.size() == 1 && !partial && r.open_questions.empty();
  return r;
}

std::map<int, std::vector<std::pair<std::string, std::string>>> PathsToNodes(const Ssn &ssn) {
  std::map<int, std::vector<std::pair<std::string, std::string>>> out;
  std::function<void(int, std::vector<std::pair<std::string, std::string>>)> walk =
      [&](int id, std::vector<std::pair<std::string, std::string>> path) {
        if (out.count(id)) return;
        out[id] = path;
        const SsnNode &n = ssn.nodes()[id];
        for (const SsnBranch &b : n.branches) {
          auto next = path;
          next.emplace_back(n.question->ToString(), b.answer);
          walk(b.child, next);
        }
      };
  walk(0, {});
  return out;
}

namespace {

std::string DotEscape(const std::string &s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string SsnToDot(const Ssn &ssn) {
  std::ostringstream out;
  out << "digraph \"ssn " << DotEscape(ssn.headword()) << "\" {\n";
  for (size_t i = 0; i < ssn.nodes().size(); ++i) {
    const SsnNode &n = ssn.nodes()[i];
    if (n.terminal()) {
      out << "  n" << i << " [shape=box, label=\"" << DotEscape(n.sense->ToString()) << "\"];\n";
      continue;
    }
    std::string label = n.question->ToString();
    if (n.sense) label += "\\ncarries " + n.sense->ToString();
    out << "  n" << i << " [shape=diamond, label=\"" << DotEscape(label) << "\"];\n";
  }
  for (size_t i = 0; i < ssn.nodes().size(); ++i) {
    for (const SsnBranch &b : ssn.nodes()[i].branches) {
      out << "  n" << i << " -> n" << b.child << " [label=\"" << DotEscape(b.answer) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string SsnToText(const Ssn &ssn) {
  std::ostringstream out;
  out << "ssn " << ssn.headword() << "\n";
  std::function<void(int, int)> walk = [&](int id, int depth) {
    const SsnNode &n = ssn.nodes()[id];
    std::string indent(2 * depth, ' ');
    if (n.terminal()) {
      out << indent << "* " << n.sense->ToString() << "\n";
      return;
    }
    out << indent << "? " << n.question->ToString();
    if (n.sense) out << " [carries " << n.sense->ToString() << "]";
    out << "\n";
    for (const SsnBranch &b : n.branches) {
      out << indent << "  = " << b.answer << "\n";
      walk(b.child, depth + 2);
    }
  };
  walk(0, 0);
  return out.str();
}

}  // namespace lexigraph
