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

#include "lexigraph/frames.h"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>

#include "lexigraph/text.h"

namespace lexigraph {

std::string_view CaseLabelName(CaseLabel c) { return c == CaseLabel::kPat ? "PAT" : "AGT"; }

std::optional<CaseLabel> ParseCaseLabel(std::string_view name) {
  if (name == "PAT") return CaseLabel::kPat;
  if (name == "AGT") return CaseLabel::kAgt;
  return std::nullopt;
}

const std::vector<std::string> &StandardSlotNames() {
  static const std::vector<std::string> kNames = {
      "SUBJ",    "OBJ",    "FROM-STATE", "THROUGH-STATE", "TO-STATE",        "TIME1",           "TIMEX",
      "TIME2",   "RESPECT", "RESULT",    "INSTRUMENT",    "MANNER",          "ESSENTIAL-ATTRS", "ACCIDENTAL-ATTRS"};
  return kNames;
}

namespace {

int SlotRank(const std::string &name) {
  const auto &names = StandardSlotNames();
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? 100 : static_cast<int>(it - names.begin());
}

void SortSlots(std::vector<Slot> *slots) {
  std::stable_sort(slots->begin(), slots->end(),
                   [](const Slot &a, const Slot &b) { return SlotNameLess(a.name, b.name); });
}

std::string JoinCases(const std::set<CaseLabel> &cases) {
  std::vector<std::string> names;
  for (CaseLabel c : cases) names.emplace_back(CaseLabelName(c));
  return Join(names, "|");
}

bool ValidSlotName(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
  });
}

// Next unused descriptor number within a frame.
int NextDescriptor(const Frame &frame) {
  int max = 0;
  std::function<void(const std::vector<Slot> &)> walk = [&](const std::vector<Slot> &slots) {
    for (const Slot &s : slots) {
      if (s.filler && std::holds_alternative<Descriptor>(*s.filler)) {
        const std::string &var = std::get<Descriptor>(*s.filler).var;
        if (StartsWith(var, "?d")) max = std::max(max, std::atoi(var.c_str() + 2));
      }
      walk(s.children);
    }
  };
  walk(frame.slots);
  return max + 1;
}

}  // namespace

bool SlotNameLess(const std::string &a, const std::string &b) {
  int ra = SlotRank(a), rb = SlotRank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

std::string FillerText(const Filler &filler) {
  if (const auto *text = std::get_if<std::string>(&filler)) return *text;
  const Descriptor &d = std::get<Descriptor>(filler);
  return d.var + "[" + Join(d.features, "; ") + "]";
}

void Slot::AddRestriction(const std::string &phrase) {
  std::string p = NormalizeSpace(phrase);
  if (p.empty()) return;
  if (std::find(restrictions.begin(), restrictions.end(), p) == restrictions.end()) restrictions.push_back(p);
}

// ---------------------------------------------------------------------------
// Frame navigation

const Slot *Frame::Find(const std::string &path) const {
  return const_cast<Frame *>(this)->Find(path);
}

Slot *Frame::Find(const std::string &path) {
  std::vector<Slot> *level = &slots;
  Slot *found = nullptr;
  for (const std::string &part : Split(path, '.')) {
    found = nullptr;
    for (Slot &s : *level) {
      if (s.name == part) {
        found = &s;
        break;
      }
    }
    if (!found) return nullptr;
    level = &found->children;
  }
  return found;
}

Slot &Frame::Ensure(const std::string &path) {
  std::vector<Slot> *level = &slots;
  Slot *found = nullptr;
  for (const std::string &part : Split(path, '.')) {
    found = nullptr;
    for (Slot &s : *level) {
      if (s.name == part) {
        found = &s;
        break;
      }
    }
    if (!found) {
      Slot s;
      s.name = part;
      level->push_back(s);
      SortSlots(level);
      for (Slot &t : *level) {
        if (t.name == part) found = &t;
      }
    }
    level = &found->children;
  }
  return *found;
}

std::vector<std::string> Frame::SlotPaths() const {
  std::vector<std::string> out;
  std::function<void(const std::vector<Slot> &, const std::string &)> walk = [&](const std::vector<Slot> &level,
                                                                               const std::string &prefix) {
    std::vector<const Slot *> sorted;
    for (const Slot &s : level) sorted.push_back(&s);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Slot *a, const Slot *b) { return SlotNameLess(a->name, b->name); });
    for (const Slot *s : sorted) {
      std::string path = prefix.empty() ? s->name : prefix + "." + s->name;
      out.push_back(path);
      walk(s->children, path);
    }
  };
  walk(slots, "");
  return out;
}

std::optional<std::string> Frame::PathOf(const std::string &name) const {
  for (const std::string &path : SlotPaths()) {
    size_t dot = path.rfind('.');
    std::string last = dot == std::string::npos ? path : path.substr(dot + 1);
    if (last == name) return path;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Seeds

void ApplySeedLines(Frame *frame, const std::vector<std::string> &lines) {
  for (const std::string &raw : lines) {
    std::string line = NormalizeSpace(raw);
    std::vector<std::string> words = Split(line, ' ');
    const std::string &op = words[0];
    if (op == "PRED" && words.size() == 2) {
      frame->predicate = words[1];
      frame->provisional = false;
      continue;
    }
    if (op == "COND" && words.size() == 4 && words[2] == "NE") {
      Condition c{words[1], "NE", words[3]};
      if (std::find(frame->conditions.begin(), frame->conditions.end(), c) == frame->conditions.end()) {
        frame->conditions.push_back(c);
      }
      continue;
    }
    if (op == "SLOT" && words.size() >= 2) {
      const std::string &path = words[1];
      for (const std::string &part : Split(path, '.')) {
        if (!ValidSlotName(part)) throw LexError("bad slot path in frame seed line '" + line + "'");
      }
      Slot &slot = frame->Ensure(path);
      if (words.size() == 2) continue;
      const std::string &attr = words[2];
      std::vector<std::string> rest(words.begin() + 3, words.end());
      std::string value = Join(rest, " ");
      if (value.empty()) throw LexError("missing value in frame seed line '" + line + "'");
      if (attr == "CASE") {
        slot.cases.clear();
        for (const std::string &c : Split(value, '|')) {
          auto label = ParseCaseLabel(Trim(c));
          if (!label) throw LexError("unknown case label in frame seed line '" + line + "'");
          slot.cases.insert(*label);
        }
      } else if (attr == "VALUE") {
        slot.filler = value;
      } else if (attr == "RESTRICT") {
        slot.AddRestriction(value);
      } else if (attr == "BIND" && rest.size() == 1 && ValidSlotName(value)) {
        slot.binding = value;
      } else {
        throw LexError("unknown frame seed line '" + line + "'");
      }
      continue;
    }
    throw LexError("unknown frame seed line '" + line + "'");
  }
}

Frame ParseSeedFrame(const std::vector<std::string> &lines, const SenseKey &key) {
  Frame frame;
  frame.sense = key;
  frame.pos = key.pos;
  ApplySeedLines(&frame, lines);
  if (frame.predicate.empty()) throw LexError("frame seed for " + key.ToString() + " has no PRED line");
  for (const Condition &c : frame.conditions) {
    for (const std::string &name : {c.left, c.right}) {
      if (!frame.PathOf(name)) {
        throw LexError("condition on undeclared slot " + name + " in frame seed for " + key.ToString());
      }
    }
  }
  frame.provenance.push_back("seed " + key.ToString());
  return frame;
}

std::map<SenseKey, Frame> LoadSeedFrames(const Lexicon &lexicon) {
  std::map<SenseKey, Frame> out;
  for (const auto &[key, lines] : lexicon.seed_frames) {
    bool has_pred = std::any_of(lines.begin(), lines.end(),
                                [](const std::string &l) { return StartsWith(NormalizeSpace(l), "PRED "); });
    if (has_pred) out.emplace(key, ParseSeedFrame(lines, key));
  }
  return out;
}

std::vector<std::string> UsagePrepositions(const std::optional<std::string> &usage_note) {
  std::vector<std::string> out;
  if (!usage_note) return out;
  std::vector<std::string> tokens = Tokenize(ToLower(*usage_note));
  for (size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (tokens[i] != "used" || tokens[i + 1] != "with") continue;
    for (size_t j = i + 2; j < tokens.size(); ++j) {
      if (tokens[j] == "or" || tokens[j] == ",") continue;
      if (!IsPreposition(tokens[j])) break;
      if (std::find(out.begin(), out.end(), tokens[j]) == out.end()) out.push_back(tokens[j]);
    }
  }
  return out;
}

std::optional<std::string> UsageSubject(const std::optional<std::string> &usage_note) {
  if (!usage_note) return std::nullopt;
  std::string note = NormalizeSpace(*usage_note);
  size_t pos = note.find("used of ");
  if (pos == std::string::npos) return std::nullopt;
  std::string rest = note.substr(pos + 8);
  for (const char *stop : {" and ", ";", " usu. "}) {
    size_t s = rest.find(stop);
    if (s != std::string::npos) rest = rest.substr(0, s);
  }
  rest = Trim(rest);
  if (rest.empty()) return std::nullopt;
  return rest;
}

namespace {

// Records the prepositions a usage note requires as markers on the slots
// they introduce.
void ApplyUsageMarkers(Frame *frame, const std::vector<const Sense *> &lines, const PrepRules &rules) {
  std::map<std::string, std::vector<std::string>> by_path;
  for (const Sense *line : lines) {
    for (const std::string &prep : UsagePrepositions(line->usage_note)) {
      auto rule = rules.SlotActionFor(prep, frame->predicate);
      if (!rule) continue;
      auto path = frame->PathOf(rule->slot);
      if (!path) continue;
      auto &preps = by_path[*path];
      if (std::find(preps.begin(), preps.end(), prep) == preps.end()) preps.push_back(prep);
    }
  }
  for (auto &[path, preps] : by_path) frame->Find(path)->marker = Join(preps, " or ");
}

}  // namespace

Frame SpecializeSubsense(const Frame &parent, const Sense &subsense, const Lexicon &lexicon,
                         const PrepRules &rules) {
  if (!parent.sense || subsense.headword != parent.sense->headword || subsense.pos != parent.sense->pos ||
      subsense.homograph != parent.sense->homograph || !subsense.label.IsDescendantOf(parent.sense->label)) {
    throw LexError(subsense.key().ToString() + " is not a subsense of " +
                   (parent.sense ? parent.sense->ToString() : std::string("an anonymous frame")));
  }
  Frame frame = parent;
  SenseKey key = subsense.key();
  frame.sense = key;
  auto it = lexicon.seed_frames.find(key);
  if (it != lexicon.seed_frames.end()) ApplySeedLines(&frame, it->second);
  std::vector<const Sense *> lines = lexicon.LinesOf(key);
  if (lines.empty()) lines.push_back(&subsense);
  ApplyUsageMarkers(&frame, lines, rules);
  frame.provenance.push_back("specialize " + parent.sense->ToString() + " -> " + key.ToString());
  return frame;
}

// ---------------------------------------------------------------------------
// Use in a definition

std::string_view DeltaKindName(DeltaKind kind) {
  switch (kind) {
    case DeltaKind::kFill: return "FILL";
    case DeltaKind::kRestrict: return "RESTRICT";
    case DeltaKind::kAddSlot: return "ADD-SLOT";
  }
  return "?";
}

UseResult ApplyUse(const Frame &base, const ParsedDefinition &use, const PrepRules &rules) {
  UseResult r{base, {}, {}};
  Frame &f = r.frame;
  const std::string family = base.predicate;
  for (const Phrase &p : use.differentiae) {
    if (p.kind == PhraseKind::kAdverb) {
      if (auto path = f.PathOf("MANNER")) {
        f.Find(*path)->AddRestriction(p.text);
        r.deltas.push_back({DeltaKind::kRestrict, *path, p.text});
      } else {
        f.Ensure("MANNER").AddRestriction(p.text);
        r.deltas.push_back({DeltaKind::kAddSlot, "MANNER", p.text});
      }
      continue;
    }
    if (p.kind != PhraseKind::kPrepPhrase) {
      r.residue.push_back(p);
      continue;
    }
    auto rule = rules.SlotActionFor(*p.prep, family);
    if (!rule) {
      r.residue.push_back(p);
      continue;
    }
    std::optional<std::string> path = f.PathOf(rule->slot);
    switch (rule->action) {
      case SlotAction::kFill: {
        if (!path) path = rule->slot;
        Slot &slot = f.Ensure(*path);
        if (slot.filler) {
          r.residue.push_back(p);
          break;
        }
        std::string value = p.text;
        if (value.empty()) {
          Descriptor d{"?d" + std::to_string(NextDescriptor(f)), {"object of " + *p.prep + " in context"}};
          value = d.var;
          slot.filler = d;
        } else {
          slot.filler = value;
        }
        if (rule->slot == "AGENT") {
          slot.cases = {CaseLabel::kAgt};
          if (Slot *subj = f.Find("SUBJ")) subj->cases = {CaseLabel::kPat};
        }
        r.deltas.push_back({DeltaKind::kFill, *path, value});
        break;
      }
      case SlotAction::kRestrict:
        if (p.text.empty()) {
          r.residue.push_back(p);
        } else if (path) {
          f.Find(*path)->AddRestriction(p.text);
          r.deltas.push_back({DeltaKind::kRestrict, *path, p.text});
        } else {
          f.Ensure(rule->slot).AddRestriction(p.text);
          r.deltas.push_back({DeltaKind::kAddSlot, rule->slot, p.text});
        }
        break;
      case SlotAction::kAddSlot: {
        std::string target = path ? *path : rule->slot;
        Slot &slot = f.Ensure(target);
        slot.AddRestriction(p.text);
        r.deltas.push_back({DeltaKind::kAddSlot, target, p.text});
        break;
      }
    }
  }
  return r;
}

UseResult ApplySenseUse(const Frame &base, const std::vector<const Sense *> &lines, const PrepRules &rules) {
  UseResult r{base, {}, {}};
  for (const Sense *line : lines) {
    if (auto subject = line->subject()) {
      Slot *subj = r.frame.Find("SUBJ");
      if (subj && !subj->filler) {
        subj->filler = *subject;
        r.deltas.push_back({DeltaKind::kFill, "SUBJ", *subject});
      }
    }
    if (auto subject = UsageSubject(line->usage_note)) {
      Slot &subj = r.frame.Ensure("SUBJ");
      subj.AddRestriction(*subject);
      r.deltas.push_back({DeltaKind::kRestrict, "SUBJ", *subject});
    }
  }
  for (const Sense *line : lines) {
    if (line->synonym_only()) continue;
    UseResult step = ApplyUse(r.frame, ParseSenseLine(*line), rules);
    r.frame = std::move(step.frame);
    r.deltas.insert(r.deltas.end(), step.deltas.begin(), step.deltas.end());
    r.residue.insert(r.residue.end(), step.residue.begin(), step.residue.end());
  }
  return r;
}

// ---------------------------------------------------------------------------
// Canonical tuples

namespace {

std::string Component(const std::string &name) {
  char rank[8];
  std::snprintf(rank, sizeof(rank), "s%03d", SlotRank(name));
  return rank + name;
}

void TupleSlots(const std::vector<Slot> &slots, const std::string &key_prefix, const std::string &path_prefix,
                FrameTuple *out) {
  for (const Slot &s : slots) {
    std::string key = key_prefix + "\x01" + Component(s.name);
    std::string path = path_prefix.empty() ? s.name : path_prefix + "." + s.name;
    out->push_back({key, path, "present"});
    if (!s.cases.empty()) out->push_back({key + "\x01" "a0case", path + ".case", JoinCases(s.cases)});
    if (s.binding) out->push_back({key + "\x01" "a1bind", path + ".bind", *s.binding});
    if (s.filler) {
      std::string value;
      if (const auto *text = std::get_if<std::string>(&*s.filler)) {
        value = NormalizeSpace(ToLower(*text));
      } else {
        value = "descriptor(" + Join(std::get<Descriptor>(*s.filler).features, "; ") + ")";
      }
      out->push_back({key + "\x01" "a2filler", path + ".filler", value});
    }
    if (s.marker) out->push_back({key + "\x01" "a3marker", path + ".marker", *s.marker});
    if (!s.restrictions.empty()) {
      std::set<std::string> set;
      for (const std::string &r : s.restrictions) set.insert(NormalizeSpace(r));
      out->push_back({key + "\x01" "a4restrict", path + ".restrict",
                      Join(std::vector<std::string>(set.begin(), set.end()), " ; ")});
    }
    TupleSlots(s.children, key, path, out);
  }
}

std::string Transitivity(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::kVi: return "intransitive";
    case PartOfSpeech::kVt: return "transitive";
    case PartOfSpeech::kVb: return "both";
    default: return "-";
  }
}

}  // namespace

FrameTuple Canonicalize(const Frame &frame) {
  FrameTuple out;
  out.push_back({"0pos", "pos", std::string(PosName(frame.pos))});
  out.push_back({"1transitivity", "transitivity", Transitivity(frame.pos)});
  out.push_back({"2predicate", "predicate", frame.predicate + (frame.provisional ? " (provisional)" : "")});
  if (!frame.conditions.empty()) {
    std::vector<std::string> conds;
    for (const Condition &c : frame.conditions) conds.push_back(c.ToString());
    std::sort(conds.begin(), conds.end());
    out.push_back({"3conditions", "conditions", Join(conds, "; ")});
  }
  TupleSlots(frame.slots, "4slots", "", &out);
  std::sort(out.begin(), out.end(),
            [](const TupleEntry &a, const TupleEntry &b) { return a.sort_key < b.sort_key; });
  return out;
}

std::string TupleValue(const FrameTuple &tuple, const std::string &sort_key) {
  for (const TupleEntry &e : tuple) {
    if (e.sort_key == sort_key) return e.value;
  }
  return "none";
}

std::optional<FrameDiff> DiffFrames(const Frame &a, const Frame &b) {
  FrameTuple ta = Canonicalize(a), tb = Canonicalize(b);
  size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j >= tb.size() || (i < ta.size() && ta[i].sort_key < tb[j].sort_key)) {
      return FrameDiff{ta[i].path, ta[i].sort_key, ta[i].value, "none"};
    }
    if (i >= ta.size() || tb[j].sort_key < ta[i].sort_key) {
      return FrameDiff{tb[j].path, tb[j].sort_key, "none", tb[j].value};
    }
    if (ta[i].value != tb[j].value) return FrameDiff{ta[i].path, ta[i].sort_key, ta[i].value, tb[j].value};
    ++i;
    ++j;
  }
  return std::nullopt;
}

std::string DumpFrame(const Frame &frame) {
  std::ostringstream out;
  out << "frame " << (frame.sense ? frame.sense->ToString() : std::string("(anonymous)")) << "\n";
  out << "  predicate " << frame.predicate << (frame.provisional ? " (provisional)" : "") << "\n";
  out << "  pos " << PosName(frame.pos) << "\n";
  std::vector<Condition> conds = frame.conditions;
  std::sort(conds.begin(), conds.end());
  for (const Condition &c : conds) out << "  condition " << c.ToString() << "\n";
  std::function<void(const std::vector<Slot> &, int)> walk = [&](const std::vector<Slot> &level, int depth) {
    std::vector<const Slot *> sorted;
    for (const Slot &s : level) sorted.push_back(&s);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Slot *a, const Slot *b) { return SlotNameLess(a->name, b->name); });
    std::string indent(2 * depth, ' ');
    for (const Slot *s : sorted) {
      out << indent << "slot " << s->name;
      if (!s->cases.empty()) out << " case=" << JoinCases(s->cases);
      if (s->binding) out << " bind=" << *s->binding;
      if (s->marker) out << " marker=" << *s->marker;
      if (s->filler) out << " filler=\"" << FillerText(*s->filler) << "\"";
      out << "\n";
      for (const std::string &r : s->restrictions) out << indent << "  restrict \"" << r << "\"\n";
      walk(s->children, depth + 1);
    }
  };
  walk(frame.slots, 1);
  for (const std::string &p : frame.provenance) out << "  provenance " << p << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// FrameStore

std::optional<SenseKey> DeterminateGenus(const DefinitionGraph &graph, const SenseKey &key) {
  NodeId from = NodeId::Internal(key);
  for (const Arc &a : graph.arcs()) {
    if (!(a.from == from)) continue;
    if (a.targets.size() == 1 && !a.targets[0].external() && (a.resolved || !a.negated)) {
      return a.targets[0].key();
    }
  }
  return std::nullopt;
}

FrameStore::FrameStore(const Lexicon &lexicon, const DefinitionGraph &graph, const PrepRules &rules)
    : lexicon_(lexicon), graph_(graph), rules_(rules), seeds_(LoadSeedFrames(lexicon)) {
  for (const SenseKey &key : lexicon.SenseKeys()) {
    std::set<SenseKey> active;
    Derive(key, &active);
  }
}

const Frame *FrameStore::Get(const SenseKey &key) const {
  auto it = frames_.find(key);
  return it == frames_.end() ? nullptr : &it->second;
}

const UseResult *FrameStore::UseOf(const SenseKey &key) const {
  auto it = uses_.find(key);
  return it == uses_.end() ? nullptr : &it->second;
}

std::optional<SenseKey> FrameStore::GenusOf(const SenseKey &key) const {
  auto it = genus_.find(key);
  if (it == genus_.end()) return std::nullopt;
  return it->second;
}

const Frame &FrameStore::Derive(const SenseKey &key, std::set<SenseKey> *active) {
  if (auto it = frames_.find(key); it != frames_.end()) return it->second;
  std::vector<const Sense *> lines = lexicon_.LinesOf(key);
  active->insert(key);

  Frame frame;
  bool built = false;
  if (auto seed = seeds_.find(key); seed != seeds_.end()) {
    frame = seed->second;
    ApplyUsageMarkers(&frame, lines, rules_);
    built = true;
  }
  if (!built) {
    // Nearest labelled ancestor of the same entry.
    for (auto parent = key.label.Parent(); parent; parent = parent->Parent()) {
      SenseKey pk{key.headword, key.pos, key.homograph, *parent};
      if (!lexicon_.HasSense(pk) || active->count(pk)) continue;
      const Frame &base = Derive(pk, active);
      frame = SpecializeSubsense(base, *lines.front(), lexicon_, rules_);
      built = true;
      break;
    }
  }
  if (!built) {
    auto genus = DeterminateGenus(graph_, key);
    if (genus && !active->count(*genus) && lexicon_.HasSense(*genus)) {
      const Frame &base = Derive(*genus, active);
      UseResult use = ApplySenseUse(base, lines, rules_);
      frame = use.frame;
      frame.sense = key;
      frame.pos = key.pos;
      ApplyUsageMarkers(&frame, lines, rules_);
      frame.provenance.push_back("use in " + key.ToString());
      uses_[key] = std::move(use);
      genus_[key] = *genus;
      built = true;
    }
  }
  if (!built) {
    ParsedDefinition d = ParseSenseLine(*lines.front());
    Frame base;
    base.predicate = ToUpper(d.genus.front());
    base.provisional = true;
    base.pos = key.pos;
    base.sense = key;
    Slot subj;
    subj.name = "SUBJ";
    subj.cases = {CaseLabel::kPat, CaseLabel::kAgt};
    base.slots.push_back(subj);
    frame = ApplySenseUse(base, lines, rules_).frame;
    ApplyUsageMarkers(&frame, lines, rules_);
    frame.provenance.push_back("provisional " + key.ToString());
  }
  active->erase(key);
  return frames_.emplace(key, std::move(frame)).first->second;
}

}  // namespace lexigraph
