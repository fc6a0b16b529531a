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

#include <algorithm>
#include <random>

#include "lexigraph/defgraph.h"
#include "lexigraph/frames.h"
#include "lexigraph/prep_rules.h"
#include "lexigraph/text.h"
#include "test_util.h"

namespace lexigraph {
namespace {

using testing::DataPath;
using testing::Key;
using testing::ResolvedCorpus;

const PrepRules &Rules() {
  static const PrepRules rules = PrepRules::Load(DataPath("prep_rules.tsv"));
  return rules;
}

const FrameStore &Store() {
  static const DefinitionGraph graph = BuildResolvedGraph(ResolvedCorpus());
  static const FrameStore store(ResolvedCorpus(), graph, Rules());
  return store;
}

const Frame &FrameOf(const std::string &key) {
  const Frame *f = Store().Get(Key(key));
  REQUIRE(f != nullptr);
  return *f;
}

std::vector<std::string> ChildNames(const Slot &s) {
  std::vector<std::string> out;
  for (const Slot &c : s.children) out.push_back(c.name);
  std::sort(out.begin(), out.end());
  return out;
}

TEST_CASE("seed frame for sense 1 nests the respect slots") {
  auto seeds = LoadSeedFrames(ResolvedCorpus());
  const Frame &f = seeds.at(Key("change:vi:1:1"));
  CHECK(f.predicate == "BECOME-DIFFERENT");
  CHECK_FALSE(f.provisional);
  CHECK(f.conditions == std::vector<Condition>{{"FROM-STATE", "NE", "TO-STATE"}});
  REQUIRE(f.Find("SUBJ") != nullptr);
  CHECK(f.Find("SUBJ")->cases == std::set<CaseLabel>{CaseLabel::kPat, CaseLabel::kAgt});
  CHECK(f.Find("ESSENTIAL-ATTRS") != nullptr);
  REQUIRE(f.Find("ACCIDENTAL-ATTRS") != nullptr);
  CHECK(ChildNames(*f.Find("ACCIDENTAL-ATTRS")) ==
        std::vector<std::string>{"FROM-STATE", "RESPECT", "TIME1", "TIME2", "TO-STATE"});
  CHECK(f.slots.size() == 3);
}

TEST_CASE("seed frame for sense 2 binds subject and result") {
  auto seeds = LoadSeedFrames(ResolvedCorpus());
  const Frame &f = seeds.at(Key("change:vi:1:2"));
  CHECK(f.predicate == "BECOME-DIFFERENT");
  CHECK(f.conditions == std::vector<Condition>{{"FROM-STATE", "NE", "TO-STATE"}});
  CHECK(f.Find("SUBJ")->binding == "FROM-STATE");
  CHECK(f.Find("RESULT")->binding == "TO-STATE");
  for (const char *name : {"TIME1", "FROM-STATE", "TIME2", "TO-STATE"}) CHECK(f.Find(name) != nullptr);
}

TEST_CASE("senses without a PRED line have no seed") {
  auto seeds = LoadSeedFrames(ResolvedCorpus());
  CHECK(seeds.size() == 2);
  CHECK(seeds.count(Key("change:vi:1:1a")) == 0);
  CHECK(seeds.count(Key("coalify:vb:1:1")) == 0);
}

TEST_CASE("seed grammar errors") {
  SenseKey k = Key("x:vi:1:1");
  CHECK_THROWS_AS(ParseSeedFrame({"PRED P", "SLOT SUBJ COLOR red"}, k), LexError);
  CHECK_THROWS_AS(ParseSeedFrame({"PRED P", "FROB"}, k), LexError);
  CHECK_THROWS_AS(ParseSeedFrame({"PRED P", "SLOT SUBJ CASE PAT|XYZ"}, k), LexError);
  CHECK_THROWS_AS(ParseSeedFrame({"SLOT SUBJ"}, k), LexError);
  CHECK_THROWS_AS(ParseSeedFrame({"PRED P", "SLOT A", "COND A NE B"}, k), LexError);
  CHECK_THROWS_AS(ParseSeedFrame({"PRED P", "SLOT a.b"}, k), LexError);
  Frame ok = ParseSeedFrame({"PRED P", "SLOT X.A", "SLOT B", "COND A NE B"}, k);
  CHECK(ok.PathOf("A") == "X.A");
}

// Restriction strings for the sense-1 subsenses, whitespace-normalized.
const std::vector<std::pair<std::string, std::string>> kRespectRows = {
    {"change:vi:1:1a", "characteristic, property, or tendency"},
    {"change:vi:1:1b(1)", "form, appearance, position, state, or stage"},
    {"change:vi:1:1b(2)", "facial complexion"},
    {"change:vi:1:1c",
     "size, quantity, number, degree, value, intensity, power, authority, reputation, wealth, amount, strength, "
     "etc."},
    {"change:vi:1:1d", "customs, methods, or attitudes specif religious attitudes"},
    {"change:vi:1:1e", "phase of the moon"},
    {"change:vi:1:1f", "capacity of being sour (e.g. disposition, taste, smell, acidity)"},
    {"change:vi:1:1f", "capacity of being tainted (e.g. subject to putrefaction, corruption, moral contamination)"},
    {"change:vi:1:1g", "means of conveyance"},
    {"change:vi:1:1g", "vehicle or transportation line being used"},
    {"change:vi:1:1h", "register of the voice"},
    {"change:vi:1:1h", "voice's tone, pitch, or intensity"},
    {"change:vi:1:1i", "method, tempo, or approach"},
};

TEST_CASE("every respect row reproduces on its subsense frame") {
  CHECK(kRespectRows.size() == 13);
  for (const auto &[key, text] : kRespectRows) {
    CAPTURE(key);
    const Slot *respect = FrameOf(key).Find("ACCIDENTAL-ATTRS.RESPECT");
    REQUIRE(respect != nullptr);
    bool found = std::any_of(respect->restrictions.begin(), respect->restrictions.end(),
                             [&](const std::string &r) { return NormalizeSpace(r) == NormalizeSpace(text); });
    CHECK(found);
  }
}

TEST_CASE("1a specialization adds respect and direction restrictions") {
  const Frame &f = FrameOf("change:vi:1:1a");
  CHECK(f.Find("ACCIDENTAL-ATTRS.RESPECT")->restrictions ==
        std::vector<std::string>{"characteristic, property, or tendency"});
  const Slot *dir = f.Find("ACCIDENTAL-ATTRS.DIRECTION");
  REQUIRE(dir != nullptr);
  CHECK(dir->restrictions.size() == 2);
  CHECK(f.provenance.back() == "specialize change:vi:1:1 -> change:vi:1:1a");
}

TEST_CASE("1e specialization fills the moon and adds a through-state") {
  const Frame &f = FrameOf("change:vi:1:1e");
  CHECK(FillerText(*f.Find("SUBJ")->filler) == "moon");
  CHECK(FillerText(*f.Find("ACCIDENTAL-ATTRS.THROUGH-STATE")->filler) == "new moon");
  CHECK(f.Find("ACCIDENTAL-ATTRS.TIMEX") != nullptr);
  CHECK(f.Find("ACCIDENTAL-ATTRS.RESPECT")->restrictions == std::vector<std::string>{"phase of the moon"});
}

TEST_CASE("specialization requires a subsense label") {
  auto seeds = LoadSeedFrames(ResolvedCorpus());
  const Frame &two = seeds.at(Key("change:vi:1:2"));
  const Sense *s1a = ResolvedCorpus().LinesOf(Key("change:vi:1:1a")).front();
  CHECK_THROWS_AS(SpecializeSubsense(two, *s1a, ResolvedCorpus(), Rules()), LexError);
}

TEST_CASE("empty specialization keeps the parent frame") {
  auto seeds = LoadSeedFrames(ResolvedCorpus());
  const Frame &one = seeds.at(Key("change:vi:1:1"));
  Sense bare;
  bare.headword = "change";
  bare.pos = PartOfSpeech::kVi;
  bare.homograph = 1;
  bare.label = SenseLabel("1z");
  bare.raw_definition = "vary";
  Frame f = SpecializeSubsense(one, bare, ResolvedCorpus(), Rules());
  CHECK(Canonicalize(f) == Canonicalize(one));
  CHECK(f.provenance.size() == one.provenance.size() + 1);
}

TEST_CASE("usage prepositions become slot markers") {
  CHECK(FrameOf("change:vi:1:2a").Find("TO-STATE")->marker == "into");
  CHECK(FrameOf("change:vi:1:2b").Find("TO-STATE")->marker == "to");
  CHECK_FALSE(FrameOf("change:vi:1:2c").Find("TO-STATE")->marker.has_value());
  CHECK(FrameOf("turn:vi:1:6b(1)").Find("TO-STATE")->marker == "into or to");
  CHECK(UsagePrepositions(std::string("used with into")) == std::vector<std::string>{"into"});
  CHECK(UsagePrepositions(std::string("usu. used with to or into")) == std::vector<std::string>{"to", "into"});
  CHECK(UsagePrepositions(std::nullopt).empty());
  CHECK(UsageSubject(std::string("used of the moon")) == "the moon");
  CHECK_FALSE(UsageSubject(std::string("used with into")).has_value());
}

TEST_CASE("coalify fills the to-state and the agent") {
  const UseResult *use = Store().UseOf(Key("coalify:vb:1:1"));
  REQUIRE(use != nullptr);
  CHECK(Store().GenusOf(Key("coalify:vb:1:1")) == Key("change:vi:1:2"));
  std::vector<UseDelta> want = {{DeltaKind::kFill, "TO-STATE", "coal"},
                                {DeltaKind::kFill, "AGENT", "the process of coalification"}};
  CHECK(use->deltas == want);
  CHECK(use->residue.empty());
  CHECK(use->frame.Find("SUBJ")->cases == std::set<CaseLabel>{CaseLabel::kPat});
  CHECK(use->frame.Find("AGENT")->cases == std::set<CaseLabel>{CaseLabel::kAgt});
}

TEST_CASE("a bare synonym use leaves the genus frame unchanged") {
  const UseResult *use = Store().UseOf(Key("transform:vi:1:1"));
  REQUIRE(use != nullptr);
  CHECK(use->deltas.empty());
  CHECK(use->residue.empty());
  CHECK(Canonicalize(use->frame) == Canonicalize(FrameOf("change:vi:1:1")));
}

// Sense keys whose definitions restrict the RESPECT slot of their genus.
const std::vector<std::pair<std::string, std::string>> kRespectUses = {
    {"break:vi:1:5c", "purport, mood, or attitude"}, {"break:vi:1:6b", "line or set"},
    {"come round:vi:1:2", "direction or opinion"},  {"cut:vi:1:3g", "direction"},
    {"deform:vi:1:1", "shape"},                      {"fade:vi:1:6a", "loudness or visibility"},
    {"push:vi:1:5b", "quantity or extent"},
};

TEST_CASE("each respect use yields a RESTRICT RESPECT delta") {
  for (const auto &[key, text] : kRespectUses) {
    CAPTURE(key);
    const UseResult *use = Store().UseOf(Key(key));
    REQUIRE(use != nullptr);
    bool found = std::any_of(use->deltas.begin(), use->deltas.end(), [&](const UseDelta &d) {
      return d.kind == DeltaKind::kRestrict && EndsWith(d.path, "RESPECT") && d.value == text;
    });
    CHECK(found);
  }
}

TEST_CASE("apply_use maps prepositions, adverbs and residue") {
  auto seeds = LoadSeedFrames(ResolvedCorpus());
  const Frame &two = seeds.at(Key("change:vi:1:2"));
  Sense s;
  s.headword = "x";
  s.label = SenseLabel("1");
  s.raw_definition = "change gradually from ice into water with a torch to make tea";
  UseResult r = ApplyUse(two, ParseSenseLine(s), Rules());
  std::vector<UseDelta> want = {{DeltaKind::kAddSlot, "MANNER", "gradually"},
                                {DeltaKind::kFill, "FROM-STATE", "ice"},
                                {DeltaKind::kFill, "TO-STATE", "water"},
                                {DeltaKind::kFill, "INSTRUMENT", "a torch"}};
  CHECK(r.deltas == want);
  REQUIRE(r.residue.size() == 1);
  CHECK(r.residue[0].kind == PhraseKind::kInfinitive);
  CHECK(FillerText(*r.frame.Find("TO-STATE")->filler) == "water");
}

TEST_CASE("a second fill of the same slot is residue") {
  auto seeds = LoadSeedFrames(ResolvedCorpus());
  Sense s;
  s.headword = "x";
  s.label = SenseLabel("1");
  s.raw_definition = "change into ice into water";
  UseResult r = ApplyUse(seeds.at(Key("change:vi:1:2")), ParseSenseLine(s), Rules());
  CHECK(r.deltas.size() == 1);
  CHECK(r.residue.size() == 1);
}

TEST_CASE("canonical tuples of sense 1 and sense 2 first differ at the subject binding") {
  auto diff = DiffFrames(FrameOf("change:vi:1:1"), FrameOf("change:vi:1:2"));
  REQUIRE(diff.has_value());
  CHECK(diff->path == "SUBJ.bind");
  CHECK(diff->a_value == "none");
  CHECK(diff->b_value == "FROM-STATE");
}

TEST_CASE("1a and 1b(1) first differ at the respect restriction") {
  auto diff = DiffFrames(FrameOf("change:vi:1:1a"), FrameOf("change:vi:1:1b(1)"));
  REQUIRE(diff.has_value());
  CHECK(diff->path == "ACCIDENTAL-ATTRS.RESPECT.restrict");
}

TEST_CASE("unresolved senses get provisional predicates") {
  const Frame &f = FrameOf("change:vi:1:3");
  CHECK(f.provisional);
  CHECK(f.predicate == "DISROBE");
  CHECK(Canonicalize(f)[2].value == "DISROBE (provisional)");
}

TEST_CASE("every sense of the corpus has a frame") {
  for (const SenseKey &k : ResolvedCorpus().SenseKeys()) CHECK(Store().Get(k) != nullptr);
}

TEST_CASE("frame dump is stable and ordered") {
  std::string dump = DumpFrame(FrameOf("change:vi:1:1"));
  CHECK(dump.find("frame change:vi:1:1\n") == 0);
  CHECK(dump.find("slot SUBJ") < dump.find("slot ESSENTIAL-ATTRS"));
  CHECK(dump.find("slot FROM-STATE") < dump.find("slot TIME1"));
  CHECK(dump == DumpFrame(FrameOf("change:vi:1:1")));
}

// Random frames for the canonical-form properties.
Frame RandomFrame(std::mt19937 &rng) {
  static const std::vector<std::string> names = {"SUBJ", "OBJ", "FROM-STATE", "TO-STATE", "TIME1",
                                                 "RESPECT", "MANNER", "DIRECTION", "PROCESS"};
  Frame f;
  f.predicate = rng() % 2 ? "BECOME-DIFFERENT" : "MOVE";
  int n = std::uniform_int_distribution<int>(1, 5)(rng);
  std::vector<std::string> picked = names;
  std::shuffle(picked.begin(), picked.end(), rng);
  for (int i = 0; i < n; ++i) {
    Slot s;
    s.name = picked[i];
    if (rng() % 2) s.cases.insert(CaseLabel::kPat);
    if (rng() % 3 == 0) s.filler = std::string("v") + std::to_string(rng() % 4);
    int r = rng() % 3;
    for (int j = 0; j < r; ++j) s.AddRestriction("r" + std::to_string(rng() % 5));
    if (rng() % 4 == 0) {
      Slot c;
      c.name = names[rng() % names.size()];
      s.children.push_back(c);
    }
    f.slots.push_back(s);
  }
  if (n >= 2 && rng() % 2) f.conditions.push_back({f.slots[0].name, "NE", f.slots[1].name});
  return f;
}

void ShuffleDeep(std::vector<Slot> *slots, std::mt19937 &rng) {
  std::shuffle(slots->begin(), slots->end(), rng);
  for (Slot &s : *slots) {
    std::shuffle(s.restrictions.begin(), s.restrictions.end(), rng);
    ShuffleDeep(&s.children, rng);
  }
}

TEST_CASE("canonical form is idempotent and order independent") {
  std::mt19937 rng(1016);
  for (int trial = 0; trial < 500; ++trial) {
    Frame f = RandomFrame(rng);
    Frame g = f;
    ShuffleDeep(&g.slots, rng);
    CHECK(Canonicalize(f) == Canonicalize(f));
    CHECK(Canonicalize(f) == Canonicalize(g));
    CHECK_FALSE(DiffFrames(f, g).has_value());
    FrameTuple t = Canonicalize(f);
    CHECK(std::is_sorted(t.begin(), t.end(),
                         [](const TupleEntry &a, const TupleEntry &b) { return a.sort_key < b.sort_key; }));
  }
}

TEST_CASE("frame diff is symmetric and finds a real difference") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    Frame a = RandomFrame(rng), b = RandomFrame(rng);
    auto ab = DiffFrames(a, b), ba = DiffFrames(b, a);
    CHECK(ab.has_value() == ba.has_value());
    CHECK((Canonicalize(a) == Canonicalize(b)) == !ab.has_value());
    if (!ab) continue;
    CHECK(ab->sort_key == ba->sort_key);
    CHECK(ab->a_value == ba->b_value);
    CHECK(ab->a_value != ab->b_value);
    CHECK(TupleValue(Canonicalize(a), ab->sort_key) == ab->a_value);
    CHECK(TupleValue(Canonicalize(b), ab->sort_key) == ab->b_value);
  }
}

// Collects (path, restriction) pairs and slot paths.
std::set<std::string> Facts(const Frame &f) {
  std::set<std::string> out;
  for (const std::string &p : f.SlotPaths()) {
    out.insert("slot " + p);
    for (const std::string &r : f.Find(p)->restrictions) out.insert("restrict " + p + " " + r);
    if (f.Find(p)->filler) out.insert("filled " + p);
  }
  for (const Condition &c : f.conditions) out.insert("cond " + c.ToString());
  return out;
}

TEST_CASE("uses only add to the genus frame") {
  for (const auto &[key, frame] : Store().frames()) {
    const UseResult *use = Store().UseOf(key);
    if (!use) continue;
    CAPTURE(key.ToString());
    const Frame *genus = Store().Get(*Store().GenusOf(key));
    std::set<std::string> before = Facts(*genus), after = Facts(use->frame);
    CHECK(std::includes(after.begin(), after.end(), before.begin(), before.end()));
    for (const UseDelta &d : use->deltas) {
      if (d.kind == DeltaKind::kFill) CHECK(before.count("filled " + d.path) == 0);
    }
  }
}

TEST_CASE("descendants of sense 1 keep its condition") {
  SenseKey one = Key("change:vi:1:1");
  for (const auto &[key, frame] : Store().frames()) {
    bool descends = std::find_if(frame.provenance.begin(), frame.provenance.end(), [](const std::string &p) {
                      return p == "seed change:vi:1:1";
                    }) != frame.provenance.end();
    if (!descends) continue;
    CAPTURE(key.ToString());
    CHECK(std::find(frame.conditions.begin(), frame.conditions.end(),
                    Condition{"FROM-STATE", "NE", "TO-STATE"}) != frame.conditions.end());
  }
  (void)one;
}

}  // namespace
}  // namespace lexigraph
