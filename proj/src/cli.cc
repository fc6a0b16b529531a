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


#include "lexigraph/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lexigraph/corpus.h"
#include "lexigraph/defgraph.h"
#include "lexigraph/frames.h"
#include "lexigraph/parser.h"
#include "lexigraph/reduction.h"
#include "lexigraph/ssn.h"
#include "lexigraph/text.h"

namespace lexigraph {
namespace {

struct Options {
  std::vector<std::string> lexicons;
  std::vector<std::string> resolutions;
  std::string format;
  std::string rules;
  std::string mode = "optimistic";
  std::string manifest;
  std::string word;
  std::string label;
  std::string text;
  std::string file;
  std::string out_path;
  bool strict = false;
  bool no_coreference = false;
};

// Signals a data problem already reported to the error stream.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string RulesPath(const Options &o) {
  if (!o.rules.empty()) return o.rules;
  if (const char *env = std::getenv("LEXIGRAPH_RULES"); env && *env) return env;
  return DefaultDataDir() + "/prep_rules.tsv";
}

bool UsesBundledCorpus(const Options &o) { return o.lexicons.empty(); }

Lexicon LoadLexicon(const Options &o) {
  Lexicon lexicon;
  if (UsesBundledCorpus(o)) {
    lexicon = LoadBundledCorpus(DefaultDataDir());
  } else {
    for (const std::string &path : o.lexicons) LoadLexfInto(path, &lexicon);
  }
  for (const std::string &path : o.resolutions) LoadLexfInto(path, &lexicon);
  return lexicon;
}

std::string Format(const Options &o, const std::string &fallback) { return o.format.empty() ? fallback : o.format; }

GraphMode Mode(const Options &o) {
  auto m = ParseGraphMode(o.mode);
  if (!m) throw CLI::ValidationError("--mode", "must be optimistic or resolved");
  return *m;
}

// Everything the frame-level commands need, built in order.
struct World {
  Lexicon lexicon;
  PrepRules rules;
  DefinitionGraph graph;
  std::unique_ptr<FrameStore> frames;

  explicit World(const Options &o)
      : lexicon(LoadLexicon(o)), rules(PrepRules::Load(RulesPath(o))), graph(BuildResolvedGraph(lexicon)) {
    frames = std::make_unique<FrameStore>(lexicon, graph, rules);
  }
};

// Networks for the given verb headwords; a word whose senses cannot be told
// apart is skipped with a warning.
std::map<std::string, Ssn> Networks(const World &w, const std::set<std::string> &words, std::ostream &err) {
  std::map<std::string, Ssn> out;
  for (const std::string &word : words) {
    try {
      out.emplace(word, CompileSsn(w.lexicon, *w.frames, word));
    } catch (const LexError &e) {
      err << "warning: no network for '" << word << "': " << e.what() << "\n";
    }
  }
  return out;
}

std::set<std::string> VerbHeadwords(const Lexicon &lexicon) {
  std::set<std::string> out;
  for (const SenseKey &k : lexicon.SenseKeys()) {
    if (IsVerb(k.pos)) out.insert(k.headword);
  }
  return out;
}

std::set<std::string> LemmasIn(const std::vector<std::string> &sentences, const Lexicon &lexicon) {
  std::set<std::string> out;
  for (const std::string &s : sentences) {
    std::vector<std::string> tokens = SentenceTokens(s);
    if (tokens.empty()) continue;
    for (const Chunk &c : ChunkSentence(tokens, lexicon)) {
      if (c.kind == ChunkKind::kVerb) out.insert(c.lemma);
    }
  }
  return out;
}

int CmdIngest(const Options &o, std::ostream &out, std::ostream &err) {
  Lexicon lexicon = LoadLexicon(o);
  PrepRules rules = PrepRules::Load(RulesPath(o));
  DefinitionGraph graph = BuildResolvedGraph(lexicon);
  int empty_genus = 0;
  for (const Sense &s : lexicon.entries) {
    if (s.synonym_only()) continue;
    if (ParseSenseLine(s).genus.empty()) {
      err << "line " << s.source_line << ": no genus in '" << s.raw_definition << "'\n";
      ++empty_genus;
    }
  }
  out << "senses " << lexicon.SenseKeys().size() << "\n";
  out << "lines " << lexicon.entries.size() << "\n";
  out << "seed-frames " << lexicon.seed_frames.size() << "\n";
  out << "resolutions " << lexicon.resolutions.size() << "\n";
  out << "arcs " << graph.arcs().size() << "\n";
  std::string manifest = o.manifest;
  if (manifest.empty() && UsesBundledCorpus(o)) manifest = DefaultDataDir() + "/manifest.tsv";
  bool ok = empty_genus == 0;
  if (!manifest.empty()) {
    FixtureReport report = VerifyFixture(lexicon, rules, Manifest::Load(manifest));
    out << report.ToText();
    ok = ok && report.ok();
    if (!report.ok()) err << report.Mismatches().size() << " manifest mismatches\n";
  }
  return ok ? kExitOk : kExitData;
}

int CmdGraph(const Options &o, std::ostream &out) {
  DefinitionGraph graph = BuildResolvedGraph(LoadLexicon(o));
  out << (Format(o, "dot") == "dot" ? GraphToDot(graph, Mode(o)) : GraphToTsv(graph, Mode(o)));
  return kExitOk;
}

int CmdScc(const Options &o, std::ostream &out) {
  DefinitionGraph graph = BuildResolvedGraph(LoadLexicon(o));
  out << ComponentsToTsv(Components(graph, Mode(o)));
  return kExitOk;
}

int CmdPrimitives(const Options &o, std::ostream &out) {
  PrimitiveReport report = PrimitiveCandidates(BuildResolvedGraph(LoadLexicon(o)));
  for (const auto &component : report.candidates) {
    std::vector<std::string> names;
    for (const NodeId &n : component) names.push_back(n.name());
    out << "candidate\t" << Join(names, "\t") << "\n";
  }
  for (const NodeId &n : report.undefined_leaves) out << "undefined\t" << n.name() << "\n";
  return kExitOk;
}

int CmdAutoresolve(const Options &o, std::ostream &out, std::ostream &err) {
  World w(o);
  auto ssns = Networks(w, VerbHeadwords(w.lexicon), err);
  ParserResources res{w.lexicon, *w.frames, ssns, w.rules};
  Lexicon proposals;
  std::ostringstream text;
  for (const DefinitionDisambiguation &d : AutoResolve(res)) {
    if (d.record) {
      proposals.resolutions.push_back(*d.record);
      continue;
    }
    std::vector<std::string> keys;
    for (const SenseKey &k : d.candidates) keys.push_back(k.ToString());
    text << "# " << d.sense.ToString() << " " << d.genus_word << ": " << Join(keys, ", ") << "\n";
  }
  text << WriteLexf(proposals);
  if (o.out_path.empty()) {
    out << text.str();
    return kExitOk;
  }
  if (std::filesystem::exists(o.out_path)) {
    err << "refusing to overwrite " << o.out_path << "\n";
    return kExitData;
  }
  std::ofstream file(o.out_path);
  file << text.str();
  if (!file) {
    err << "cannot write " << o.out_path << "\n";
    return kExitData;
  }
  return kExitOk;
}

int CmdReduce(const Options &o, std::ostream &out) {
  World w(o);
  ReductionContext ctx{w.lexicon, *w.frames, w.rules};
  ReductionReport report = ReduceFixpoint(ctx);
  out << (Format(o, "text") == "tsv" ? ReportToTsv(report) : ReportSummary(report));
  return kExitOk;
}

int CmdFrames(const Options &o, std::ostream &out, std::ostream &err) {
  World w(o);
  int shown = 0;
  for (const auto &[key, frame] : w.frames->frames()) {
    if (key.headword != o.word) continue;
    if (!o.label.empty() && key.label.text() != o.label) continue;
    out << DumpFrame(frame);
    ++shown;
  }
  if (shown == 0) {
    err << "no frame for '" << o.word << (o.label.empty() ? "" : " " + o.label) << "'\n";
    return kExitData;
  }
  return kExitOk;
}

int CmdSsn(const Options &o, std::ostream &out) {
  World w(o);
  Ssn ssn = CompileSsn(w.lexicon, *w.frames, o.word);
  out << (Format(o, "text") == "dot" ? SsnToDot(ssn) : SsnToText(ssn));
  return kExitOk;
}

void PrintResult(const Options &o, const DisambiguationResult &r, std::ostream &out) {
  out << (Format(o, "text") == "tsv" ? ResultToTsv(r) : ResultToText(r));
}

int CmdParse(const Options &o, std::ostream &out, std::ostream &err) {
  World w(o);
  auto ssns = Networks(w, LemmasIn({o.text}, w.lexicon), err);
  ParserResources res{w.lexicon, *w.frames, ssns, w.rules};
  DescriptorCounter counter;
  DisambiguationResult r = ParseSentence(res, o.text, &counter);
  PrintResult(o, r, out);
  if (o.strict && (!r.unique || !r.open_questions.empty())) {
    err << "ambiguity remains: " << r.candidates.size() << " senses, " << r.open_questions.size()
        << " open questions\n";
    return kExitAmbiguous;
  }
  return kExitOk;
}

int CmdDiscourse(const Options &o, std::ostream &out, std::ostream &err) {
  std::ifstream in(o.file);
  if (!in) throw LexError("cannot open " + o.file);
  std::vector<std::string> sentences;
  for (std::string line; std::getline(in, line);) {
    if (!Trim(line).empty()) sentences.push_back(Trim(line));
  }
  if (sentences.empty()) throw LexError(o.file + ": no sentences");
  World w(o);
  auto ssns = Networks(w, LemmasIn(sentences, w.lexicon), err);
  ParserResources res{w.lexicon, *w.frames, ssns, w.rules};
  DiscourseResult d = ParseDiscourse(res, sentences, !o.no_coreference);
  for (size_t i = 0; i < d.sentences.size(); ++i) {
    if (Format(o, "text") != "tsv") out << "sentence " << i + 1 << "\n";
    PrintResult(o, d.sentences[i], out);
  }
  for (const Binding &b : d.state.bindings) {
    out << "bind " << b.var << " = " << b.value << " (sentence " << b.sentence + 1 << ")\n";
  }
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"Dictionary definition graphs, case frames and sense selection networks", "lexigraph"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--lexicon", o.lexicons, "LEXF file to load (repeatable); default is the bundled corpus")
      ->check(CLI::ExistingFile);
  app.add_option("--resolutions", o.resolutions, "LEXF file with R records (repeatable)")->check(CLI::ExistingFile);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"dot", "tsv", "text"}));
  app.add_option("--rules", o.rules, "Preposition rule table (default: LEXIGRAPH_RULES or bundled)")
      ->check(CLI::ExistingFile);

  auto *ingest = app.add_subcommand("ingest", "Validate input files and check the fixture manifest");
  ingest->add_option("--manifest", o.manifest, "Manifest to check against")->check(CLI::ExistingFile);
  auto *graph = app.add_subcommand("graph", "Export the definition graph");
  auto *scc = app.add_subcommand("scc", "List strongly connected components");
  for (auto *sub : {graph, scc}) {
    sub->add_option("--mode", o.mode, "optimistic or resolved")->check(CLI::IsMember({"optimistic", "resolved"}));
  }
  auto *primitives = app.add_subcommand("primitives", "Primitive candidates of the resolved graph");
  auto *autoresolve = app.add_subcommand("autoresolve", "Propose R records from definition contexts");
  autoresolve->add_option("--out", o.out_path, "New file for the proposals");
  auto *reduce = app.add_subcommand("reduce", "Set aside non-primitive verb senses");
  auto *frames = app.add_subcommand("frames", "Dump case frames of a word");
  frames->add_option("--word", o.word, "Headword")->required();
  frames->add_option("--label", o.label, "Sense label");
  auto *ssn = app.add_subcommand("ssn", "Show the sense selection network of a word");
  ssn->add_option("--word", o.word, "Headword")->required();
  auto *parse = app.add_subcommand("parse", "Disambiguate the verb of a sentence");
  parse->add_option("--text", o.text, "Sentence")->required();
  parse->add_flag("--strict", o.strict, "Exit 3 when ambiguity remains");
  auto *discourse = app.add_subcommand("discourse", "Parse sentences with slot carryover");
  discourse->add_option("--file", o.file, "One sentence per line")->required()->check(CLI::ExistingFile);
  discourse->add_flag("--no-coreference", o.no_coreference, "Treat sentences independently");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (ingest->parsed()) return CmdIngest(o, out, err);
    if (graph->parsed()) return CmdGraph(o, out);
    if (scc->parsed()) return CmdScc(o, out);
    if (primitives->parsed()) return CmdPrimitives(o, out);
    if (autoresolve->parsed()) return CmdAutoresolve(o, out, err);
    if (reduce->parsed()) return CmdReduce(o, out);
    if (frames->parsed()) return CmdFrames(o, out, err);
    if (ssn->parsed()) return CmdSsn(o, out);
    if (parse->parsed()) return CmdParse(o, out, err);
    if (discourse->parsed()) return CmdDiscourse(o, out, err);
  } catch (const CLI::ValidationError &e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace lexigraph
