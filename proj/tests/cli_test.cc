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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lexigraph/cli.h"
#include "test_util.h"

namespace lexigraph {
namespace {

using testing::DataPath;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "lexigraph");
  std::vector<const char *> argv;
  for (const std::string &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string TempPath(const std::string &name) {
  return (std::filesystem::temp_directory_path() / ("lexigraph_cli_test_" + name)).string();
}

std::string WriteTemp(const std::string &name, const std::string &text) {
  std::string path = TempPath(name);
  std::ofstream(path) << text;
  return path;
}

bool Has(const std::string &text, const std::string &part) { return text.find(part) != std::string::npos; }

TEST_CASE("parse selects 2a") {
  Run r = Cli({"parse", "--lexicon", DataPath("change_corpus.lexf"), "--text", "The milk changed into curd"});
  CHECK(r.code == kExitOk);
  CHECK(Has(r.out, "sense change:vi:1:2a"));
  CHECK(Has(r.out, "fill TO-STATE = curd"));
}

TEST_CASE("strict parse exits 3 on ambiguity") {
  Run r = Cli({"parse", "--strict", "--text", "The wind changed"});
  CHECK(r.code == kExitAmbiguous);
  CHECK(Has(r.out, "question FRAME-DIFF(ACCIDENTAL-ATTRS.RESPECT.restrict)"));
  CHECK(Cli({"parse", "--strict", "--text", "The milk changed into curd"}).code == kExitOk);
}

TEST_CASE("parse tsv") {
  Run r = Cli({"--format", "tsv", "parse", "--text", "The moon changed"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("changed\tchange:vi:1:1e\t", 0) == 0);
}

TEST_CASE("scc lists the change/turn component") {
  Run r = Cli({"scc", "--mode", "optimistic"});
  CHECK(r.code == kExitOk);
  bool joined = false;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) {
    if (Has(line, "change:vi:1:1\t") && Has(line, "turn:vi:")) joined = true;
  }
  CHECK(joined);
  Run resolved = Cli({"scc", "--mode", "resolved"});
  CHECK(resolved.code == kExitOk);
  CHECK_FALSE(Has(resolved.out, "\t"));
}

TEST_CASE("graph exports") {
  Run dot = Cli({"graph"});
  CHECK(dot.code == kExitOk);
  CHECK(dot.out.rfind("digraph", 0) == 0);
  Run tsv = Cli({"graph", "--format", "tsv", "--mode", "resolved"});
  CHECK(tsv.code == kExitOk);
  CHECK(Has(tsv.out, "coalify:vb:1:1\tchange"));
}

TEST_CASE("ingest checks the manifest") {
  Run r = Cli({"ingest"});
  CHECK(r.code == kExitOk);
  CHECK_FALSE(Has(r.out, "MISMATCH"));
  std::string bad = WriteTemp("manifest.tsv", "count\tchange_vi_labels\t3\tdeliberately wrong\n");
  Run m = Cli({"ingest", "--manifest", bad});
  CHECK(m.code == kExitData);
  CHECK(Has(m.out, "MISMATCH"));
}

TEST_CASE("reduce, frames, ssn, primitives") {
  Run reduce = Cli({"reduce"});
  CHECK(reduce.code == kExitOk);
  CHECK(Has(reduce.out, "SLOT-FILL 41"));
  Run tsv = Cli({"reduce", "--format", "tsv"});
  CHECK(tsv.out.rfind("sense\tstatus\trule\tdetail\n", 0) == 0);

  Run frames = Cli({"frames", "--word", "change", "--label", "1e"});
  CHECK(frames.code == kExitOk);
  CHECK(Has(frames.out, "frame change:vi:1:1e"));
  CHECK(Cli({"frames", "--word", "change", "--label", "9z"}).code == kExitData);

  Run ssn = Cli({"ssn", "--word", "change"});
  CHECK(ssn.out.rfind("ssn change\n", 0) == 0);
  CHECK(Cli({"--format", "dot", "ssn", "--word", "change"}).out.rfind("digraph", 0) == 0);

  Run prim = Cli({"primitives"});
  CHECK(prim.code == kExitOk);
  CHECK(Has(prim.out, "candidate\t"));
}

TEST_CASE("autoresolve writes only new files") {
  Run r = Cli({"autoresolve"});
  CHECK(r.code == kExitOk);
  CHECK(Has(r.out, "R|coalify:vb:1:1|change|change:vi:1:2a"));
  CHECK(Has(r.out, "# caramelize:vi:1:1 change:"));

  std::string path = TempPath("proposals.lexf");
  std::filesystem::remove(path);
  CHECK(Cli({"autoresolve", "--out", path}).code == kExitOk);
  CHECK(std::filesystem::exists(path));
  Run again = Cli({"autoresolve", "--out", path});
  CHECK(again.code == kExitData);
  std::filesystem::remove(path);
}

TEST_CASE("discourse from a file") {
  std::string path = WriteTemp("discourse.txt", "The milk changed.\nIt turned into curd.\n");
  Run r = Cli({"discourse", "--file", path});
  CHECK(r.code == kExitOk);
  CHECK(Has(r.out, "sentence 2"));
  CHECK(Has(r.out, "= curd (sentence 2)"));
  Run off = Cli({"discourse", "--no-coreference", "--file", path});
  CHECK_FALSE(Has(off.out, "bind "));
}

TEST_CASE("usage errors exit 1") {
  CHECK(Cli({}).code == kExitUsage);
  CHECK(Cli({"parse"}).code == kExitUsage);
  CHECK(Cli({"parse", "--text", "x", "--bogus"}).code == kExitUsage);
  CHECK(Cli({"--format", "svg", "graph"}).code == kExitUsage);
  CHECK(Cli({"scc", "--mode", "sideways"}).code == kExitUsage);
  CHECK(Cli({"--help"}).code == kExitOk);
}

TEST_CASE("data errors exit 2") {
  std::string bad = WriteTemp("bad.lexf", "E|change|vi|1\nS|nonsense\n");
  Run r = Cli({"graph", "--lexicon", bad});
  CHECK(r.code == kExitData);
  CHECK(Has(r.err, "error:"));
  CHECK(r.out.empty());
  CHECK(Cli({"parse", "--text", "the milk and the curd"}).code == kExitData);
}

TEST_CASE("rules path from the environment") {
  std::string bad = WriteTemp("rules.tsv", "into\tBECOME-DIFFERENT\tTO-STATE\n");
  setenv("LEXIGRAPH_RULES", bad.c_str(), 1);
  Run r = Cli({"reduce"});
  unsetenv("LEXIGRAPH_RULES");
  CHECK(r.code == kExitData);
  CHECK(Has(r.err, "4 columns"));
  CHECK(Cli({"--rules", DataPath("prep_rules.tsv"), "reduce"}).code == kExitOk);
}

TEST_CASE("output is deterministic") {
  for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
           {"graph", "--format", "tsv"}, {"scc"}, {"reduce", "--format", "tsv"}, {"autoresolve"},
           {"ssn", "--word", "change"}, {"parse", "--text", "The wind changed"}}) {
    CHECK(Cli(args).out == Cli(args).out);
  }
}

}  // namespace
}  // namespace lexigraph
