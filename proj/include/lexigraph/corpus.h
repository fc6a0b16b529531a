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


// Bundled fixture checks: a manifest of expected counts, tallies, frame
// restrictions and resolution outcomes, verified against the loaded data.

#ifndef LEXIGRAPH_CORPUS_H_
#define LEXIGRAPH_CORPUS_H_

#include <string>
#include <string_view>
#include <vector>

#include "lexigraph/lexicon.h"
#include "lexigraph/prep_rules.h"

namespace lexigraph {

// One manifest row: kind, key, expected value, and how the number was
// obtained.
//   count       change_vi_labels | using_senses | using_lines |
//               respect_rows | respect_uses | set_aside | remaining_outside
//   tally       <reduction rule name>
//   respect     <change sense>  <restriction on its RESPECT slot>
//   use         <using sense>   <RESPECT restriction its use adds>
//   resolution  <using sense>   <target key> | family <key> | ambiguous
struct ManifestRow {
  std::string kind;
  std::string key;
  std::string value;
  std::string derivation;
  int line = 0;
};

struct Manifest {
  std::vector<ManifestRow> rows;

  // Tab-separated, four columns, "#" comments. Throws LexError.
  static Manifest Parse(std::string_view text);
  static Manifest Load(const std::string &path);
};

struct FixtureCheck {
  ManifestRow row;
  std::string actual;
  bool ok = false;
};

struct FixtureReport {
  std::vector<FixtureCheck> checks;

  bool ok() const;
  std::vector<FixtureCheck> Mismatches() const;
  // One line per check: "ok|MISMATCH kind key expected=... actual=...".
  std::string ToText() const;
};

// Lexicon is expected to carry the resolution records. Never throws on a
// mismatch; unknown kinds are reported as mismatches.
FixtureReport VerifyFixture(const Lexicon &lexicon, const PrepRules &rules, const Manifest &manifest);

// Lexicon of the bundled corpus file plus the bundled resolutions.
Lexicon LoadBundledCorpus(const std::string &data_dir);

}  // namespace lexigraph

#endif  // LEXIGRAPH_CORPUS_H_
