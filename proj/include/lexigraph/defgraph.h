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

// The definitional digraph: one node per sense, one arc per genus word of a
// sense pointing at the senses that word may stand for.

#ifndef LEXIGRAPH_DEFGRAPH_H_
#define LEXIGRAPH_DEFGRAPH_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lexigraph/lexicon.h"

namespace lexigraph {

// A sense of the lexicon, or a word that is used in a definition but has no
// entry ("external").
class NodeId {
 public:
  static NodeId Internal(const SenseKey &key);
  static NodeId External(const std::string &headword);

  bool external() const { return external_; }
  const std::string &headword() const { return headword_; }
  // Only meaningful for internal nodes.
  const SenseKey &key() const { return key_; }
  // "<headword>:<pos>:<homograph>:<label>", or the bare headword.
  const std::string &name() const { return name_; }

  bool operator==(const NodeId &o) const { return name_ == o.name_ && external_ == o.external_; }
  auto operator<=>(const NodeId &o) const {
    if (auto c = name_ <=> o.name_; c != 0) return c;
    return external_ <=> o.external_;
  }

 private:
  bool external_ = false;
  std::string headword_;
  std::string name_;
  SenseKey key_;
};

struct Arc {
  NodeId from;
  std::string genus_word;
  std::vector<NodeId> targets;  // sorted
  bool resolved = false;        // set only by an explicit resolution
  bool negated = false;

  // Arcs followed in resolved-only mode: explicitly resolved, or pointing at
  // a single word that has no entry (nothing to choose between).
  bool Determinate() const;

  bool operator==(const Arc &) const = default;
};

enum class GraphMode { kOptimistic, kResolvedOnly };

std::string_view GraphModeName(GraphMode mode);
std::optional<GraphMode> ParseGraphMode(std::string_view name);

class DefinitionGraph {
 public:
  const std::vector<NodeId> &nodes() const { return nodes_; }
  const std::vector<Arc> &arcs() const { return arcs_; }

  // -1 if absent.
  int IndexOf(const NodeId &node) const;

  // The arc for (sense, genus word), or nullptr.
  const Arc *FindArc(const NodeId &from, const std::string &genus_word) const;

  // Successor lists over node indices. Optimistic mode follows every member
  // of every bundle; resolved-only mode follows determinate arcs.
  std::vector<std::vector<int>> Adjacency(GraphMode mode) const;

  bool operator==(const DefinitionGraph &) const = default;

 private:
  friend DefinitionGraph BuildGraph(const Lexicon &lexicon);
  friend DefinitionGraph Resolve(const DefinitionGraph &graph, const ResolutionRecord &record);

  std::vector<NodeId> nodes_;
  std::map<NodeId, int> index_;
  std::vector<Arc> arcs_;
};

// Builds the graph without applying any resolution records.
DefinitionGraph BuildGraph(const Lexicon &lexicon);

// Returns a copy with one arc resolved to a single target. Throws LexError
// for an unknown arc or a target that is not a sense of the genus word.
DefinitionGraph Resolve(const DefinitionGraph &graph, const ResolutionRecord &record);

// BuildGraph followed by every resolution record carried by the lexicon.
DefinitionGraph BuildResolvedGraph(const Lexicon &lexicon);

// Tarjan's algorithm over index adjacency lists. Components are returned
// with sorted members, ordered by their smallest member.
std::vector<std::vector<int>> StronglyConnectedComponents(const std::vector<std::vector<int>> &adj);

// Components as node lists in canonical order (members sorted by name,
// components by their first member).
std::vector<std::vector<NodeId>> Components(const DefinitionGraph &graph, GraphMode mode);

struct Condensation {
  std::vector<std::vector<NodeId>> components;
  std::vector<std::pair<int, int>> arcs;  // component indices, sorted, unique
};

// Condensation over a generic adjacency list; components follow the order of
// StronglyConnectedComponents.
std::vector<std::pair<int, int>> CondenseArcs(const std::vector<std::vector<int>> &adj,
                                              const std::vector<std::vector<int>> &components);

Condensation Condense(const DefinitionGraph &graph, GraphMode mode);

struct PrimitiveReport {
  // Terminal components of the resolved-only condensation made of senses.
  std::vector<std::vector<NodeId>> candidates;
  // Words used in definitions that have no entry.
  std::vector<NodeId> undefined_leaves;
};

PrimitiveReport PrimitiveCandidates(const DefinitionGraph &graph);

// DOT rendering: bundles dashed, resolved and single-target arcs solid,
// external nodes as boxes.
std::string GraphToDot(const DefinitionGraph &graph, GraphMode mode);

// One arc per line: from, genus word, comma-separated targets, state.
std::string GraphToTsv(const DefinitionGraph &graph, GraphMode mode);

// One component per line, members tab-separated.
std::string ComponentsToTsv(const std::vector<std::vector<NodeId>> &components);

}  // namespace lexigraph

#endif  // LEXIGRAPH_DEFGRAPH_H_
