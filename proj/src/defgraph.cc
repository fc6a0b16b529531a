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

#include "lexigraph/defgraph.h"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "lexigraph/text.h"

namespace lexigraph {

NodeId NodeId::Internal(const SenseKey &key) {
  NodeId n;
  n.external_ = false;
  n.headword_ = key.headword;
  n.key_ = key;
  n.name_ = key.ToString();
  return n;
}

NodeId NodeId::External(const std::string &headword) {
  NodeId n;
  n.external_ = true;
  n.headword_ = headword;
  n.key_.headword = headword;
  n.name_ = headword;
  return n;
}

bool Arc::Determinate() const {
  return resolved || (targets.size() == 1 && targets.front().external());
}

std::string_view GraphModeName(GraphMode mode) {
  return mode == GraphMode::kOptimistic ? "optimistic" : "resolved";
}

std::optional<GraphMode> ParseGraphMode(std::string_view name) {
  if (name == "optimistic") return GraphMode::kOptimistic;
  if (name == "resolved" || name == "resolved-only") return GraphMode::kResolvedOnly;
  return std::nullopt;
}

int DefinitionGraph::IndexOf(const NodeId &node) const {
  auto it = index_.find(node);
  return it == index_.end() ? -1 : it->second;
}

const Arc *DefinitionGraph::FindArc(const NodeId &from, const std::string &genus_word) const {
  for (const Arc &a : arcs_) {
    if (a.from == from && a.genus_word == genus_word) return &a;
  }
  return nullptr;
}

std::vector<std::vector<int>> DefinitionGraph::Adjacency(GraphMode mode) const {
  std::vector<std::vector<int>> adj(nodes_.size());
  for (const Arc &a : arcs_) {
    if (mode == GraphMode::kResolvedOnly && !a.Determinate()) continue;
    int from = index_.at(a.from);
    for (const NodeId &t : a.targets) adj[from].push_back(index_.at(t));
  }
  for (auto &succ : adj) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }
  return adj;
}

namespace {

// Parts of speech a genus word may take when defining a sense of pos.
bool Compatible(PartOfSpeech use, PartOfSpeech target) {
  switch (use) {
    case PartOfSpeech::kVi: return target == PartOfSpeech::kVi || target == PartOfSpeech::kVb;
    case PartOfSpeech::kVt: return target == PartOfSpeech::kVt || target == PartOfSpeech::kVb;
    case PartOfSpeech::kVb: return IsVerb(target);
    default: return target == use;
  }
}

}  // namespace

DefinitionGraph BuildGraph(const Lexicon &lexicon) {
  DefinitionGraph g;
  auto add_node = [&g](const NodeId &n) {
    if (g.index_.count(n)) return;
    g.index_[n] = static_cast<int>(g.nodes_.size());
    g.nodes_.push_back(n);
  };
  std::vector<SenseKey> keys = lexicon.SenseKeys();
  for (const SenseKey &k : keys) add_node(NodeId::Internal(k));

  std::map<std::string, std::vector<SenseKey>> by_word;
  for (const SenseKey &k : keys) by_word[k.headword].push_back(k);

  for (const SenseKey &k : keys) {
    // Genus words of all lines of this sense, first occurrence order.
    std::vector<std::string> words;
    std::set<std::string> negated;
    for (const Sense *line : lexicon.LinesOf(k)) {
      ParsedDefinition d = ParseSenseLine(*line);
      for (const std::string &w : d.genus) {
        std::string word = ToLower(w);
        if (std::find(words.begin(), words.end(), word) == words.end()) words.push_back(word);
        if (d.negated) negated.insert(word);
      }
    }
    for (const std::string &word : words) {
      Arc arc;
      arc.from = NodeId::Internal(k);
      arc.genus_word = word;
      arc.negated = negated.count(word) > 0;
      auto it = by_word.find(word);
      if (it == by_word.end()) {
        NodeId ext = NodeId::External(word);
        add_node(ext);
        arc.targets.push_back(ext);
      } else {
        for (const SenseKey &t : it->second) {
          if (Compatible(k.pos, t.pos)) arc.targets.push_back(NodeId::Internal(t));
        }
        // No compatible part of speech: keep every verb sense (or every
        // sense) rather than lose the arc.
        if (arc.targets.empty()) {
          for (const SenseKey &t : it->second) {
            if (!IsVerb(k.pos) || IsVerb(t.pos)) arc.targets.push_back(NodeId::Internal(t));
          }
        }
        if (arc.targets.empty()) {
          for (const SenseKey &t : it->second) arc.targets.push_back(NodeId::Internal(t));
        }
      }
      std::sort(arc.targets.begin(), arc.targets.end());
      g.arcs_.push_back(std::move(arc));
    }
  }
  return g;
}

DefinitionGraph Resolve(const DefinitionGraph &graph, const ResolutionRecord &record) {
  NodeId from = NodeId::Internal(record.from);
  NodeId target = NodeId::Internal(record.target);
  std::string word = ToLower(record.genus_word);
  DefinitionGraph out = graph;
  auto it = std::find_if(out.arcs_.begin(), out.arcs_.end(),
                         [&](const Arc &a) { return a.from == from && a.genus_word == word; });
  if (it == out.arcs_.end()) {
    throw LexError("no arc from " + from.name() + " with genus word '" + word + "'");
  }
  if (record.target.headword != word || out.IndexOf(target) < 0) {
    throw LexError(target.name() + " is not a sense of '" + word + "'");
  }
  it->targets = {target};
  it->resolved = true;
  return out;
}

DefinitionGraph BuildResolvedGraph(const Lexicon &lexicon) {
  DefinitionGraph g = BuildGraph(lexicon);
  for (const ResolutionRecord &r : lexicon.resolutions) g = Resolve(g, r);
  return g;
}

std::vector<std::vector<int>> StronglyConnectedComponents(const std::vector<std::vector<int>> &adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::vector<int>> components;
  int counter = 0;
  // Iterative Tarjan; each frame is (node, next successor position).
  std::vector<std::pair<int, size_t>> frames;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto &[v, pos] = frames.back();
      if (pos < adj[v].size()) {
        int w = adj[v][pos++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<int> comp;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
      int done = v;
      frames.pop_back();
      if (!frames.empty()) {
        int parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  std::sort(components.begin(), components.end());
  return components;
}

std::vector<std::pair<int, int>> CondenseArcs(const std::vector<std::vector<int>> &adj,
                                              const std::vector<std::vector<int>> &components) {
  std::vector<int> comp_of(adj.size(), -1);
  for (size_t c = 0; c < components.size(); ++c) {
    for (int v : components[c]) comp_of[v] = static_cast<int>(c);
  }
  std::set<std::pair<int, int>> arcs;
  for (size_t v = 0; v < adj.size(); ++v) {
    for (int w : adj[v]) {
      if (comp_of[v] != comp_of[w]) arcs.insert({comp_of[v], comp_of[w]});
    }
  }
  return {arcs.begin(), arcs.end()};
}

namespace {

// Node-level components mapped to canonical NodeId order; returns the index
// components in the same order.
std::vector<std::vector<int>> CanonicalComponents(const DefinitionGraph &graph,
                                                  const std::vector<std::vector<int>> &adj) {
  std::vector<std::vector<int>> comps = StronglyConnectedComponents(adj);
  const auto &nodes = graph.nodes();
  for (auto &c : comps) {
    std::sort(c.begin(), c.end(), [&](int a, int b) { return nodes[a] < nodes[b]; });
  }
  std::sort(comps.begin(), comps.end(),
            [&](const std::vector<int> &a, const std::vector<int> &b) { return nodes[a[0]] < nodes[b[0]]; });
  return comps;
}

std::vector<std::vector<NodeId>> ToNodes(const DefinitionGraph &graph,
                                         const std::vector<std::vector<int>> &comps) {
  std::vector<std::vector<NodeId>> out;
  for (const auto &c : comps) {
    std::vector<NodeId> members;
    for (int v : c) members.push_back(graph.nodes()[v]);
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

std::vector<std::vector<NodeId>> Components(const DefinitionGraph &graph, GraphMode mode) {
  return ToNodes(graph, CanonicalComponents(graph, graph.Adjacency(mode)));
}

Condensation Condense(const DefinitionGraph &graph, GraphMode mode) {
  auto adj = graph.Adjacency(mode);
  auto comps = CanonicalComponents(graph, adj);
  Condensation c;
  c.components = ToNodes(graph, comps);
  c.arcs = CondenseArcs(adj, comps);
  return c;
}

PrimitiveReport PrimitiveCandidates(const DefinitionGraph &graph) {
  Condensation c = Condense(graph, GraphMode::kResolvedOnly);
  std::vector<bool> has_out(c.components.size(), false);
  for (const auto &[from, to] : c.arcs) has_out[from] = true;
  PrimitiveReport report;
  for (size_t i = 0; i < c.components.size(); ++i) {
    const auto &members = c.components[i];
    bool internal = std::all_of(members.begin(), members.end(),
                                [](const NodeId &n) { return !n.external(); });
    if (!has_out[i] && internal) report.candidates.push_back(members);
  }
  for (const NodeId &n : graph.nodes()) {
    if (n.external()) report.undefined_leaves.push_back(n);
  }
  std::sort(report.undefined_leaves.begin(), report.undefined_leaves.end());
  return report;
}

namespace {

std::string Quote(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

std::string GraphToDot(const DefinitionGraph &graph, GraphMode mode) {
  std::ostringstream out;
  out << "digraph definitions {\n";
  std::vector<NodeId> nodes = graph.nodes();
  std::sort(nodes.begin(), nodes.end());
  for (const NodeId &n : nodes) {
    out << "  " << Quote(n.name());
    if (n.external()) out << " [shape=box]";
    out << ";\n";
  }
  for (const Arc &a : graph.arcs()) {
    if (mode == GraphMode::kResolvedOnly && !a.Determinate()) continue;
    for (const NodeId &t : a.targets) {
      out << "  " << Quote(a.from.name()) << " -> " << Quote(t.name()) << " [label="
          << Quote(a.negated ? "not " + a.genus_word : a.genus_word);
      if (!a.Determinate()) out << ", style=dashed";
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string GraphToTsv(const DefinitionGraph &graph, GraphMode mode) {
  std::ostringstream out;
  for (const Arc &a : graph.arcs()) {
    if (mode == GraphMode::kResolvedOnly && !a.Determinate()) continue;
    std::vector<std::string> names;
    for (const NodeId &t : a.targets) names.push_back(t.name());
    out << a.from.name() << "\t" << a.genus_word << "\t" << Join(names, ",") << "\t"
        << (a.resolved ? "resolved" : a.Determinate() ? "determinate" : "bundle")
        << (a.negated ? "\tnegated" : "") << "\n";
  }
  return out.str();
}

std::string ComponentsToTsv(const std::vector<std::vector<NodeId>> &components) {
  std::ostringstream out;
  for (const auto &c : components) {
    std::vector<std::string> names;
    for (const NodeId &n : c) names.push_back(n.name());
    out << Join(names, "\t") << "\n";
  }
  return out.str();
}

}  // namespace lexigraph
