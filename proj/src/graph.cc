// Copyright 2026 The Aksara Authors.
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

#include "aksara/graph.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <tuple>

#include "aksara/error.h"
#include "aksara/json_format.h"

namespace aksara {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  size_t Find(size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool Union(size_t a, size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<size_t> parent_;
};

std::string DotQuote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string FormatNumber(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

}  // namespace

double ReuseTree::TotalWeight() const {
  double total = 0.0;
  for (const TreeEdge& e : edges) total += e.weight;
  return total;
}

std::vector<std::pair<size_t, size_t>> SpanningTreeEdges(
    const std::vector<std::string>& ids,
    const std::vector<std::vector<double>>& weights) {
  struct Candidate {
    double weight;
    const std::string* low;
    const std::string* high;
    size_t i;
    size_t j;
  };
  std::vector<Candidate> candidates;
  for (size_t i = 0; i < ids.size(); ++i) {
    for (size_t j = i + 1; j < ids.size(); ++j) {
      size_t lo = i, hi = j;
      if (ids[hi] < ids[lo]) std::swap(lo, hi);
      candidates.push_back({weights[i][j], &ids[lo], &ids[hi], lo, hi});
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& x, const Candidate& y) {
              return std::tie(x.weight, *x.low, *x.high) <
                     std::tie(y.weight, *y.low, *y.high);
            });
  DisjointSets components(ids.size());
  std::vector<std::pair<size_t, size_t>> chosen;
  for (const Candidate& c : candidates) {
    if (chosen.size() + 1 >= ids.size()) break;
    if (components.Union(c.i, c.j)) chosen.emplace_back(c.i, c.j);
  }
  return chosen;
}

ReuseTree MinimumSpanningTree(const SimilarityMatrix& matrix,
                              const std::vector<TreeNode>& nodes) {
  if (matrix.size() == 0) {
    throw Error("empty-matrix", "cannot build a tree from an empty matrix");
  }
  std::map<std::string, const TreeNode*> metadata;
  for (const TreeNode& node : nodes) metadata[node.id] = &node;

  const size_t size = matrix.size();
  std::vector<std::vector<double>> weights(size, std::vector<double>(size));
  for (size_t i = 0; i < size; ++i) {
    for (size_t j = 0; j < size; ++j) weights[i][j] = 1.0 - matrix.values[i][j];
  }

  ReuseTree tree;
  tree.params = matrix.params;
  for (const std::string& id : matrix.ids) {
    auto it = metadata.find(id);
    tree.nodes.push_back(it != metadata.end() ? *it->second
                                              : TreeNode{id, id, "", ""});
  }
  for (auto [i, j] : SpanningTreeEdges(matrix.ids, weights)) {
    tree.edges.push_back(
        {matrix.ids[i], matrix.ids[j], weights[i][j], matrix.values[i][j]});
  }
  std::sort(tree.nodes.begin(), tree.nodes.end(),
            [](const TreeNode& x, const TreeNode& y) { return x.id < y.id; });
  std::sort(tree.edges.begin(), tree.edges.end(),
            [](const TreeEdge& x, const TreeEdge& y) {
              return std::tie(x.a, x.b) < std::tie(y.a, y.b);
            });
  return tree;
}

std::vector<TreeNode> NodesFromCorpus(const CorpusIndex& index) {
  std::vector<TreeNode> nodes;
  for (const auto& doc : index.documents()) {
    const DocumentRecord& r = doc.record;
    nodes.push_back({r.id, r.title.empty() ? r.id : r.title, r.language,
                     r.group});
  }
  return nodes;
}

bool IsSpanningTree(const ReuseTree& tree) {
  if (tree.nodes.empty()) return false;
  if (tree.edges.size() != tree.nodes.size() - 1) return false;
  std::map<std::string, size_t> position;
  for (const TreeNode& node : tree.nodes) {
    if (!position.emplace(node.id, position.size()).second) return false;
  }
  DisjointSets components(tree.nodes.size());
  for (const TreeEdge& e : tree.edges) {
    auto a = position.find(e.a);
    auto b = position.find(e.b);
    if (a == position.end() || b == position.end()) return false;
    if (!components.Union(a->second, b->second)) return false;  // cycle
  }
  // n - 1 acyclic edges over n nodes always connect them.
  return true;
}

GraphFormat ParseGraphFormat(std::string_view name) {
  if (name == "json") return GraphFormat::kJson;
  if (name == "dot") return GraphFormat::kDot;
  throw Error("invalid-format", "unknown graph format: " + std::string(name));
}

std::string ExportGraph(const ReuseTree& tree, GraphFormat format) {
  if (format == GraphFormat::kJson) return ToJson(tree).dump(2) + "\n";

  std::string out = "graph reuse {\n";
  out += "  // " + tree.params.ToString() + "\n";
  for (const TreeNode& node : tree.nodes) {
    out += "  " + DotQuote(node.id) + " [label=" + DotQuote(node.label) +
           ", language=" + DotQuote(node.language) +
           ", group=" + DotQuote(node.group) + "];\n";
  }
  for (const TreeEdge& e : tree.edges) {
    out += "  " + DotQuote(e.a) + " -- " + DotQuote(e.b) +
           " [weight=" + FormatNumber(e.weight) +
           ", similarity=" + FormatNumber(e.similarity) + "];\n";
  }
  out += "}\n";
  return out;
}

ReuseTree ImportGraphJson(std::string_view text) {
  try {
    return TreeFromJson(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error("invalid-graph", std::string("cannot parse graph: ") + e.what());
  }
}

}  // namespace aksara
