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

#ifndef AKSARA_GRAPH_H_
#define AKSARA_GRAPH_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aksara/corpus.h"
#include "aksara/similarity.h"

namespace aksara {

struct TreeNode {
  std::string id;
  std::string label;
  std::string language;
  std::string group;

  bool operator==(const TreeNode&) const = default;
};

struct TreeEdge {
  std::string a;  // lexicographically smaller id
  std::string b;
  double weight = 0.0;  // 1 - similarity
  double similarity = 0.0;

  bool operator==(const TreeEdge&) const = default;
};

// Minimum spanning tree of the corpus. Nodes are sorted by id, edges by
// (a, b).
struct ReuseTree {
  std::vector<TreeNode> nodes;
  std::vector<TreeEdge> edges;
  MatrixParams params;

  double TotalWeight() const;
  bool operator==(const ReuseTree&) const = default;
};

// Kruskal over a dense symmetric weight matrix. Equal weights are ordered
// by the (smaller id, larger id) pair. Returns index pairs (i, j) with
// ids[i] < ids[j].
std::vector<std::pair<size_t, size_t>> SpanningTreeEdges(
    const std::vector<std::string>& ids,
    const std::vector<std::vector<double>>& weights);

// Edge weight is 1 - similarity, so the tree links the most similar
// documents. Node metadata is taken from `nodes` when an id matches;
// otherwise the id doubles as label. Throws aksara::Error("empty-matrix").
ReuseTree MinimumSpanningTree(const SimilarityMatrix& matrix,
                              const std::vector<TreeNode>& nodes = {});

std::vector<TreeNode> NodesFromCorpus(const CorpusIndex& index);

// True iff the edges form a tree over exactly the listed nodes.
bool IsSpanningTree(const ReuseTree& tree);

enum class GraphFormat { kJson, kDot };

GraphFormat ParseGraphFormat(std::string_view name);  // "json" | "dot"

std::string ExportGraph(const ReuseTree& tree, GraphFormat format);

// Inverse of ExportGraph(tree, kJson).
ReuseTree ImportGraphJson(std::string_view text);

}  // namespace aksara

#endif  // AKSARA_GRAPH_H_
