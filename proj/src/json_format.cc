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

#include "aksara/json_format.h"

namespace aksara {

using nlohmann::json;

json ToJson(const Span& span) { return json::array({span.begin, span.end}); }

json ToJson(const DocumentRecord& record) {
  json j = {{"id", record.id},         {"title", record.title},
            {"language", record.language}, {"group", record.group},
            {"notes", record.notes},   {"path", record.path}};
  j["century"] = record.century ? json(*record.century) : json(nullptr);
  return j;
}

json ToJson(const MatrixParams& params) {
  return {{"n", params.shingles.n},
          {"mode", ModeName(params.shingles.mode)},
          {"k", params.shingles.k},
          {"unit", UnitName(params.shingles.unit)},
          {"profile", params.profile.ToString()},
          {"metric", MetricName(params.metric)},
          {"combine", params.combine == Combine::kMean ? "mean" : "single"}};
}

MatrixParams MatrixParamsFromJson(const json& j) {
  MatrixParams params;
  params.shingles.n = j.at("n").get<int>();
  params.shingles.mode = ParseMode(j.at("mode").get<std::string>());
  params.shingles.k = j.at("k").get<int>();
  params.shingles.unit = ParseUnit(j.at("unit").get<std::string>());
  params.profile =
      NormalizationProfile::Parse(j.at("profile").get<std::string>());
  params.metric = ParseMetric(j.at("metric").get<std::string>());
  params.combine = j.at("combine").get<std::string>() == "mean"
                       ? Combine::kMean
                       : Combine::kSingle;
  return params;
}

json ToJson(const SimilarityMatrix& matrix) {
  json empty = json::array();
  for (size_t i = 0; i < matrix.size(); ++i) {
    if (matrix.empty[i]) empty.push_back(matrix.ids[i]);
  }
  return {{"ids", matrix.ids},
          {"params", ToJson(matrix.params)},
          {"values", matrix.values},
          {"empty", empty}};
}

json ToJson(const ReuseTree& tree) {
  json nodes = json::array();
  for (const TreeNode& n : tree.nodes) {
    nodes.push_back({{"id", n.id},
                     {"label", n.label},
                     {"language", n.language},
                     {"group", n.group}});
  }
  json edges = json::array();
  for (const TreeEdge& e : tree.edges) {
    edges.push_back({{"a", e.a},
                     {"b", e.b},
                     {"weight", e.weight},
                     {"similarity", e.similarity}});
  }
  return {{"params", ToJson(tree.params)}, {"nodes", nodes}, {"edges", edges}};
}

ReuseTree TreeFromJson(const json& j) {
  ReuseTree tree;
  tree.params = MatrixParamsFromJson(j.at("params"));
  for (const json& n : j.at("nodes")) {
    tree.nodes.push_back({n.at("id").get<std::string>(),
                          n.at("label").get<std::string>(),
                          n.at("language").get<std::string>(),
                          n.at("group").get<std::string>()});
  }
  for (const json& e : j.at("edges")) {
    tree.edges.push_back({e.at("a").get<std::string>(),
                          e.at("b").get<std::string>(),
                          e.at("weight").get<double>(),
                          e.at("similarity").get<double>()});
  }
  return tree;
}

json ToJson(const ComparisonReport& report) {
  auto spans = [](const std::vector<Span>& list) {
    json out = json::array();
    for (const Span& s : list) out.push_back(ToJson(s));
    return out;
  };
  json matches = json::array();
  for (const MatchSpan& m : report.matches) {
    matches.push_back({{"key", m.key},
                       {"n", m.n},
                       {"spanA", ToJson(m.span_a)},
                       {"spanB", ToJson(m.span_b)},
                       {"segmentsA", spans(m.segments_a)},
                       {"segmentsB", spans(m.segments_b)}});
  }
  json counts = json::object();
  for (const auto& [n, count] : report.counts_by_n) {
    counts[std::to_string(n)] = count;
  }
  MatrixParams params{report.params, report.profile, Metric::kDice,
                      Combine::kSingle};
  json p = ToJson(params);
  p.erase("metric");
  p.erase("combine");
  return {{"docA", report.doc_a},
          {"docB", report.doc_b},
          {"params", p},
          {"sharedKeys", report.shared_keys},
          {"sizeA", report.overlap.size_a},
          {"sizeB", report.overlap.size_b},
          {"shared", report.overlap.shared},
          {"jaccard", report.overlap.Jaccard()},
          {"dice", report.overlap.Dice()},
          {"matches", matches},
          {"mergedA", spans(report.merged_a)},
          {"mergedB", spans(report.merged_b)},
          {"countsByN", counts}};
}

json DocumentToJson(const CorpusIndex::Document& document) {
  json aksaras = json::array();
  for (const Aksara& a : document.tokens.aksaras) {
    aksaras.push_back({{"surface", a.Surface()},
                       {"start", a.span.begin},
                       {"end", a.span.end},
                       {"degenerate", a.degenerate()}});
  }
  return {{"id", document.record.id},
          {"record", ToJson(document.record)},
          {"text", document.text},
          {"aksaras", aksaras}};
}

}  // namespace aksara
