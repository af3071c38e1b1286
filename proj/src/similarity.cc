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

#include "aksara/similarity.h"

#include <algorithm>
#include <cstdio>
#include <iterator>
#include <thread>

#include "aksara/error.h"

namespace aksara {
namespace {

constexpr int kCombinedSizes[] = {2, 3, 4, 5};

size_t IntersectionSize(const std::set<std::string>& a,
                        const std::set<std::string>& b) {
  size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::string FormatCell(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

}  // namespace

const char* MetricName(Metric metric) {
  return metric == Metric::kJaccard ? "jaccard" : "dice";
}

Metric ParseMetric(std::string_view name) {
  if (name == "jaccard") return Metric::kJaccard;
  if (name == "dice") return Metric::kDice;
  throw Error("invalid-metric", "unknown metric: " + std::string(name));
}

double Overlap::Jaccard() const {
  const size_t u = union_size();
  return u == 0 ? 0.0 : static_cast<double>(shared) / static_cast<double>(u);
}

double Overlap::Dice() const {
  const size_t total = size_a + size_b;
  return total == 0 ? 0.0
                    : static_cast<double>(2 * shared) /
                          static_cast<double>(total);
}

double Overlap::Value(Metric metric) const {
  return metric == Metric::kJaccard ? Jaccard() : Dice();
}

Overlap CountOverlap(const ShingleSet& a, const ShingleSet& b) {
  if (a.params.Canonical() != b.params.Canonical() || a.profile != b.profile) {
    throw Error("param-mismatch",
                "cannot compare shingle sets built with different parameters (" +
                    BundleKey(a.params, a.profile) + " vs " +
                    BundleKey(b.params, b.profile) + ")");
  }
  return {IntersectionSize(a.keys, b.keys), a.keys.size(), b.keys.size()};
}

double Jaccard(const ShingleSet& a, const ShingleSet& b) {
  return CountOverlap(a, b).Jaccard();
}

double Dice(const ShingleSet& a, const ShingleSet& b) {
  return CountOverlap(a, b).Dice();
}

std::string MatrixParams::ToString() const {
  return BundleKey(shingles, profile) + "|metric=" + MetricName(metric) +
         "|combine=" + (combine == Combine::kMean ? "mean" : "single");
}

size_t SimilarityMatrix::IndexOf(const std::string& id) const {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) {
    throw Error("unknown-document", "unknown document id: " + id);
  }
  return static_cast<size_t>(std::distance(ids.begin(), it));
}

double SimilarityMatrix::at(const std::string& a, const std::string& b) const {
  return values[IndexOf(a)][IndexOf(b)];
}

SimilarityMatrix BuildMatrix(const std::vector<ShingleSet>& sets,
                             Metric metric) {
  SimilarityMatrix m;
  const size_t size = sets.size();
  m.params.metric = metric;
  if (!sets.empty()) {
    m.params.shingles = sets.front().params.Canonical();
    m.params.profile = sets.front().profile;
  }
  m.values.assign(size, std::vector<double>(size, 0.0));
  m.empty.assign(size, false);
  for (size_t i = 0; i < size; ++i) {
    m.ids.push_back(sets[i].document_id);
    m.empty[i] = sets[i].empty();
    m.values[i][i] = 1.0;
  }
  // Rows are independent; each worker writes only its own cells.
  auto fill_row = [&](size_t i) {
    for (size_t j = i + 1; j < size; ++j) {
      m.values[i][j] = CountOverlap(sets[i], sets[j]).Value(metric);
    }
  };
  const size_t workers =
      std::min<size_t>(std::max(1u, std::thread::hardware_concurrency()),
                       size / 16 + 1);
  if (workers <= 1) {
    for (size_t i = 0; i < size; ++i) fill_row(i);
  } else {
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (size_t i = w; i < size; i += workers) fill_row(i);
      });
    }
    for (std::thread& t : pool) t.join();
  }
  for (size_t i = 0; i < size; ++i) {
    for (size_t j = 0; j < i; ++j) m.values[i][j] = m.values[j][i];
  }
  return m;
}

SimilarityMatrix ComputeSimilarityMatrix(const CorpusIndex& index,
                                         const MatrixParams& params) {
  auto build = [&](const ShingleParams& shingles) {
    std::vector<ShingleSet> sets;
    for (const std::string& id : index.ids()) {
      sets.push_back(*index.GetShingles(id, shingles, params.profile));
    }
    return BuildMatrix(sets, params.metric);
  };

  if (params.combine == Combine::kSingle) {
    SimilarityMatrix m = build(params.shingles);
    m.params = params;
    m.params.shingles = params.shingles.Canonical();
    return m;
  }

  SimilarityMatrix mean;
  size_t included = 0;
  std::vector<bool> empty;
  for (int n : kCombinedSizes) {
    ShingleParams shingles = params.shingles;
    shingles.n = n;
    // Fuzzy windows need n >= 3; smaller sizes are left out of the mean.
    if (shingles.mode == ShingleMode::kFuzzy && n < 3) continue;
    SimilarityMatrix m = build(shingles);
    if (included == 0) {
      mean = std::move(m);
    } else {
      for (size_t i = 0; i < mean.size(); ++i) {
        mean.empty[i] = mean.empty[i] && m.empty[i];
        for (size_t j = 0; j < mean.size(); ++j) {
          mean.values[i][j] += m.values[i][j];
        }
      }
    }
    ++included;
  }
  for (size_t i = 0; i < mean.size(); ++i) {
    for (size_t j = 0; j < mean.size(); ++j) {
      mean.values[i][j] = i == j ? 1.0 : mean.values[i][j] / included;
    }
  }
  mean.params = params;
  mean.params.shingles = params.shingles.Canonical();
  return mean;
}

std::string MatrixToTsv(const SimilarityMatrix& matrix) {
  std::string out = "id";
  for (const std::string& id : matrix.ids) out += "\t" + id;
  out += '\n';
  for (size_t i = 0; i < matrix.size(); ++i) {
    out += matrix.ids[i];
    for (size_t j = 0; j < matrix.size(); ++j) {
      out += '\t';
      out += FormatCell(matrix.values[i][j]);
    }
    out += '\n';
  }
  for (size_t i = 0; i < matrix.size(); ++i) {
    if (matrix.empty[i]) out += "# empty-shingle-set\t" + matrix.ids[i] + "\n";
  }
  return out;
}

}  // namespace aksara
