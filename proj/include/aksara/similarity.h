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

#ifndef AKSARA_SIMILARITY_H_
#define AKSARA_SIMILARITY_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "aksara/corpus.h"
#include "aksara/shingler.h"

namespace aksara {

enum class Metric { kJaccard, kDice };

const char* MetricName(Metric metric);
Metric ParseMetric(std::string_view name);  // throws "invalid-metric"

// How several gram sizes are folded into one value.
enum class Combine {
  kSingle,  // use params.n only
  kMean,    // arithmetic mean over n = 2, 3, 4, 5
};

// Integer counts behind both metrics. Values are exact until converted.
struct Overlap {
  size_t shared = 0;
  size_t size_a = 0;
  size_t size_b = 0;

  size_t union_size() const { return size_a + size_b - shared; }
  double Jaccard() const;
  double Dice() const;
  double Value(Metric metric) const;
};

// Throws aksara::Error("param-mismatch") if the sets were built with
// different parameters or normalisation profiles.
Overlap CountOverlap(const ShingleSet& a, const ShingleSet& b);

// |A∩B| / |A∪B|; 0 when both are empty.
double Jaccard(const ShingleSet& a, const ShingleSet& b);
// 2|A∩B| / (|A|+|B|); 0 when both are empty.
double Dice(const ShingleSet& a, const ShingleSet& b);

struct MatrixParams {
  ShingleParams shingles;
  NormalizationProfile profile;
  Metric metric = Metric::kDice;
  Combine combine = Combine::kSingle;

  std::string ToString() const;
  bool operator==(const MatrixParams&) const = default;
};

struct SimilarityMatrix {
  std::vector<std::string> ids;
  MatrixParams params;
  // values[i][j], symmetric, in [0, 1].
  std::vector<std::vector<double>> values;
  // True for documents whose shingle set was empty. They score 0 against
  // everything and 1 against themselves.
  std::vector<bool> empty;

  size_t size() const { return ids.size(); }
  size_t IndexOf(const std::string& id) const;  // throws unknown-document
  double at(const std::string& a, const std::string& b) const;
};

// Pairwise matrix over already-built shingle sets (all with equal params).
SimilarityMatrix BuildMatrix(const std::vector<ShingleSet>& sets,
                             Metric metric);

SimilarityMatrix ComputeSimilarityMatrix(const CorpusIndex& index,
                                         const MatrixParams& params);

// Header row and column of ids; cells with six fractional digits.
std::string MatrixToTsv(const SimilarityMatrix& matrix);

}  // namespace aksara

#endif  // AKSARA_SIMILARITY_H_
