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

#ifndef AKSARA_ALIGNER_H_
#define AKSARA_ALIGNER_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "aksara/corpus.h"
#include "aksara/similarity.h"

namespace aksara {

// One occurrence pairing of a shared shingle.
struct MatchSpan {
  std::string key;
  int n = 0;
  // Enclosing byte range of the occurrence in each document.
  Span span_a;
  Span span_b;
  // Highlightable pieces. A single range for contiguous and fuzzy
  // shingles; one range per run of selected units for skip shingles.
  std::vector<Span> segments_a;
  std::vector<Span> segments_b;

  bool operator==(const MatchSpan&) const = default;
};

struct ComparisonReport {
  std::string doc_a;
  std::string doc_b;
  ShingleParams params;
  NormalizationProfile profile;
  std::vector<std::string> shared_keys;  // sorted
  Overlap overlap;
  std::vector<MatchSpan> matches;
  // Sorted, disjoint union of the match segments in each document.
  std::vector<Span> merged_a;
  std::vector<Span> merged_b;
  // Shared-key counts for n = 2..5 under the same mode, k and profile.
  // Sizes that are invalid for the mode are absent.
  std::map<int, size_t> counts_by_n;

  bool operator==(const ComparisonReport&) const = default;
};

// Key intersection. Throws aksara::Error("param-mismatch").
std::set<std::string> SharedShingles(const ShingleSet& a, const ShingleSet& b);

// Sorts and coalesces overlapping or touching ranges.
std::vector<Span> MergeSpans(std::vector<Span> spans);

// Byte ranges of the units (aksaras or characters) that shingle positions
// index into, for a normalised stream.
std::vector<Span> UnitSpans(const TokenStream& normalized, ShingleUnit unit);

// Throws aksara::Error("unknown-document") for ids not in the index.
ComparisonReport Compare(const CorpusIndex& index, const std::string& doc_a,
                         const std::string& doc_b, const ShingleParams& params,
                         const NormalizationProfile& profile);

// Tab-separated summary: metrics, per-n counts, then one line per match.
std::string ReportToText(const ComparisonReport& report);

// Static two-column page with <mark> highlights over the source texts.
std::string ReportToHtml(const ComparisonReport& report,
                         const CorpusIndex& index);

}  // namespace aksara

#endif  // AKSARA_ALIGNER_H_
