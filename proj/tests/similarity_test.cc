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

#include <cmath>
#include <numeric>

#include "aksara/error.h"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_support.h"

namespace aksara {
namespace {

ShingleSet SetOf(std::string id, std::set<std::string> keys) {
  ShingleSet s;
  s.document_id = std::move(id);
  for (const auto& k : keys) s.Add(k, {0});
  return s;
}

ShingleSet Phrase(std::string_view text, int n = 4) {
  const auto profile = NormalizationProfile::Default();
  return Shingle(Normalize(TokenizeAksaras(text), profile),
                 {n, ShingleMode::kContiguous, 0, ShingleUnit::kAksara}, profile);
}

ShingleSet RandomSet(std::mt19937& rng, const std::string& id) {
  std::uniform_int_distribution<int> size(0, 12);
  std::uniform_int_distribution<int> key(0, 19);
  std::set<std::string> keys;
  for (int i = size(rng); i > 0; --i) keys.insert("k" + std::to_string(key(rng)));
  return SetOf(id, keys);
}

// Independent oracle: set algebra via the standard algorithms.
std::pair<double, double> OracleMetrics(const ShingleSet& a, const ShingleSet& b) {
  std::vector<std::string> both, either;
  std::set_intersection(a.keys.begin(), a.keys.end(), b.keys.begin(),
                        b.keys.end(), std::back_inserter(both));
  std::set_union(a.keys.begin(), a.keys.end(), b.keys.begin(), b.keys.end(),
                 std::back_inserter(either));
  if (either.empty()) return {0.0, 0.0};
  return {double(both.size()) / double(either.size()),
          2.0 * double(both.size()) / double(a.size() + b.size())};
}

TEST_CASE("jaccard/dice: the two commentary phrases") {
  const auto a = Phrase("ihānukto 'pi buddho viśe");
  const auto b = Phrase("atrānukto pi budho viśe");
  const Overlap o = CountOverlap(a, b);
  CHECK(o.shared == 4);
  CHECK(o.size_a == 6);
  CHECK(o.size_b == 6);
  CHECK(o.union_size() == 8);
  CHECK(Jaccard(a, b) == 0.5);
  CHECK(std::abs(Dice(a, b) - 2.0 / 3.0) < 1e-9);
}

TEST_CASE("jaccard/dice: trivial cases") {
  const auto a = SetOf("a", {"x", "y"});
  CHECK(Jaccard(a, a) == 1.0);
  CHECK(Dice(a, a) == 1.0);
  CHECK(Jaccard(a, SetOf("b", {"z"})) == 0.0);
  CHECK(Dice(a, SetOf("b", {"z"})) == 0.0);
  CHECK(Jaccard(SetOf("a", {}), SetOf("b", {})) == 0.0);
  CHECK(Dice(SetOf("a", {}), SetOf("b", {})) == 0.0);
}

TEST_CASE("jaccard/dice: parameter mismatch is an error") {
  CHECK_THROWS_AS(Jaccard(Phrase("kamalakara", 3), Phrase("kamalakara", 4)), Error);
  auto other_profile = Phrase("kamalakara", 3);
  other_profile.profile = NormalizationProfile::None();
  CHECK_THROWS_AS(Dice(Phrase("kamalakara", 3), other_profile), Error);
}

TEST_CASE("property: metric laws on 1,000 random pairs") {
  std::mt19937 rng(31);
  for (int i = 0; i < 1000; ++i) {
    const ShingleSet a = RandomSet(rng, "a");
    const ShingleSet b = RandomSet(rng, "b");
    const double j = Jaccard(a, b);
    const double d = Dice(a, b);
    const auto [oj, od] = OracleMetrics(a, b);
    REQUIRE(j == doctest::Approx(oj).epsilon(1e-15));
    REQUIRE(d == doctest::Approx(od).epsilon(1e-15));
    REQUIRE(0.0 <= j);
    REQUIRE(j <= d);
    REQUIRE(d <= 1.0);
    REQUIRE(j == Jaccard(b, a));
    REQUIRE(d == Dice(b, a));
    REQUIRE(std::abs(d - 2 * oj / (1 + oj)) < 1e-12);
    if (!a.empty()) {
      REQUIRE(Jaccard(a, a) == 1.0);
      REQUIRE(Dice(a, a) == 1.0);
    }
    // Adding a key of B to A never lowers either metric.
    if (!b.empty()) {
      ShingleSet grown = a;
      grown.Add(*b.keys.begin(), {0});
      REQUIRE(Jaccard(grown, b) >= j);
      REQUIRE(Dice(grown, b) >= d);
    }
  }
}

TEST_CASE("matrix: two documents") {
  auto m = BuildMatrix({SetOf("a", {"x", "y"}), SetOf("b", {"y", "z"})},
                       Metric::kJaccard);
  CHECK(m.ids == std::vector<std::string>{"a", "b"});
  CHECK(m.values[0][0] == 1.0);
  CHECK(m.values[0][1] == doctest::Approx(1.0 / 3.0));
  CHECK(m.values[1][0] == m.values[0][1]);
  CHECK(m.at("b", "a") == m.values[1][0]);
  CHECK_THROWS_AS(m.at("a", "c"), Error);
}

TEST_CASE("matrix: three schematic documents against brute force") {
  const std::vector<ShingleSet> sets = {SetOf("p", {"a", "b", "c"}),
                                        SetOf("q", {"b", "c", "d", "e"}),
                                        SetOf("r", {"e", "f"})};
  for (Metric metric : {Metric::kJaccard, Metric::kDice}) {
    const auto m = BuildMatrix(sets, metric);
    for (size_t i = 0; i < 3; ++i) {
      for (size_t j = 0; j < 3; ++j) {
        const auto [oj, od] = OracleMetrics(sets[i], sets[j]);
        const double expected = i == j ? 1.0 : (metric == Metric::kJaccard ? oj : od);
        CHECK(m.values[i][j] == expected);
      }
    }
  }
}

TEST_CASE("matrix: relabeling permutes rows and columns") {
  std::mt19937 rng(37);
  std::vector<ShingleSet> sets;
  for (int i = 0; i < 7; ++i) sets.push_back(RandomSet(rng, "d" + std::to_string(i)));
  const auto m = BuildMatrix(sets, Metric::kDice);
  std::vector<size_t> order(sets.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<ShingleSet> shuffled;
  for (size_t i : order) shuffled.push_back(sets[i]);
  const auto p = BuildMatrix(shuffled, Metric::kDice);
  for (size_t i = 0; i < order.size(); ++i) {
    for (size_t j = 0; j < order.size(); ++j) {
      CHECK(p.values[i][j] == m.values[order[i]][order[j]]);
    }
  }
}

TEST_CASE("matrix: empty documents are flagged, 0 to others, 1 to self") {
  const auto m = BuildMatrix({SetOf("a", {}), SetOf("b", {}), SetOf("c", {"x"})},
                             Metric::kDice);
  CHECK(m.empty == std::vector<bool>{true, true, false});
  CHECK(m.values[0][0] == 1.0);
  CHECK(m.values[0][1] == 0.0);
  CHECK(m.values[0][2] == 0.0);
  const std::string tsv = MatrixToTsv(m);
  CHECK(tsv.find("# empty-shingle-set\ta\n") != std::string::npos);
  CHECK(tsv.find("# empty-shingle-set\tc") == std::string::npos);
}

TEST_CASE("matrix: large corpus takes the parallel path and matches sequential") {
  std::mt19937 rng(41);
  std::vector<ShingleSet> sets;
  for (int i = 0; i < 80; ++i) sets.push_back(RandomSet(rng, "d" + std::to_string(i)));
  const auto m = BuildMatrix(sets, Metric::kJaccard);
  for (size_t i = 0; i < sets.size(); ++i) {
    for (size_t j = 0; j < sets.size(); ++j) {
      const double expected = i == j ? 1.0 : OracleMetrics(sets[i], sets[j]).first;
      REQUIRE(m.values[i][j] == expected);
    }
  }
}

CorpusIndex SmallCorpus() {
  return CorpusIndex::FromTexts({
      {{.id = "a"}, "ihānukto 'pi buddho viśeṣaṇena"},
      {{.id = "b"}, "atrānukto pi budho viśeṣeṇaiḥ"},
      {{.id = "c"}, "amo parameśvara"},
  });
}

TEST_CASE("matrix over a corpus, TSV format and mean combination") {
  const CorpusIndex index = SmallCorpus();
  MatrixParams params;
  params.profile = NormalizationProfile::Default();
  params.metric = Metric::kJaccard;
  const auto m = ComputeSimilarityMatrix(index, params);
  CHECK(m.ids == std::vector<std::string>{"a", "b", "c"});
  CHECK(m.values[0][1] == Jaccard(*index.GetShingles("a", params.shingles, params.profile),
                                  *index.GetShingles("b", params.shingles, params.profile)));
  const std::string tsv = MatrixToTsv(m);
  CHECK(tsv.starts_with("id\ta\tb\tc\na\t1.000000\t"));

  params.combine = Combine::kMean;
  const auto mean = ComputeSimilarityMatrix(index, params);
  double sum = 0.0;
  for (int n = 2; n <= 5; ++n) {
    MatrixParams single = params;
    single.combine = Combine::kSingle;
    single.shingles.n = n;
    sum += ComputeSimilarityMatrix(index, single).values[0][1];
  }
  CHECK(mean.values[0][1] == doctest::Approx(sum / 4));
  CHECK(mean.values[2][2] == 1.0);
}

}  // namespace
}  // namespace aksara
