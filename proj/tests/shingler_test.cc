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

#include "aksara/shingler.h"

#include "aksara/error.h"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_support.h"

namespace aksara {
namespace {

using Keys = std::set<std::string>;

TokenStream Raw(std::string_view text) { return TokenizeAksaras(text); }
TokenStream Norm(std::string_view text) {
  return Normalize(TokenizeAksaras(text), NormalizationProfile::Default());
}

std::vector<std::string> Units(const TokenStream& s) {
  std::vector<std::string> out;
  for (const Aksara& a : s.aksaras) out.push_back(a.Surface());
  return out;
}

TEST_CASE("contiguous: worked examples") {
  CHECK(ContiguousShingles(Raw("akṣaraḥ kartā"), 2).keys ==
        Keys{"akṣa", "kṣaraḥ", "raḥka", "kartā"});
  CHECK(ContiguousShingles(Raw("ihānukto 'pi buddho viśe"), 4).keys ==
        Keys{"ihānukto", "hānukto'pi", "nukto'pibu", "kto'pibuddho",
             "'pibuddhovi", "buddhoviśe"});
}

TEST_CASE("contiguous: 'a rose is a rose is a rose' with aksharas as words") {
  // a -> ka, rose -> ro, is -> sa
  const ShingleSet set = ContiguousShingles(Raw("ka ro sa ka ro sa ka ro"), 4);
  CHECK(set.keys == Keys{"karosaka", "rosakaro", "sakarosa"});
  size_t windows = 0;
  for (const auto& [key, occ] : set.occurrences) windows += occ.size();
  CHECK(windows == 5);
  CHECK(set.occurrences.at("karosaka") ==
        std::vector<std::vector<size_t>>{{0, 1, 2, 3}, {3, 4, 5, 6}});
}

TEST_CASE("contiguous: short streams") {
  CHECK(ContiguousShingles(Raw("kamala"), 3).keys == Keys{"kamala"});
  CHECK(ContiguousShingles(Raw("kama"), 3).empty());
  CHECK(ContiguousShingles(Raw(""), 1).empty());
  CHECK_THROWS_AS(ContiguousShingles(Raw("kama"), 0), Error);
}

TEST_CASE("fuzzy: saṃ pa ta matches saṃ pa tū") {
  const ShingleSet a = FuzzyShingles(Norm("śriye saṃpataye"), 3);
  const ShingleSet b = FuzzyShingles(Norm("śrī sanpattū"), 3);
  CHECK(a.keys.contains("saṃpat•"));
  CHECK(b.keys.contains("saṃpat•"));
  CHECK(a.occurrences.at("saṃpat•") == std::vector<std::vector<size_t>>{{2, 3, 4}});
}

TEST_CASE("fuzzy: masking never un-matches equal windows") {
  CHECK(FuzzyShingles(Raw("parame"), 3).keys == Keys{"param•"});
  const auto a = FuzzyShingles(Raw("yasya jyā parameśvarāce"), 3);
  const auto b = FuzzyShingles(Raw("amo parameśvara"), 3);
  CHECK(a.keys.contains("param•"));
  CHECK(b.keys.contains("param•"));
}

TEST_CASE("fuzzy: rameśvarā vs rameśvara") {
  const auto a = FuzzyShingles(Raw("yasya jyā parameśvarāce"), 4);
  const auto b = FuzzyShingles(Raw("amo parameśvara"), 4);
  CHECK(a.keys.contains("rameśv•r•"));
  CHECK(b.keys.contains("rameśv•r•"));
}

TEST_CASE("fuzzy: codas are kept, n < 3 rejected") {
  CHECK(FuzzyShingles(Raw("kaḥkaṃkiḥ"), 3).keys == Keys{"kaḥkaṃk•ḥ"});
  CHECK_THROWS_AS(FuzzyShingles(Raw("kaka"), 2), Error);
}

TEST_CASE("skip: satya/śauca streams share saśau") {
  const TokenStream hindi = Norm("satya, śauca, dayā, kṣāṃti, tyāga ādi");
  const TokenStream sanskrit = Norm("satyaṃ śaucaṃ dayā kṣāṃtiḥ tyāgaḥ");
  CHECK(Units(hindi) == std::vector<std::string>{"sa", "tya", "śau", "ca", "da",
                                                 "yā", "kṣāṃ", "ti", "tyā", "ga",
                                                 "ā", "di"});
  CHECK(Units(sanskrit) == std::vector<std::string>{"sa", "tyaṃ", "śau", "caṃ",
                                                    "da", "yā", "kṣāṃ", "tiḥ",
                                                    "tyā", "gaḥ"});
  const auto a = SkipShingles(hindi, 2, 1);
  const auto b = SkipShingles(sanskrit, 2, 1);
  CHECK(a.keys == testing::BruteForceSkipKeys(Units(hindi), 2, 1));
  CHECK(b.keys == testing::BruteForceSkipKeys(Units(sanskrit), 2, 1));
  CHECK(a.keys.contains("saśau"));
  CHECK(b.keys.contains("saśau"));
  CHECK_FALSE(ContiguousShingles(hindi, 2).keys.contains("saśau"));
}

TEST_CASE("skip: schematic [a, b, c]") {
  CHECK(SkipShingles(Raw("ka ga ja"), 2, 1).keys == Keys{"kaga", "kaja", "gaja"});
  CHECK_THROWS_AS(SkipShingles(Raw("ka ga ja"), 2, 0), Error);
  CHECK_THROWS_AS(SkipShingles(Raw("ka ga ja"), 1, 1), Error);
}

TEST_CASE("character shingles") {
  CHECK(CharacterShingles("akṣaraḥ kartā", 2).keys ==
        Keys{"ak", "kṣ", "ṣa", "ar", "ra", "aḥ", "ḥk", "ka", "rt", "tā"});
  CHECK(CharacterShingles("a", 2).empty());
  CHECK(CharacterShingles("akṣaraḥ kartā", 2).size() >=
        ContiguousShingles(Raw("akṣaraḥ kartā"), 2).size());
}

TEST_CASE("params validation") {
  CHECK_NOTHROW(ShingleParams{4, ShingleMode::kContiguous, 0, ShingleUnit::kAksara}.Validate());
  CHECK_THROWS_AS((ShingleParams{0, ShingleMode::kContiguous, 0, ShingleUnit::kAksara}.Validate()), Error);
  CHECK_THROWS_AS((ShingleParams{2, ShingleMode::kFuzzy, 0, ShingleUnit::kAksara}.Validate()), Error);
  CHECK_THROWS_AS((ShingleParams{2, ShingleMode::kSkip, 0, ShingleUnit::kAksara}.Validate()), Error);
  CHECK_THROWS_AS((ShingleParams{3, ShingleMode::kFuzzy, 0, ShingleUnit::kCharacter}.Validate()), Error);
  try {
    ShingleParams{0, ShingleMode::kContiguous, 0, ShingleUnit::kAksara}.Validate();
  } catch (const Error& e) {
    CHECK(e.code() == "invalid-n");
  }
  CHECK(ShingleParams{4, ShingleMode::kContiguous, 3, ShingleUnit::kAksara}.Canonical().k == 0);
  CHECK(ParseMode("skip") == ShingleMode::kSkip);
  CHECK_THROWS_AS(ParseMode("sliding"), Error);
}

TEST_CASE("Shingle dispatches and records params") {
  const TokenStream s = Norm("yasya jyā parameśvarāce");
  ShingleParams p{3, ShingleMode::kSkip, 2, ShingleUnit::kAksara};
  const ShingleSet set = Shingle(s, p, NormalizationProfile::Default());
  CHECK(set.params == p);
  CHECK(set.profile == NormalizationProfile::Default());
  CHECK(set.keys == SkipShingles(s, 3, 2).keys);
  ShingleParams chars{2, ShingleMode::kContiguous, 0, ShingleUnit::kCharacter};
  CHECK(Shingle(Raw("akṣaraḥ kartā"), chars).keys ==
        CharacterShingles("akṣaraḥ kartā", 2).keys);
}

// Independent masked window: vowels of positions >= 2 (0-based) replaced.
std::string MaskWindow(const TokenStream& s, size_t start, int n) {
  std::string key;
  for (int offset = 0; offset < n; ++offset) {
    const Aksara& a = s.aksaras[start + offset];
    if (offset < 2 || !a.nucleus) {
      key += a.Surface();
      continue;
    }
    std::string surface = a.Surface();
    const std::string vowel = a.nucleus->surface;
    std::string coda = a.coda ? a.coda->surface : "";
    surface.replace(surface.size() - coda.size() - vowel.size(), vowel.size(),
                    std::string(kMaskSymbol));
    key += surface;
  }
  return key;
}

TEST_CASE("property: occurrences, masking, skip oracle and determinism") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> size(3, 5);
  std::uniform_int_distribution<int> skip(1, 3);
  for (int i = 0; i < 1500; ++i) {
    const TokenStream s = Norm(testing::RandomWellFormed(rng, 12));
    const int n = size(rng);
    const int k = skip(rng);
    const auto units = Units(s);

    const ShingleSet contiguous = ContiguousShingles(s, n);
    const ShingleSet fuzzy = FuzzyShingles(s, n);
    const ShingleSet skipped = SkipShingles(s, n, k);

    size_t windows = units.size() >= static_cast<size_t>(n) ? units.size() - n + 1 : 0;
    REQUIRE(contiguous.size() <= windows);

    for (const auto& [key, occs] : contiguous.occurrences) {
      for (const auto& occ : occs) {
        REQUIRE(occ.size() == static_cast<size_t>(n));
        std::string rebuilt;
        for (size_t j = 0; j < occ.size(); ++j) {
          if (j > 0) REQUIRE(occ[j] == occ[j - 1] + 1);
          rebuilt += units[occ[j]];
        }
        REQUIRE(rebuilt == key);
      }
    }

    // Mask commutes with windowing.
    Keys masked;
    for (size_t start = 0; start < windows; ++start) {
      masked.insert(MaskWindow(s, start, n));
    }
    REQUIRE(fuzzy.keys == masked);

    REQUIRE(skipped.keys == testing::BruteForceSkipKeys(units, n, k));
    for (const auto& key : contiguous.keys) REQUIRE(skipped.keys.contains(key));
    for (const auto& [key, occs] : skipped.occurrences) {
      for (const auto& occ : occs) {
        std::string rebuilt;
        for (size_t j = 0; j < occ.size(); ++j) {
          if (j > 0) REQUIRE(occ[j] - occ[j - 1] <= static_cast<size_t>(k) + 1);
          rebuilt += units[occ[j]];
        }
        REQUIRE(rebuilt == key);
      }
    }

    REQUIRE(ContiguousShingles(s, n) == contiguous);
    REQUIRE(SkipShingles(s, n, k) == skipped);
  }
}

TEST_CASE("zero-skip gap rule reproduces contiguous windows") {
  std::mt19937 rng(29);
  for (int i = 0; i < 300; ++i) {
    const TokenStream s = Raw(testing::RandomWellFormed(rng, 10));
    CHECK(testing::BruteForceSkipKeys(Units(s), 3, 0) ==
          ContiguousShingles(s, 3).keys);
  }
}

}  // namespace
}  // namespace aksara
