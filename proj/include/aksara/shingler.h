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

#ifndef AKSARA_SHINGLER_H_
#define AKSARA_SHINGLER_H_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "aksara/normalizer.h"
#include "aksara/scanner.h"

namespace aksara {

enum class ShingleMode { kContiguous, kFuzzy, kSkip };
enum class ShingleUnit { kAksara, kCharacter };

const char* ModeName(ShingleMode mode);
const char* UnitName(ShingleUnit unit);
ShingleMode ParseMode(std::string_view name);  // throws "invalid-mode"
ShingleUnit ParseUnit(std::string_view name);  // throws "invalid-unit"

// Replaces the vowel of masked positions in fuzzy keys. Outside the IAST
// alphabet, so a masked key never equals a real surface.
inline constexpr std::string_view kMaskSymbol = "•";

struct ShingleParams {
  int n = 4;
  ShingleMode mode = ShingleMode::kContiguous;
  // Maximum number of units skipped between two chosen positions. Only
  // meaningful for kSkip.
  int k = 0;
  ShingleUnit unit = ShingleUnit::kAksara;

  // Throws aksara::Error ("invalid-n", "invalid-k", "invalid-mode") when
  // the combination is not allowed.
  void Validate() const;

  // Copy with k zeroed unless mode is kSkip, so equivalent bundles compare
  // equal.
  ShingleParams Canonical() const;

  // Stable textual form, e.g. "n=4;mode=skip;k=1;unit=aksara".
  std::string ToString() const;

  bool operator==(const ShingleParams&) const = default;
  auto operator<=>(const ShingleParams&) const = default;
};

struct ShingleSet {
  std::string document_id;
  ShingleParams params;
  NormalizationProfile profile;
  std::set<std::string> keys;
  // Every position tuple at which a key occurs, in stream order. Indices
  // address aksaras (or characters for the character unit).
  std::map<std::string, std::vector<std::vector<size_t>>> occurrences;

  size_t size() const { return keys.size(); }
  bool empty() const { return keys.empty(); }

  void Add(std::string key, std::vector<size_t> positions);

  bool operator==(const ShingleSet&) const = default;
};

// Surface of an akshara with its vowel replaced by kMaskSymbol.
std::string MaskedSurface(const Aksara& aksara);

ShingleSet ContiguousShingles(const TokenStream& stream, int n);

// Contiguous windows whose positions 3..n have their vowels masked.
ShingleSet FuzzyShingles(const TokenStream& stream, int n);

// k-skip-n-grams: every choice of n increasing positions where neighbours
// are at most k+1 apart.
ShingleSet SkipShingles(const TokenStream& stream, int n, int k);

ShingleSet CharacterShingles(const std::vector<Grapheme>& characters, int n);
ShingleSet CharacterShingles(std::string_view text, int n);

// Dispatches on params. The stream should already be normalised; the
// profile is only recorded on the result.
ShingleSet Shingle(const TokenStream& stream, const ShingleParams& params,
                   const NormalizationProfile& profile = {});

}  // namespace aksara

#endif  // AKSARA_SHINGLER_H_
