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

#include <functional>
#include <utility>

#include "aksara/error.h"

namespace aksara {
namespace {

// Number of leading positions in a fuzzy window that keep their vowel.
constexpr int kFuzzyKeptPositions = 2;

void CheckN(int n, int minimum) {
  if (n < minimum) {
    throw Error("invalid-n", "n must be at least " + std::to_string(minimum) +
                                 " (got " + std::to_string(n) + ")");
  }
}

// Calls `emit` for every strictly increasing index tuple of length n over
// [0, length) with neighbouring gaps of at most max_step.
void ForEachSelection(size_t length, int n, size_t max_step,
                      const std::function<void(const std::vector<size_t>&)>& emit) {
  if (n <= 0 || length < static_cast<size_t>(n)) return;
  std::vector<size_t> chosen;
  chosen.reserve(n);
  std::function<void()> extend = [&] {
    if (chosen.size() == static_cast<size_t>(n)) {
      emit(chosen);
      return;
    }
    const size_t remaining = n - chosen.size();
    size_t lo = chosen.empty() ? 0 : chosen.back() + 1;
    size_t hi = chosen.empty() ? length - 1 : chosen.back() + max_step;
    // Leave room for the positions still to be chosen.
    if (hi > length - remaining) hi = length - remaining;
    for (size_t i = lo; i <= hi && i < length; ++i) {
      chosen.push_back(i);
      extend();
      chosen.pop_back();
    }
  };
  extend();
}

}  // namespace

const char* ModeName(ShingleMode mode) {
  switch (mode) {
    case ShingleMode::kContiguous:
      return "contiguous";
    case ShingleMode::kFuzzy:
      return "fuzzy";
    case ShingleMode::kSkip:
      return "skip";
  }
  return "";
}

const char* UnitName(ShingleUnit unit) {
  return unit == ShingleUnit::kAksara ? "aksara" : "character";
}

ShingleMode ParseMode(std::string_view name) {
  if (name == "contiguous") return ShingleMode::kContiguous;
  if (name == "fuzzy") return ShingleMode::kFuzzy;
  if (name == "skip") return ShingleMode::kSkip;
  throw Error("invalid-mode", "unknown shingle mode: " + std::string(name));
}

ShingleUnit ParseUnit(std::string_view name) {
  if (name == "aksara") return ShingleUnit::kAksara;
  if (name == "character") return ShingleUnit::kCharacter;
  throw Error("invalid-unit", "unknown shingle unit: " + std::string(name));
}

void ShingleParams::Validate() const {
  CheckN(n, 1);
  if (k < 0) throw Error("invalid-k", "k must be non-negative");
  switch (mode) {
    case ShingleMode::kContiguous:
      break;
    case ShingleMode::kFuzzy:
      if (n < 3) {
        throw Error("invalid-n", "fuzzy mode needs n >= 3 (got " +
                                     std::to_string(n) + ")");
      }
      break;
    case ShingleMode::kSkip:
      CheckN(n, 2);
      if (k < 1) throw Error("invalid-k", "skip mode needs k >= 1");
      break;
  }
  if (unit == ShingleUnit::kCharacter && mode != ShingleMode::kContiguous) {
    throw Error("invalid-mode", "character unit supports contiguous mode only");
  }
}

ShingleParams ShingleParams::Canonical() const {
  ShingleParams out = *this;
  if (mode != ShingleMode::kSkip) out.k = 0;
  return out;
}

std::string ShingleParams::ToString() const {
  return "n=" + std::to_string(n) + ";mode=" + ModeName(mode) +
         ";k=" + std::to_string(k) + ";unit=" + UnitName(unit);
}

void ShingleSet::Add(std::string key, std::vector<size_t> positions) {
  keys.insert(key);
  occurrences[std::move(key)].push_back(std::move(positions));
}

std::string MaskedSurface(const Aksara& aksara) {
  std::string out;
  if (aksara.prefix) out += aksara.prefix->surface;
  for (const Grapheme& g : aksara.onset) out += g.surface;
  if (aksara.nucleus) out += kMaskSymbol;
  if (aksara.coda) out += aksara.coda->surface;
  return out;
}

ShingleSet ContiguousShingles(const TokenStream& stream, int n) {
  CheckN(n, 1);
  ShingleSet set;
  set.document_id = stream.document_id;
  set.params = {n, ShingleMode::kContiguous, 0, ShingleUnit::kAksara};
  const auto& a = stream.aksaras;
  const size_t width = static_cast<size_t>(n);
  for (size_t start = 0; start + width <= a.size(); ++start) {
    std::string key;
    std::vector<size_t> positions;
    for (size_t i = start; i < start + width; ++i) {
      key += a[i].Surface();
      positions.push_back(i);
    }
    set.Add(std::move(key), std::move(positions));
  }
  return set;
}

ShingleSet FuzzyShingles(const TokenStream& stream, int n) {
  ShingleParams params{n, ShingleMode::kFuzzy, 0, ShingleUnit::kAksara};
  params.Validate();
  ShingleSet set;
  set.document_id = stream.document_id;
  set.params = params;
  const auto& a = stream.aksaras;
  const size_t width = static_cast<size_t>(n);
  for (size_t start = 0; start + width <= a.size(); ++start) {
    std::string key;
    std::vector<size_t> positions;
    for (size_t offset = 0; offset < width; ++offset) {
      const Aksara& unit = a[start + offset];
      key += offset < kFuzzyKeptPositions ? unit.Surface() : MaskedSurface(unit);
      positions.push_back(start + offset);
    }
    set.Add(std::move(key), std::move(positions));
  }
  return set;
}

ShingleSet SkipShingles(const TokenStream& stream, int n, int k) {
  ShingleParams params{n, ShingleMode::kSkip, k, ShingleUnit::kAksara};
  params.Validate();
  ShingleSet set;
  set.document_id = stream.document_id;
  set.params = params;
  std::vector<std::string> surfaces;
  surfaces.reserve(stream.aksaras.size());
  for (const Aksara& a : stream.aksaras) surfaces.push_back(a.Surface());
  ForEachSelection(surfaces.size(), n, static_cast<size_t>(k) + 1,
                   [&](const std::vector<size_t>& chosen) {
                     std::string key;
                     for (size_t i : chosen) key += surfaces[i];
                     set.Add(std::move(key), chosen);
                   });
  return set;
}

ShingleSet CharacterShingles(const std::vector<Grapheme>& characters, int n) {
  CheckN(n, 1);
  ShingleSet set;
  set.params = {n, ShingleMode::kContiguous, 0, ShingleUnit::kCharacter};
  const size_t width = static_cast<size_t>(n);
  for (size_t start = 0; start + width <= characters.size(); ++start) {
    std::string key;
    std::vector<size_t> positions;
    for (size_t i = start; i < start + width; ++i) {
      key += characters[i].surface;
      positions.push_back(i);
    }
    set.Add(std::move(key), std::move(positions));
  }
  return set;
}

ShingleSet CharacterShingles(std::string_view text, int n) {
  return CharacterShingles(TokenizeCharacters(text), n);
}

ShingleSet Shingle(const TokenStream& stream, const ShingleParams& params,
                   const NormalizationProfile& profile) {
  params.Validate();
  ShingleSet set;
  if (params.unit == ShingleUnit::kCharacter) {
    set = CharacterShingles(CharactersOf(stream), params.n);
  } else {
    switch (params.mode) {
      case ShingleMode::kContiguous:
        set = ContiguousShingles(stream, params.n);
        break;
      case ShingleMode::kFuzzy:
        set = FuzzyShingles(stream, params.n);
        break;
      case ShingleMode::kSkip:
        set = SkipShingles(stream, params.n, params.k);
        break;
    }
  }
  set.document_id = stream.document_id;
  set.params = params.Canonical();
  set.profile = profile;
  return set;
}

}  // namespace aksara
