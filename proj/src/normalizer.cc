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

#include "aksara/normalizer.h"

#include <set>
#include <utility>

#include "aksara/error.h"

namespace aksara {
namespace {

constexpr std::array<Rule, kRuleCount> kPipeline = {
    Rule::kStripAvagraha,       Rule::kDegeminate,
    Rule::kNasalToAnusvara,     Rule::kFoldDravidianVowels,
    Rule::kFoldAnusvaraVariants, Rule::kMergeBV,
};

// Unaspirated stop -> its aspirated partner. A geminate is an unaspirated
// stop followed by itself or by its aspirate.
const std::pair<const char*, const char*> kStops[] = {
    {"k", "kh"}, {"g", "gh"}, {"c", "ch"}, {"j", "jh"}, {"ṭ", "ṭh"},
    {"ḍ", "ḍh"}, {"t", "th"}, {"d", "dh"}, {"p", "ph"}, {"b", "bh"},
};

bool IsGeminate(const Grapheme& first, const Grapheme& second) {
  if (first.kind != GraphemeKind::kConsonant ||
      second.kind != GraphemeKind::kConsonant) {
    return false;
  }
  for (const auto& [plain, aspirate] : kStops) {
    if (first.surface == plain &&
        (second.surface == plain || second.surface == aspirate)) {
      return true;
    }
  }
  return false;
}

bool IsNasal(const Grapheme& g) {
  static const std::set<std::string> kNasals = {"n", "ṇ", "ṅ", "ñ", "m"};
  return g.kind == GraphemeKind::kConsonant && kNasals.contains(g.surface);
}

// Consonants before which a nasal is read as closing the previous syllable.
bool TakesAnusvara(const Grapheme& nasal, const Grapheme& next) {
  if (next.kind != GraphemeKind::kConsonant) return false;
  static const std::set<std::string> kObstruents = {
      "k", "kh", "g", "gh", "c", "ch", "j", "jh", "ṭ", "ṭh", "ḍ", "ḍh",
      "t", "th", "d", "dh", "p", "ph", "b", "bh", "ś", "ṣ", "s", "h"};
  if (kObstruents.contains(next.surface)) return true;
  static const std::set<std::string> kSemivowels = {"y", "r", "l", "v"};
  return nasal.surface == "m" && kSemivowels.contains(next.surface);
}

void StripAvagraha(Aksara& a) {
  a.prefix.reset();
  std::erase_if(a.onset, [](const Grapheme& g) {
    return g.kind == GraphemeKind::kAvagraha;
  });
}

void Degeminate(Aksara& a) {
  size_t i = 0;
  while (i + 1 < a.onset.size()) {
    if (IsGeminate(a.onset[i], a.onset[i + 1])) {
      a.onset.erase(a.onset.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
}

void NasalToAnusvara(std::vector<Aksara>& aksaras) {
  for (size_t i = 1; i < aksaras.size(); ++i) {
    Aksara& prev = aksaras[i - 1];
    Aksara& cur = aksaras[i];
    if (prev.degenerate() || prev.coda || cur.prefix) continue;
    if (cur.onset.size() < 2) continue;
    if (!IsNasal(cur.onset[0]) || !TakesAnusvara(cur.onset[0], cur.onset[1])) {
      continue;
    }
    Grapheme nasal = std::move(cur.onset.front());
    cur.onset.erase(cur.onset.begin());
    nasal.kind = GraphemeKind::kAnusvara;
    nasal.surface = "ṃ";
    prev.coda = std::move(nasal);
  }
}

void FoldDravidianVowels(Aksara& a) {
  if (!a.nucleus) return;
  if (a.nucleus->surface == "ē") a.nucleus->surface = "e";
  if (a.nucleus->surface == "ō") a.nucleus->surface = "o";
}

void FoldAnusvaraVariants(Aksara& a) {
  auto fold = [](Grapheme& g) {
    if (g.kind == GraphemeKind::kAnusvara) g.surface = "ṃ";
  };
  if (a.coda) fold(*a.coda);
  for (Grapheme& g : a.onset) fold(g);
}

void MergeBV(Aksara& a) {
  for (Grapheme& g : a.onset) {
    if (g.kind == GraphemeKind::kConsonant && g.surface == "b") g.surface = "v";
  }
}

}  // namespace

const char* RuleName(Rule rule) {
  switch (rule) {
    case Rule::kStripAvagraha:
      return "strip-avagraha";
    case Rule::kDegeminate:
      return "degeminate";
    case Rule::kNasalToAnusvara:
      return "nasal-to-anusvara";
    case Rule::kFoldDravidianVowels:
      return "fold-dravidian-vowels";
    case Rule::kFoldAnusvaraVariants:
      return "fold-anusvara-variants";
    case Rule::kMergeBV:
      return "merge-b-v";
  }
  return "";
}

NormalizationProfile NormalizationProfile::Default() {
  NormalizationProfile p;
  for (Rule r : kPipeline) p.Set(r, r != Rule::kMergeBV);
  return p;
}

NormalizationProfile NormalizationProfile::Parse(std::string_view rules) {
  if (rules == "default") return Default();
  if (rules == "none") return None();
  NormalizationProfile p;
  size_t pos = 0;
  while (pos <= rules.size()) {
    size_t comma = rules.find(',', pos);
    if (comma == std::string_view::npos) comma = rules.size();
    std::string_view name = rules.substr(pos, comma - pos);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    if (!name.empty()) {
      bool found = false;
      for (Rule r : kPipeline) {
        if (name == RuleName(r)) {
          p.Set(r);
          found = true;
        }
      }
      if (!found) {
        throw Error("invalid-profile",
                    "unknown normalization rule: " + std::string(name));
      }
    }
    pos = comma + 1;
  }
  return p;
}

bool NormalizationProfile::empty() const {
  for (bool on : rules_) {
    if (on) return false;
  }
  return true;
}

std::string NormalizationProfile::ToString() const {
  std::string out;
  for (Rule r : kPipeline) {
    if (!enabled(r)) continue;
    if (!out.empty()) out += ',';
    out += RuleName(r);
  }
  return out;
}

TokenStream Normalize(const TokenStream& stream,
                      const NormalizationProfile& profile) {
  TokenStream out = stream;
  std::vector<Aksara>& aksaras = out.aksaras;
  for (Rule rule : kPipeline) {
    if (!profile.enabled(rule)) continue;
    switch (rule) {
      case Rule::kStripAvagraha:
        for (Aksara& a : aksaras) StripAvagraha(a);
        break;
      case Rule::kDegeminate:
        for (Aksara& a : aksaras) Degeminate(a);
        break;
      case Rule::kNasalToAnusvara:
        NasalToAnusvara(aksaras);
        break;
      case Rule::kFoldDravidianVowels:
        for (Aksara& a : aksaras) FoldDravidianVowels(a);
        break;
      case Rule::kFoldAnusvaraVariants:
        for (Aksara& a : aksaras) FoldAnusvaraVariants(a);
        break;
      case Rule::kMergeBV:
        for (Aksara& a : aksaras) MergeBV(a);
        break;
    }
  }
  // A lone avagraha leaves nothing behind once stripped.
  std::erase_if(aksaras, [](const Aksara& a) {
    return !a.prefix && a.onset.empty() && !a.nucleus && !a.coda;
  });
  return out;
}

}  // namespace aksara
