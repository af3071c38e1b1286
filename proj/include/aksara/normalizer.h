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

#ifndef AKSARA_NORMALIZER_H_
#define AKSARA_NORMALIZER_H_

#include <array>
#include <string>
#include <string_view>

#include "aksara/scanner.h"

namespace aksara {

// Orthographic rules, listed in the order they are applied.
enum class Rule {
  kStripAvagraha,
  kDegeminate,
  kNasalToAnusvara,
  kFoldDravidianVowels,
  kFoldAnusvaraVariants,
  kMergeBV,
};

inline constexpr size_t kRuleCount = 6;

const char* RuleName(Rule rule);

class NormalizationProfile {
 public:
  // All rules off.
  NormalizationProfile() = default;

  // Every rule except merge-b-v.
  static NormalizationProfile Default();
  static NormalizationProfile None() { return {}; }

  // Parses a comma-separated rule list ("degeminate,strip-avagraha"), or
  // one of the words "default" and "none".
  // Order in the input is irrelevant. Throws aksara::Error on unknown names.
  static NormalizationProfile Parse(std::string_view rules);

  bool enabled(Rule rule) const { return rules_[static_cast<size_t>(rule)]; }
  NormalizationProfile& Set(Rule rule, bool on = true) {
    rules_[static_cast<size_t>(rule)] = on;
    return *this;
  }
  bool empty() const;

  // Canonical comma-separated list in pipeline order; "" when empty.
  std::string ToString() const;

  bool operator==(const NormalizationProfile&) const = default;
  auto operator<=>(const NormalizationProfile&) const = default;

 private:
  std::array<bool, kRuleCount> rules_{};
};

// Returns a normalised copy of `stream`. Surfaces change, spans do not.
TokenStream Normalize(const TokenStream& stream,
                      const NormalizationProfile& profile);

}  // namespace aksara

#endif  // AKSARA_NORMALIZER_H_
