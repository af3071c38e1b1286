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

#ifndef AKSARA_SCANNER_H_
#define AKSARA_SCANNER_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aksara {

// Half-open byte range [begin, end) into a source text.
struct Span {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  bool empty() const { return begin == end; }
  bool operator==(const Span&) const = default;
  auto operator<=>(const Span&) const = default;
};

enum class GraphemeKind {
  kVowel,
  kConsonant,
  kAnusvara,
  kVisarga,
  kAvagraha,
  kOther,
};

const char* GraphemeKindName(GraphemeKind kind);

// One IAST letter (possibly a digraph such as "kh" or "ai") or one
// unrecognised cluster. `surface` is the canonical (composed, lower-case)
// spelling; `span` points at the bytes of the original input.
struct Grapheme {
  GraphemeKind kind = GraphemeKind::kOther;
  std::string surface;
  Span span;

  bool operator==(const Grapheme&) const = default;
};

// A written syllable: avagraha? consonant* vowel (anusvara|visarga)?
//
// The onset may also hold marks that could not be placed anywhere else
// (a second coda, an avagraha inside a cluster) so that every letter of
// the input lands in exactly one akshara.
struct Aksara {
  std::optional<Grapheme> prefix;
  std::vector<Grapheme> onset;
  std::optional<Grapheme> nucleus;
  std::optional<Grapheme> coda;
  Span span;

  // True when the akshara has no vowel. Only the last akshara of a stream
  // can be degenerate.
  bool degenerate() const { return !nucleus.has_value(); }

  std::string Surface() const;

  // Constituent graphemes in written order.
  std::vector<Grapheme> Graphemes() const;

  bool operator==(const Aksara&) const = default;
};

struct TokenStream {
  std::string document_id;
  std::vector<Aksara> aksaras;
  size_t source_length = 0;

  bool operator==(const TokenStream&) const = default;
};

// Canonicalises one Unicode string the same way the scanner canonicalises
// each letter: NFC composition followed by lower-casing.
std::string CanonicalForm(std::string_view text);

// Longest-match scan of `text` against the IAST alphabet. Every code point
// of the input is covered by exactly one grapheme; anything outside the
// alphabet (spaces, punctuation, digits, dandas, invalid UTF-8) comes back
// as kind kOther.
std::vector<Grapheme> ScanGraphemes(std::string_view text);

// Splits `text` into aksharas. Separators are dropped and the text is read
// as one continuous stream, so consonants before a word break attach to
// the next vowel ("akṣaraḥ kartā" -> a kṣa raḥ ka rtā).
TokenStream TokenizeAksaras(std::string_view text,
                            std::string document_id = {});

// Character-level baseline: ScanGraphemes without the separators.
std::vector<Grapheme> TokenizeCharacters(std::string_view text);

// Flattens a (possibly normalised) stream back into its graphemes.
std::vector<Grapheme> CharactersOf(const TokenStream& stream);

}  // namespace aksara

#endif  // AKSARA_SCANNER_H_
