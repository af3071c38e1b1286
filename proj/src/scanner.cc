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

#include "aksara/scanner.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <string>
#include <unordered_map>
#include <utility>

namespace aksara {
namespace {

struct Cluster {
  std::string canonical;
  Span span;
};

const icu::Normalizer2& Nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || nfc == nullptr) {
    throw std::runtime_error("ICU NFC normalizer unavailable");
  }
  return *nfc;
}

bool IsCombining(UChar32 c) {
  int8_t type = u_charType(c);
  return type == U_NON_SPACING_MARK || type == U_ENCLOSING_MARK ||
         type == U_COMBINING_SPACING_MARK;
}

// Splits the input into base + combining-mark clusters, each canonicalised
// independently so spans stay in original byte coordinates.
std::vector<Cluster> SplitClusters(std::string_view text) {
  std::vector<Cluster> clusters;
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const int32_t length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) {
      // Malformed byte sequence: keep it as its own opaque cluster.
      clusters.push_back({std::string(text.substr(start, i - start)),
                          {static_cast<size_t>(start), static_cast<size_t>(i)}});
      continue;
    }
    while (i < length) {
      int32_t next = i;
      UChar32 mark;
      U8_NEXT(bytes, next, length, mark);
      if (mark < 0 || !IsCombining(mark)) break;
      i = next;
    }
    std::string_view raw = text.substr(start, i - start);
    clusters.push_back({CanonicalForm(raw),
                        {static_cast<size_t>(start), static_cast<size_t>(i)}});
  }
  return clusters;
}

const std::unordered_map<std::string, GraphemeKind>& Alphabet() {
  static const auto* const alphabet = [] {
    auto* table = new std::unordered_map<std::string, GraphemeKind>();
    for (const char* v : {"a", "ā", "i", "ī", "u", "ū", "ṛ", "ṝ", "ḹ", "e",
                          "ē", "ai", "o", "ō", "au"}) {
      (*table)[CanonicalForm(v)] = GraphemeKind::kVowel;
    }
    // ḷ is read as the Dravidian consonant, never as the vocalic vowel.
    for (const char* c :
         {"k", "kh", "g", "gh", "ṅ", "c",  "ch", "j",  "jh", "ñ", "ṭ", "ṭh",
          "ḍ", "ḍh", "ṇ", "t",  "th", "d", "dh", "n",  "p",  "ph", "b", "bh",
          "m", "y",  "r", "l",  "v",  "ś", "ṣ",  "s",  "h",  "ḻ",  "ṟ", "ṉ",
          "ḷ"}) {
      (*table)[CanonicalForm(c)] = GraphemeKind::kConsonant;
    }
    for (const char* m : {"ṃ", "ṁ", "m̐"}) {
      (*table)[CanonicalForm(m)] = GraphemeKind::kAnusvara;
    }
    (*table)[CanonicalForm("ḥ")] = GraphemeKind::kVisarga;
    (*table)["'"] = GraphemeKind::kAvagraha;
    return table;
  }();
  return *alphabet;
}

std::optional<GraphemeKind> Lookup(const std::string& key) {
  const auto& alphabet = Alphabet();
  auto it = alphabet.find(key);
  if (it == alphabet.end()) return std::nullopt;
  return it->second;
}


}  // namespace

const char* GraphemeKindName(GraphemeKind kind) {
  switch (kind) {
    case GraphemeKind::kVowel:
      return "vowel";
    case GraphemeKind::kConsonant:
      return "consonant";
    case GraphemeKind::kAnusvara:
      return "anusvara";
    case GraphemeKind::kVisarga:
      return "visarga";
    case GraphemeKind::kAvagraha:
      return "avagraha";
    case GraphemeKind::kOther:
      return "other";
  }
  return "other";
}

std::string CanonicalForm(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  s = Nfc().normalize(s, status);
  s.toLower(icu::Locale::getRoot());
  s = Nfc().normalize(s, status);
  if (U_FAILURE(status)) return std::string(text);
  std::string out;
  s.toUTF8String(out);
  return out;
}

std::string Aksara::Surface() const {
  std::string out;
  if (prefix) out += prefix->surface;
  for (const Grapheme& g : onset) out += g.surface;
  if (nucleus) out += nucleus->surface;
  if (coda) out += coda->surface;
  return out;
}

std::vector<Grapheme> Aksara::Graphemes() const {
  std::vector<Grapheme> out;
  if (prefix) out.push_back(*prefix);
  out.insert(out.end(), onset.begin(), onset.end());
  if (nucleus) out.push_back(*nucleus);
  if (coda) out.push_back(*coda);
  return out;
}

std::vector<Grapheme> ScanGraphemes(std::string_view text) {
  const std::vector<Cluster> clusters = SplitClusters(text);
  std::vector<Grapheme> out;
  out.reserve(clusters.size());
  size_t i = 0;
  while (i < clusters.size()) {
    // Digraphs (kh, ai, ṭh, ...) span two clusters; prefer them.
    if (i + 1 < clusters.size()) {
      std::string pair = clusters[i].canonical + clusters[i + 1].canonical;
      if (auto kind = Lookup(pair)) {
        out.push_back({*kind, std::move(pair),
                       {clusters[i].span.begin, clusters[i + 1].span.end}});
        i += 2;
        continue;
      }
    }
    if (auto kind = Lookup(clusters[i].canonical)) {
      out.push_back({*kind, clusters[i].canonical, clusters[i].span});
    } else {
      const Span span = clusters[i].span;
      out.push_back({GraphemeKind::kOther,
                     std::string(text.substr(span.begin, span.size())), span});
    }
    ++i;
  }
  return out;
}

TokenStream TokenizeAksaras(std::string_view text, std::string document_id) {
  TokenStream stream;
  stream.document_id = std::move(document_id);
  stream.source_length = text.size();

  Aksara current;
  bool open = false;  // `current` holds at least one grapheme
  auto extend = [&](const Grapheme& g) {
    if (!open) current.span = g.span;
    current.span.end = g.span.end;
    open = true;
  };
  auto flush = [&] {
    if (open) stream.aksaras.push_back(std::move(current));
    current = Aksara();
    open = false;
  };

  for (const Grapheme& g : ScanGraphemes(text)) {
    switch (g.kind) {
      case GraphemeKind::kOther:
        break;
      case GraphemeKind::kVowel:
        if (current.nucleus) flush();
        extend(g);
        current.nucleus = g;
        break;
      case GraphemeKind::kConsonant:
        if (current.nucleus) flush();
        extend(g);
        current.onset.push_back(g);
        break;
      case GraphemeKind::kAvagraha:
        if (current.nucleus) flush();
        if (!open) {
          extend(g);
          current.prefix = g;
        } else {
          extend(g);
          current.onset.push_back(g);
        }
        break;
      case GraphemeKind::kAnusvara:
      case GraphemeKind::kVisarga:
        if (current.nucleus && !current.coda) {
          extend(g);
          current.coda = g;
        } else {
          // A mark with no vowel to close: carry it into the next onset.
          if (current.nucleus) flush();
          extend(g);
          current.onset.push_back(g);
        }
        break;
    }
  }
  flush();
  return stream;
}

std::vector<Grapheme> TokenizeCharacters(std::string_view text) {
  std::vector<Grapheme> out;
  for (Grapheme& g : ScanGraphemes(text)) {
    if (g.kind != GraphemeKind::kOther) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Grapheme> CharactersOf(const TokenStream& stream) {
  std::vector<Grapheme> out;
  for (const Aksara& a : stream.aksaras) {
    for (Grapheme& g : a.Graphemes()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace aksara
