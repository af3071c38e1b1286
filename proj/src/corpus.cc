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

#include "aksara/corpus.h"

#include <algorithm>
#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "aksara/error.h"
#include "json.hpp"

namespace aksara {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

bool ReadFile(const fs::path& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return false;
  *out = buffer.str();
  return true;
}

void WriteFile(const fs::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << data;
  if (!out) throw Error("io-error", "cannot write " + path.string());
}

bool ValidId(const std::string& id) {
  if (id.empty() || id == "." || id == "..") return false;
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.';
    if (!ok) return false;
  }
  return true;
}

std::string StringField(const json& entry, const char* name) {
  auto it = entry.find(name);
  if (it == entry.end() || it->is_null()) return {};
  if (!it->is_string()) {
    throw Error("invalid-manifest", std::string("field '") + name +
                                        "' must be a string");
  }
  return it->get<std::string>();
}

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (true) {
    size_t next = s.find(sep, pos);
    parts.push_back(s.substr(pos, next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return parts;
}

ShingleParams ParseParams(const std::string& text) {
  ShingleParams params;
  for (const std::string& field : Split(text, ';')) {
    const size_t eq = field.find('=');
    if (eq == std::string::npos) continue;
    const std::string name = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (name == "n") params.n = std::stoi(value);
    if (name == "k") params.k = std::stoi(value);
    if (name == "mode") params.mode = ParseMode(value);
    if (name == "unit") params.unit = ParseUnit(value);
  }
  return params;
}

}  // namespace

std::string BundleKey(const ShingleParams& params,
                      const NormalizationProfile& profile) {
  return params.Canonical().ToString() + "|profile=" + profile.ToString();
}

std::string BundleHash(const ShingleParams& params,
                       const NormalizationProfile& profile) {
  // 64-bit FNV-1a.
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : BundleKey(params, profile)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, hash);
  return buf;
}

std::string SerializeShingles(const ShingleSet& set) {
  std::string out = "# " + set.document_id + " " +
                    BundleKey(set.params, set.profile) + "\n";
  for (const auto& [key, occurrences] : set.occurrences) {
    out += key;
    out += '\t';
    for (size_t o = 0; o < occurrences.size(); ++o) {
      if (o > 0) out += ' ';
      for (size_t i = 0; i < occurrences[o].size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(occurrences[o][i]);
      }
    }
    out += '\n';
  }
  return out;
}

ShingleSet DeserializeShingles(const std::string& text,
                               const std::string& document_id,
                               const ShingleParams& params,
                               const NormalizationProfile& profile) {
  ShingleSet set;
  set.document_id = document_id;
  set.params = params.Canonical();
  set.profile = profile;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error("corrupt-cache", "malformed shingle line: " + line);
    }
    const std::string key = line.substr(0, tab);
    for (const std::string& occurrence : Split(line.substr(tab + 1), ' ')) {
      std::vector<size_t> positions;
      for (const std::string& p : Split(occurrence, ',')) {
        size_t value = 0;
        auto [end, ec] = std::from_chars(p.data(), p.data() + p.size(), value);
        if (ec != std::errc() || end != p.data() + p.size() || p.empty()) {
          throw Error("corrupt-cache", "malformed position in line: " + line);
        }
        positions.push_back(value);
      }
      set.Add(key, std::move(positions));
    }
  }
  return set;
}

CorpusIndex::CorpusIndex() : cache_(std::make_unique<Cache>()) {}
CorpusIndex::~CorpusIndex() = default;
CorpusIndex::CorpusIndex(CorpusIndex&&) noexcept = default;
CorpusIndex& CorpusIndex::operator=(CorpusIndex&&) noexcept = default;

void CorpusIndex::Add(DocumentRecord record, std::string text) {
  if (record.group.empty()) record.group = record.language;
  TokenStream tokens = TokenizeAksaras(text, record.id);
  by_id_[record.id] = documents_.size();
  documents_.push_back({std::move(record), std::move(text), std::move(tokens)});
}

CorpusIndex CorpusIndex::Ingest(const fs::path& manifest) {
  std::string raw;
  if (!ReadFile(manifest, &raw)) {
    throw Error("unreadable-manifest",
                "cannot read manifest " + manifest.string());
  }
  json doc;
  try {
    doc = json::parse(raw);
  } catch (const json::parse_error& e) {
    throw Error("unreadable-manifest",
                "manifest " + manifest.string() + " is not valid JSON: " +
                    e.what());
  }
  if (!doc.is_object() || !doc.contains("documents") ||
      !doc["documents"].is_array()) {
    throw Error("unreadable-manifest",
                "manifest must be an object with a 'documents' array");
  }

  CorpusIndex index;
  const fs::path base = manifest.parent_path();
  size_t position = 0;
  for (const json& entry : doc["documents"]) {
    ++position;
    DocumentRecord record;
    try {
      if (!entry.is_object()) throw Error("invalid-manifest", "not an object");
      record.id = StringField(entry, "id");
      record.path = StringField(entry, "path");
      record.title = StringField(entry, "title");
      record.language = StringField(entry, "language");
      record.group = StringField(entry, "group");
      record.notes = StringField(entry, "notes");
      if (auto it = entry.find("century"); it != entry.end() && !it->is_null()) {
        if (!it->is_number_integer()) {
          throw Error("invalid-manifest", "field 'century' must be an integer");
        }
        record.century = it->get<int>();
      }
    } catch (const std::exception& e) {
      index.warnings_.push_back(
          {record.id, "entry " + std::to_string(position) + ": " + e.what()});
      continue;
    }
    if (!ValidId(record.id)) {
      index.warnings_.push_back(
          {record.id, "entry " + std::to_string(position) +
                          ": id must be non-empty [A-Za-z0-9._-]"});
      continue;
    }
    if (index.by_id_.contains(record.id)) {
      index.warnings_.push_back({record.id, "duplicate id; entry skipped"});
      continue;
    }
    if (record.path.empty()) {
      index.warnings_.push_back({record.id, "missing path"});
      continue;
    }
    fs::path path = record.path;
    if (path.is_relative()) path = base / path;
    std::string text;
    if (!ReadFile(path, &text)) {
      index.warnings_.push_back(
          {record.id, "cannot read " + path.string() + "; record excluded"});
      continue;
    }
    index.Add(std::move(record), std::move(text));
  }
  return index;
}

CorpusIndex CorpusIndex::FromTexts(
    std::vector<std::pair<DocumentRecord, std::string>> documents) {
  CorpusIndex index;
  for (auto& [record, text] : documents) {
    if (!ValidId(record.id)) {
      throw Error("invalid-manifest", "invalid document id: " + record.id);
    }
    if (index.by_id_.contains(record.id)) {
      throw Error("invalid-manifest", "duplicate document id: " + record.id);
    }
    index.Add(std::move(record), std::move(text));
  }
  return index;
}

std::vector<std::string> CorpusIndex::ids() const {
  std::vector<std::string> out;
  out.reserve(documents_.size());
  for (const Document& d : documents_) out.push_back(d.record.id);
  return out;
}

bool CorpusIndex::Contains(const std::string& id) const {
  return by_id_.contains(id);
}

const CorpusIndex::Document& CorpusIndex::Get(const std::string& id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) {
    throw Error("unknown-document", "unknown document id: " + id);
  }
  return documents_[it->second];
}

TokenStream CorpusIndex::Normalized(const std::string& id,
                                    const NormalizationProfile& profile) const {
  return Normalize(Get(id).tokens, profile);
}

std::shared_ptr<const ShingleSet> CorpusIndex::GetShingles(
    const std::string& id, const ShingleParams& params,
    const NormalizationProfile& profile) const {
  const Document& doc = Get(id);
  params.Validate();
  CacheKey key{id, params.Canonical(), profile};
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (auto it = cache_->sets.find(key); it != cache_->sets.end()) {
      return it->second;
    }
  }
  auto set = std::make_shared<const ShingleSet>(
      Shingle(Normalize(doc.tokens, profile), params, profile));
  std::lock_guard<std::mutex> lock(cache_->mu);
  // Another thread may have filled the slot meanwhile; both values are equal.
  auto [it, inserted] = cache_->sets.emplace(std::move(key), set);
  return it->second;
}

bool CorpusIndex::IsCached(const std::string& id, const ShingleParams& params,
                           const NormalizationProfile& profile) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->sets.contains({id, params.Canonical(), profile});
}

fs::path CorpusIndex::SaveCache(const fs::path& dir,
                                const ShingleParams& params,
                                const NormalizationProfile& profile) const {
  const fs::path bundle = dir / BundleHash(params, profile);
  std::error_code ec;
  fs::create_directories(bundle, ec);
  if (ec) throw Error("io-error", "cannot create " + bundle.string());
  WriteFile(bundle / "bundle.txt",
            "params=" + params.Canonical().ToString() +
                "\nprofile=" + profile.ToString() + "\n");
  for (const Document& doc : documents_) {
    auto set = GetShingles(doc.record.id, params, profile);
    WriteFile(bundle / (doc.record.id + ".shingles"), SerializeShingles(*set));
  }
  return bundle;
}

size_t CorpusIndex::LoadCache(const fs::path& dir) {
  size_t loaded = 0;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return 0;
  std::vector<fs::path> bundles;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_directory()) bundles.push_back(entry.path());
  }
  std::sort(bundles.begin(), bundles.end());
  for (const fs::path& bundle : bundles) {
    std::string description;
    if (!ReadFile(bundle / "bundle.txt", &description)) continue;
    ShingleParams params;
    NormalizationProfile profile;
    for (const std::string& line : Split(description, '\n')) {
      if (line.starts_with("params=")) params = ParseParams(line.substr(7));
      if (line.starts_with("profile=")) {
        profile = NormalizationProfile::Parse(line.substr(8));
      }
    }
    params.Validate();
    for (const Document& doc : documents_) {
      std::string text;
      if (!ReadFile(bundle / (doc.record.id + ".shingles"), &text)) continue;
      auto set = std::make_shared<const ShingleSet>(
          DeserializeShingles(text, doc.record.id, params, profile));
      std::lock_guard<std::mutex> lock(cache_->mu);
      cache_->sets[{doc.record.id, params.Canonical(), profile}] = set;
      ++loaded;
    }
  }
  return loaded;
}

}  // namespace aksara
