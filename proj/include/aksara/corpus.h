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

#ifndef AKSARA_CORPUS_H_
#define AKSARA_CORPUS_H_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "aksara/normalizer.h"
#include "aksara/scanner.h"
#include "aksara/shingler.h"

namespace aksara {

// One witness. Every manuscript or edition is its own record, even when
// several carry "the same" text.
struct DocumentRecord {
  std::string id;
  std::string path;
  std::string title;
  std::string language;
  // Display grouping for the explorer; defaults to `language`.
  std::string group;
  std::optional<int> century;
  std::string notes;

  bool operator==(const DocumentRecord&) const = default;
};

struct IngestWarning {
  std::string id;  // empty when the entry had no usable id
  std::string message;
};

// Stable identifier of a (params, profile) bundle, used for cache paths.
std::string BundleKey(const ShingleParams& params,
                      const NormalizationProfile& profile);
std::string BundleHash(const ShingleParams& params,
                       const NormalizationProfile& profile);

// Token streams for a document collection plus a shingle cache keyed by
// (document, params, profile). Records and streams never change after
// construction; the cache is guarded and safe for concurrent readers.
class CorpusIndex {
 public:
  struct Document {
    DocumentRecord record;
    std::string text;
    TokenStream tokens;
  };

  CorpusIndex();
  ~CorpusIndex();
  CorpusIndex(CorpusIndex&&) noexcept;
  CorpusIndex& operator=(CorpusIndex&&) noexcept;

  // Reads a JSON manifest. Paths are resolved relative to the manifest's
  // directory. Entries that cannot be loaded are skipped and reported in
  // warnings(). Throws aksara::Error("unreadable-manifest") if the
  // manifest itself cannot be read or parsed.
  static CorpusIndex Ingest(const std::filesystem::path& manifest);

  // Builds an index from in-memory texts (record.path is ignored).
  static CorpusIndex FromTexts(
      std::vector<std::pair<DocumentRecord, std::string>> documents);

  const std::vector<Document>& documents() const { return documents_; }
  const std::vector<IngestWarning>& warnings() const { return warnings_; }
  std::vector<std::string> ids() const;
  size_t size() const { return documents_.size(); }

  bool Contains(const std::string& id) const;
  // Throws aksara::Error("unknown-document").
  const Document& Get(const std::string& id) const;

  TokenStream Normalized(const std::string& id,
                         const NormalizationProfile& profile) const;

  std::shared_ptr<const ShingleSet> GetShingles(
      const std::string& id, const ShingleParams& params,
      const NormalizationProfile& profile) const;

  bool IsCached(const std::string& id, const ShingleParams& params,
                const NormalizationProfile& profile) const;

  // Writes <dir>/<bundle-hash>/<id>.shingles for every document, plus a
  // bundle.txt describing the parameters. Returns the bundle directory.
  std::filesystem::path SaveCache(const std::filesystem::path& dir,
                                  const ShingleParams& params,
                                  const NormalizationProfile& profile) const;

  // Loads every bundle found under `dir` into the in-memory cache.
  // Returns the number of shingle sets loaded.
  size_t LoadCache(const std::filesystem::path& dir);

 private:
  using CacheKey = std::tuple<std::string, ShingleParams, NormalizationProfile>;
  struct Cache {
    mutable std::mutex mu;
    std::map<CacheKey, std::shared_ptr<const ShingleSet>> sets;
  };

  void Add(DocumentRecord record, std::string text);

  std::vector<Document> documents_;
  std::map<std::string, size_t> by_id_;
  std::vector<IngestWarning> warnings_;
  std::unique_ptr<Cache> cache_;
};

// Text format of one cached shingle set: a header line, then one line per
// key in sorted order: key TAB occurrence (SPACE occurrence)*, each
// occurrence being comma-separated positions.
std::string SerializeShingles(const ShingleSet& set);
ShingleSet DeserializeShingles(const std::string& text,
                               const std::string& document_id,
                               const ShingleParams& params,
                               const NormalizationProfile& profile);

}  // namespace aksara

#endif  // AKSARA_CORPUS_H_
