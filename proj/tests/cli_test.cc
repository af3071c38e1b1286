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

#include "aksara/cli.h"

#include <fstream>
#include <sstream>

#include "aksara/aligner.h"
#include "aksara/graph.h"
#include "aksara/json_format.h"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_support.h"

namespace aksara {
namespace {

namespace fs = std::filesystem;
using testing::TempDir;

const std::string kSampleManifest =
    (fs::path(AKSARA_SAMPLE_DIR) / "corpus.json").string();

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = RunCli(args, out, err, in);
  return {code, out.str(), err.str()};
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Two documents holding the truncated commentary phrases.
fs::path PhraseCorpus(const TempDir& dir) {
  dir.Write("a.txt", "ihānukto 'pi buddho viśe");
  dir.Write("b.txt", "atrānukto pi budho viśe");
  return dir.Write("corpus.json", R"({"documents": [
      {"id": "a", "path": "a.txt", "language": "Sanskrit"},
      {"id": "b", "path": "b.txt", "language": "Sanskrit"}]})");
}

TEST_CASE("tokenize") {
  const Run r = Cli({"tokenize", "akṣaraḥ kartā"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "a\t0\t1\nkṣa\t1\t6\nraḥ\t6\t11\nka\t12\t14\nrtā\t14\t18\n");
  const Run chars = Cli({"tokenize", "--unit", "character", "akṣaraḥ kartā"});
  CHECK(std::count(chars.out.begin(), chars.out.end(), '\n') == 12);
  CHECK(Cli({"tokenize"}, "kamala").out == "ka\t0\t2\nma\t2\t4\nla\t4\t6\n");
  CHECK(Cli({"tokenize", "--normalize", "default", "buddho"}).out ==
        "bu\t0\t2\ndho\t2\t6\n");
  CHECK(Cli({"tokenize", "--unit", "syllable", "ka"}).code == kExitUsage);
  CHECK(Cli({"tokenize", "--file", "/nonexistent/file.txt"}).code == kExitData);
}

TEST_CASE("shingle matches the library") {
  CHECK(Cli({"shingle", "--n", "2", "akṣaraḥ kartā"}).out ==
        "akṣa\nkartā\nkṣaraḥ\nraḥka\n");
  const std::string text = "śrī sanpattū";
  const auto profile = NormalizationProfile::Default();
  const ShingleSet set = Shingle(Normalize(TokenizeAksaras(text), profile),
                                 {3, ShingleMode::kFuzzy}, profile);
  std::string expected;
  for (const auto& k : set.keys) expected += k + "\n";
  CHECK(Cli({"shingle", "--n", "3", "--mode", "fuzzy", text}).out == expected);
  CHECK(Cli({"shingle", "--n", "2", "--mode", "skip", "--k", "1", "sa ka śau"}).out ==
        "kaśau\nsaka\nsaśau\n");
  CHECK(Cli({"shingle", "--n", "2", "--no-normalize", "buddho"}).out == "buddho\n");
  CHECK(Cli({"shingle", "--n", "2", "--normalize", "none", "buddho"}).out == "buddho\n");
  CHECK(Cli({"shingle", "--n", "2", "--normalize", "degeminate", "buddho"}).out ==
        "budho\n");
}

TEST_CASE("usage errors exit 1") {
  CHECK(Cli({"shingle", "--n", "0", "ka"}).code == kExitUsage);
  CHECK(Cli({"shingle", "--n", "2", "--mode", "fuzzy", "ka"}).code == kExitUsage);
  CHECK(Cli({"shingle", "--mode", "bogus", "ka"}).code == kExitUsage);
  CHECK(Cli({"shingle", "--normalize", "bogus", "ka"}).code == kExitUsage);
  CHECK(Cli({"shingle", "--n", "two", "ka"}).code == kExitUsage);
  CHECK(Cli({}).code == kExitUsage);
  CHECK(Cli({"frobnicate"}).code == kExitUsage);
  CHECK(Cli({"compare", "--manifest", kSampleManifest, "--a", "ihanukto"}).code ==
        kExitUsage);
  const Run r = Cli({"matrix", "--manifest", kSampleManifest, "--metric", "cosine"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("help exits 0 for every command") {
  for (const char* command :
       {"tokenize", "shingle", "compare", "matrix", "mst", "ingest", "serve"}) {
    const Run r = Cli({command, "--help"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("--") != std::string::npos);
  }
  CHECK(Cli({"--help"}).code == kExitOk);
}

TEST_CASE("compare on the commentary phrases") {
  TempDir dir;
  const std::string manifest = PhraseCorpus(dir).string();
  const Run r = Cli({"compare", "--manifest", manifest, "--a", "a", "--b", "b"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("jaccard\t0.500000\n") != std::string::npos);
  CHECK(r.out.find("dice\t0.666667\n") != std::string::npos);
  CHECK(r.out.find("shared\t4\n") != std::string::npos);

  const auto index = CorpusIndex::Ingest(manifest);
  const auto report = Compare(index, "a", "b", {4}, NormalizationProfile::Default());
  CHECK(r.out == ReportToText(report));
  const Run json = Cli({"compare", "--manifest", manifest, "--a", "a", "--b", "b",
                        "--format", "json"});
  CHECK(nlohmann::json::parse(json.out) == ToJson(report));
  const Run html = Cli({"compare", "--manifest", manifest, "--a", "a", "--b", "b",
                        "--format", "html"});
  CHECK(html.out == ReportToHtml(report, index));
  CHECK(Cli({"compare", "--manifest", manifest, "--a", "a", "--b", "b", "--format",
             "pdf"})
            .code == kExitUsage);
}

TEST_CASE("data errors exit 2") {
  TempDir dir;
  const std::string manifest = PhraseCorpus(dir).string();
  const Run unknown = Cli({"compare", "--manifest", manifest, "--a", "a", "--b", "zz"});
  CHECK(unknown.code == kExitData);
  CHECK(unknown.err.find("zz") != std::string::npos);
  CHECK(Cli({"matrix", "--manifest", (dir.path() / "absent.json").string()}).code ==
        kExitData);
  dir.Write("bad.json", "{");
  CHECK(Cli({"ingest", "--manifest", (dir.path() / "bad.json").string()}).code ==
        kExitData);
}

TEST_CASE("matrix equals the library TSV") {
  for (const char* metric : {"dice", "jaccard"}) {
    MatrixParams params;
    params.profile = NormalizationProfile::Default();
    params.metric = ParseMetric(metric);
    params.shingles.n = 3;
    const auto index = CorpusIndex::Ingest(kSampleManifest);
    const Run r = Cli({"matrix", "--manifest", kSampleManifest, "--metric", metric,
                       "--n", "3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == MatrixToTsv(ComputeSimilarityMatrix(index, params)));
    params.combine = Combine::kMean;
    CHECK(Cli({"matrix", "--manifest", kSampleManifest, "--metric", metric,
               "--combine", "mean"})
              .out == MatrixToTsv(ComputeSimilarityMatrix(index, params)));
  }
}

TEST_CASE("mst outputs") {
  TempDir dir;
  dir.Write("one.txt", "kamala");
  const auto single = dir.Write(
      "one.json", R"({"documents": [{"id": "only", "path": "one.txt"}]})");
  const Run r = Cli({"mst", "--manifest", single.string()});
  CHECK(r.code == kExitOk);
  const ReuseTree tree = ImportGraphJson(r.out);
  CHECK(tree.nodes.size() == 1);
  CHECK(tree.edges.empty());

  const auto index = CorpusIndex::Ingest(kSampleManifest);
  MatrixParams params;
  params.profile = NormalizationProfile::Default();
  const ReuseTree expected = MinimumSpanningTree(
      ComputeSimilarityMatrix(index, params), NodesFromCorpus(index));
  const fs::path json_out = dir.path() / "tree.json";
  const fs::path dot_out = dir.path() / "tree.dot";
  CHECK(Cli({"mst", "--manifest", kSampleManifest, "--out", json_out.string()}).code ==
        kExitOk);
  CHECK(Slurp(json_out) == ExportGraph(expected, GraphFormat::kJson));
  CHECK(Cli({"mst", "--manifest", kSampleManifest, "--out", dot_out.string()}).code ==
        kExitOk);
  CHECK(Slurp(dot_out) == ExportGraph(expected, GraphFormat::kDot));
  CHECK(Cli({"mst", "--manifest", kSampleManifest, "--format", "dot"}).out ==
        ExportGraph(expected, GraphFormat::kDot));
}

TEST_CASE("ingest with precompute, then compare from the cache") {
  TempDir dir;
  const std::string manifest = PhraseCorpus(dir).string();
  const Run r = Cli({"ingest", "--manifest", manifest, "--precompute", "n=2,3,4,5"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.starts_with("documents\t2\nwarnings\t0\ncached\tn=2;"));
  size_t bundles = 0;
  for (const auto& entry : fs::directory_iterator(dir.path() / "cache")) {
    CHECK(fs::exists(entry.path() / "a.shingles"));
    ++bundles;
  }
  CHECK(bundles == 4);
  const Run cached = Cli({"compare", "--manifest", manifest, "--cache-dir",
                          (dir.path() / "cache").string(), "--a", "a", "--b", "b"});
  CHECK(cached.out == Cli({"compare", "--manifest", manifest, "--a", "a", "--b", "b"}).out);
  CHECK(Cli({"ingest", "--manifest", manifest, "--precompute", "n=2,x"}).code ==
        kExitUsage);
}

TEST_CASE("ingest reports warnings") {
  TempDir dir;
  dir.Write("a.txt", "kamala");
  const auto manifest = dir.Write(
      "m.json",
      R"({"documents": [{"id": "a", "path": "a.txt"}, {"id": "lost", "path": "lost.txt"}]})");
  const Run r = Cli({"ingest", "--manifest", manifest.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "documents\t1\nwarnings\t1\n");
  CHECK(r.err.find("warning: lost:") != std::string::npos);
}

}  // namespace
}  // namespace aksara
