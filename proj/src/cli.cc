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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "aksara/aligner.h"
#include "aksara/corpus.h"
#include "aksara/error.h"
#include "aksara/graph.h"
#include "aksara/json_format.h"
#include "aksara/server.h"
#include "aksara/similarity.h"

namespace aksara {
namespace {

namespace fs = std::filesystem;

struct ShingleFlags {
  int n = 4;
  std::string mode = "contiguous";
  int k = -1;  // unset
  std::string unit = "aksara";
  std::string normalize;
  bool no_normalize = false;

  void Register(CLI::App* cmd) {
    cmd->add_option("--n", n, "Gram size")->capture_default_str();
    cmd->add_option("--mode", mode, "contiguous | fuzzy | skip")
        ->capture_default_str();
    cmd->add_option("--k", k, "Maximum skip between chosen units (skip mode)");
    cmd->add_option("--unit", unit, "aksara | character")->capture_default_str();
    auto* rules = cmd->add_option(
        "--normalize", normalize,
        "Comma-separated rules (strip-avagraha, degeminate, "
        "nasal-to-anusvara, fold-dravidian-vowels, fold-anusvara-variants, "
        "merge-b-v), or default, or none; default: all but merge-b-v");
    cmd->add_flag("--no-normalize", no_normalize, "Disable normalization")
        ->excludes(rules);
  }

  ShingleParams Params() const {
    ShingleParams p;
    p.n = n;
    p.mode = ParseMode(mode);
    p.unit = ParseUnit(unit);
    p.k = k >= 0 ? k : (p.mode == ShingleMode::kSkip ? 1 : 0);
    p.Validate();
    return p.Canonical();
  }

  NormalizationProfile Profile() const {
    if (no_normalize) return NormalizationProfile::None();
    if (normalize.empty()) return NormalizationProfile::Default();
    return NormalizationProfile::Parse(normalize);
  }
};

struct CorpusFlags {
  std::string manifest;
  std::string cache_dir;

  void Register(CLI::App* cmd, bool with_cache = true) {
    cmd->add_option("--manifest", manifest,
                    "Corpus manifest (default: $AKSARA_CORPUS)");
    if (with_cache) {
      cmd->add_option("--cache-dir", cache_dir,
                      "Load precomputed shingle sets from this directory");
    }
  }

  CorpusIndex Load(std::ostream& err) const {
    std::string path = manifest;
    if (path.empty()) {
      if (const char* env = std::getenv("AKSARA_CORPUS")) path = env;
    }
    if (path.empty()) {
      throw Error("missing-param", "no manifest: pass --manifest or set AKSARA_CORPUS");
    }
    CorpusIndex index = CorpusIndex::Ingest(path);
    for (const IngestWarning& w : index.warnings()) {
      err << "warning: " << (w.id.empty() ? "(no id)" : w.id) << ": "
          << w.message << "\n";
    }
    if (!cache_dir.empty()) index.LoadCache(cache_dir);
    return index;
  }
};

std::string ReadInput(const std::string& text, const std::string& file,
                      std::istream& in) {
  if (!file.empty()) {
    std::ifstream f(file, std::ios::binary);
    if (!f) throw Error("unreadable-input", "cannot read " + file);
    std::ostringstream buffer;
    buffer << f.rdbuf();
    return buffer.str();
  }
  if (!text.empty()) return text;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int ExitCodeFor(const Error& e) {
  const std::string& code = e.code();
  if (code.starts_with("invalid-") || code == "missing-param") return kExitUsage;
  return kExitData;
}

MatrixParams MatrixFrom(const ShingleFlags& flags, const std::string& metric,
                        const std::string& combine) {
  MatrixParams params;
  params.shingles = flags.Params();
  params.profile = flags.Profile();
  params.metric = ParseMetric(metric);
  if (combine == "mean") {
    params.combine = Combine::kMean;
  } else if (!combine.empty() && combine != "single") {
    throw Error("invalid-combine", "--combine must be 'mean' or 'single'");
  }
  return params;
}

std::vector<int> ParsePrecompute(const std::string& text) {
  std::string list = text;
  if (list.starts_with("n=")) list = list.substr(2);
  std::vector<int> sizes;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      size_t used = 0;
      sizes.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error("invalid-n", "bad --precompute entry: " + item);
    }
  }
  return sizes;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err, std::istream& in) {
  CLI::App app("Text-reuse detection over n-aksara shingles", "aksara");
  app.require_subcommand(1);

  // tokenize
  std::string tok_text, tok_file, tok_unit = "aksara", tok_normalize;
  auto* tokenize = app.add_subcommand(
      "tokenize", "Print aksaras (or characters) as surface<TAB>start<TAB>end");
  tokenize->add_option("text", tok_text, "IAST text (default: --file or stdin)");
  tokenize->add_option("--file", tok_file, "Read the text from a file");
  tokenize->add_option("--unit", tok_unit, "aksara | character")
      ->capture_default_str();
  tokenize->add_option("--normalize", tok_normalize,
                       "Apply these normalization rules to the surfaces");

  // shingle
  std::string sh_text, sh_file;
  ShingleFlags sh_flags;
  auto* shingle =
      app.add_subcommand("shingle", "Print the sorted shingle set of a text");
  shingle->add_option("text", sh_text, "IAST text (default: --file or stdin)");
  shingle->add_option("--file", sh_file, "Read the text from a file");
  sh_flags.Register(shingle);

  // compare
  std::string cmp_a, cmp_b, cmp_format = "text";
  ShingleFlags cmp_flags;
  CorpusFlags cmp_corpus;
  auto* compare = app.add_subcommand(
      "compare", "Shared shingles of two documents with source spans");
  compare->add_option("--a", cmp_a, "First document id")->required();
  compare->add_option("--b", cmp_b, "Second document id")->required();
  compare->add_option("--format", cmp_format, "text | json | html")
      ->capture_default_str();
  cmp_flags.Register(compare);
  cmp_corpus.Register(compare);

  // matrix
  std::string mx_metric = "dice", mx_combine;
  ShingleFlags mx_flags;
  CorpusFlags mx_corpus;
  auto* matrix =
      app.add_subcommand("matrix", "Pairwise similarity matrix as TSV");
  matrix->add_option("--metric", mx_metric, "dice | jaccard")
      ->capture_default_str();
  matrix->add_option("--combine", mx_combine,
                     "'mean' averages the metric over n = 2..5");
  mx_flags.Register(matrix);
  mx_corpus.Register(matrix);

  // mst
  std::string mst_metric = "dice", mst_combine, mst_out, mst_format;
  ShingleFlags mst_flags;
  CorpusFlags mst_corpus;
  auto* mst = app.add_subcommand("mst", "Minimum spanning tree of the corpus");
  mst->add_option("--metric", mst_metric, "dice | jaccard")
      ->capture_default_str();
  mst->add_option("--combine", mst_combine,
                  "'mean' averages the metric over n = 2..5");
  mst->add_option("--out", mst_out,
                  "Output file; .json or .dot selects the format");
  mst->add_option("--format", mst_format, "json | dot (default json)");
  mst_flags.Register(mst);
  mst_corpus.Register(mst);

  // ingest
  std::string ing_precompute, ing_cache;
  ShingleFlags ing_flags;
  CorpusFlags ing_corpus;
  auto* ingest = app.add_subcommand(
      "ingest", "Load a corpus, report problems, optionally precompute shingles");
  ingest->add_option("--precompute", ing_precompute,
                     "Gram sizes to cache, e.g. n=2,3,4,5");
  ingest->add_option("--cache-dir", ing_cache,
                     "Cache directory (default: <manifest dir>/cache)");
  ing_flags.Register(ingest);
  ing_corpus.Register(ingest, /*with_cache=*/false);

  // serve
  int srv_port = 8080;
  std::string srv_host = "127.0.0.1", srv_assets;
  size_t srv_cache = 128;
  CorpusFlags srv_corpus;
  auto* serve = app.add_subcommand("serve", "Serve the read-only HTTP API");
  serve->add_option("--port", srv_port, "TCP port")->capture_default_str();
  serve->add_option("--host", srv_host, "Bind address")->capture_default_str();
  serve->add_option("--assets", srv_assets, "Explorer UI build directory");
  serve->add_option("--cache-size", srv_cache, "Cached responses kept")
      ->capture_default_str();
  srv_corpus.Register(serve);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (tokenize->parsed()) {
      const std::string text = ReadInput(tok_text, tok_file, in);
      const ShingleUnit unit = ParseUnit(tok_unit);
      TokenStream stream = TokenizeAksaras(text);
      if (!tok_normalize.empty()) {
        stream = Normalize(stream, NormalizationProfile::Parse(tok_normalize));
      }
      if (unit == ShingleUnit::kAksara) {
        for (const Aksara& a : stream.aksaras) {
          out << a.Surface() << '\t' << a.span.begin << '\t' << a.span.end
              << '\n';
        }
      } else {
        for (const Grapheme& g : CharactersOf(stream)) {
          out << g.surface << '\t' << g.span.begin << '\t' << g.span.end << '\n';
        }
      }
      return kExitOk;
    }

    if (shingle->parsed()) {
      const ShingleParams params = sh_flags.Params();
      const NormalizationProfile profile = sh_flags.Profile();
      const std::string text = ReadInput(sh_text, sh_file, in);
      const ShingleSet set =
          Shingle(Normalize(TokenizeAksaras(text), profile), params, profile);
      for (const std::string& key : set.keys) out << key << '\n';
      return kExitOk;
    }

    if (compare->parsed()) {
      const ShingleParams params = cmp_flags.Params();
      const NormalizationProfile profile = cmp_flags.Profile();
      if (cmp_format != "text" && cmp_format != "json" && cmp_format != "html") {
        throw Error("invalid-format", "--format must be text, json or html");
      }
      const CorpusIndex index = cmp_corpus.Load(err);
      const ComparisonReport report =
          Compare(index, cmp_a, cmp_b, params, profile);
      if (cmp_format == "json") {
        out << ToJson(report).dump(2, ' ', false,
                                   nlohmann::json::error_handler_t::replace)
            << '\n';
      } else if (cmp_format == "html") {
        out << ReportToHtml(report, index);
      } else {
        out << ReportToText(report);
      }
      return kExitOk;
    }

    if (matrix->parsed()) {
      const MatrixParams params = MatrixFrom(mx_flags, mx_metric, mx_combine);
      const CorpusIndex index = mx_corpus.Load(err);
      out << MatrixToTsv(ComputeSimilarityMatrix(index, params));
      return kExitOk;
    }

    if (mst->parsed()) {
      const MatrixParams params = MatrixFrom(mst_flags, mst_metric, mst_combine);
      GraphFormat format = GraphFormat::kJson;
      if (!mst_format.empty()) {
        format = ParseGraphFormat(mst_format);
      } else if (fs::path(mst_out).extension() == ".dot") {
        format = GraphFormat::kDot;
      }
      const CorpusIndex index = mst_corpus.Load(err);
      const ReuseTree tree = MinimumSpanningTree(
          ComputeSimilarityMatrix(index, params), NodesFromCorpus(index));
      const std::string exported = ExportGraph(tree, format);
      if (mst_out.empty()) {
        out << exported;
      } else {
        std::ofstream file(mst_out, std::ios::binary | std::ios::trunc);
        file << exported;
        if (!file) throw Error("io-error", "cannot write " + mst_out);
      }
      return kExitOk;
    }

    if (ingest->parsed()) {
      const CorpusIndex index = ing_corpus.Load(err);
      out << "documents\t" << index.size() << '\n';
      out << "warnings\t" << index.warnings().size() << '\n';
      if (!ing_precompute.empty()) {
        fs::path cache = ing_cache;
        if (cache.empty()) {
          std::string manifest = ing_corpus.manifest;
          if (manifest.empty()) manifest = std::getenv("AKSARA_CORPUS");
          cache = fs::path(manifest).parent_path() / "cache";
        }
        const NormalizationProfile profile = ing_flags.Profile();
        for (int n : ParsePrecompute(ing_precompute)) {
          ShingleParams params = ing_flags.Params();
          params.n = n;
          params.Validate();
          const fs::path bundle = index.SaveCache(cache, params, profile);
          out << "cached\t" << params.ToString() << '\t' << bundle.string()
              << '\n';
        }
      }
      return kExitOk;
    }

    if (serve->parsed()) {
      const CorpusIndex index = srv_corpus.Load(err);
      ServerOptions options;
      options.host = srv_host;
      options.port = srv_port;
      options.assets_dir = srv_assets;
      options.cache_capacity = srv_cache;
      Server server(index, options);
      const int port = server.Bind();
      if (port < 0) {
        err << "error: cannot bind " << srv_host << ":" << srv_port << "\n";
        return kExitData;
      }
      err << "serving " << index.size() << " documents on http://" << srv_host
          << ":" << port << "/\n";
      return server.ListenAfterBind() ? kExitOk : kExitData;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace aksara
