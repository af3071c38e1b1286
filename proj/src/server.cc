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

#include "aksara/server.h"

#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>
#include <optional>

#include "aksara/aligner.h"
#include "aksara/error.h"
#include "aksara/graph.h"
#include "aksara/json_format.h"
#include "aksara/similarity.h"
#include "httplib.h"

namespace aksara {
namespace {

using nlohmann::json;
using Query = std::multimap<std::string, std::string>;

constexpr char kFallbackPage[] =
    "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\">"
    "<title>aksara</title></head><body>\n"
    "<h1>aksara</h1>\n<p>The explorer UI is not installed. API endpoints:</p>\n"
    "<ul><li><a href=\"/api/corpus\">/api/corpus</a></li>"
    "<li>/api/document/{id}</li>"
    "<li><a href=\"/api/matrix?n=4\">/api/matrix</a></li>"
    "<li><a href=\"/api/mst?n=4\">/api/mst</a></li>"
    "<li>/api/compare?a=&amp;b=&amp;n=</li></ul>\n</body></html>\n";

std::string Dump(const json& j) {
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

ApiResponse ErrorResponse(int status, const std::string& code,
                          const std::string& message) {
  return {status, "application/json",
          Dump({{"status", status}, {"code", code}, {"message", message}})};
}

int StatusFor(const std::string& code) {
  if (code == "unknown-document") return 404;
  if (code.starts_with("invalid-") || code == "missing-param" ||
      code == "param-mismatch") {
    return 400;
  }
  return 500;
}

std::optional<std::string> Param(const Query& query, const std::string& name) {
  auto it = query.find(name);
  if (it == query.end()) return std::nullopt;
  return it->second;
}

int ParseInt(const std::string& text, const std::string& code) {
  int value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw Error(code, "expected an integer, got '" + text + "'");
  }
  return value;
}

MatrixParams ParseBundle(const Query& query) {
  MatrixParams params;
  params.shingles.n = 4;
  if (auto n = Param(query, "n")) params.shingles.n = ParseInt(*n, "invalid-n");
  if (auto mode = Param(query, "mode")) params.shingles.mode = ParseMode(*mode);
  if (auto unit = Param(query, "unit")) params.shingles.unit = ParseUnit(*unit);
  if (auto k = Param(query, "k")) {
    params.shingles.k = ParseInt(*k, "invalid-k");
  } else if (params.shingles.mode == ShingleMode::kSkip) {
    params.shingles.k = 1;
  }
  params.profile = NormalizationProfile::Default();
  if (auto normalize = Param(query, "normalize")) {
    params.profile = NormalizationProfile::Parse(*normalize);
  }
  if (auto metric = Param(query, "metric")) {
    params.metric = ParseMetric(*metric);
  }
  if (auto combine = Param(query, "combine")) {
    if (*combine == "mean") {
      params.combine = Combine::kMean;
    } else if (*combine != "single") {
      throw Error("invalid-combine", "combine must be 'single' or 'mean'");
    }
  }
  params.shingles.Validate();
  params.shingles = params.shingles.Canonical();
  return params;
}

std::string Required(const Query& query, const std::string& name) {
  auto value = Param(query, name);
  if (!value || value->empty()) {
    throw Error("missing-param", "query parameter '" + name + "' is required");
  }
  return *value;
}

}  // namespace

bool ResponseCache::Get(const std::string& key, std::string* body) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return false;
  order_.splice(order_.begin(), order_, it->second);
  *body = it->second->second;
  return true;
}

void ResponseCache::Put(const std::string& key, std::string body) {
  if (capacity_ == 0) return;
  std::lock_guard<std::mutex> lock(mu_);
  if (auto it = entries_.find(key); it != entries_.end()) {
    order_.splice(order_.begin(), order_, it->second);
    return;
  }
  order_.emplace_front(key, std::move(body));
  entries_[key] = order_.begin();
  while (entries_.size() > capacity_) {
    entries_.erase(order_.back().first);
    order_.pop_back();
  }
}

size_t ResponseCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

ApiService::ApiService(const CorpusIndex& index, size_t cache_capacity)
    : index_(index), cache_(cache_capacity) {}

ApiResponse ApiService::Handle(std::string_view path, const Query& query) {
  try {
    if (path == "/api/corpus") {
      json docs = json::array();
      for (const auto& d : index_.documents()) docs.push_back(ToJson(d.record));
      return {200, "application/json", Dump({{"documents", docs}})};
    }
    if (path.starts_with("/api/document/")) {
      const std::string id(path.substr(std::string_view("/api/document/").size()));
      return {200, "application/json", Dump(DocumentToJson(index_.Get(id)))};
    }

    std::string key;
    std::function<std::string()> compute;
    if (path == "/api/matrix" || path == "/api/mst") {
      const MatrixParams params = ParseBundle(query);
      key = std::string(path) + "|" + params.ToString();
      const bool tree = path == "/api/mst";
      compute = [this, params, tree] {
        SimilarityMatrix matrix = ComputeSimilarityMatrix(index_, params);
        if (!tree) return Dump(ToJson(matrix));
        return Dump(ToJson(MinimumSpanningTree(matrix, NodesFromCorpus(index_))));
      };
    } else if (path == "/api/compare") {
      const std::string a = Required(query, "a");
      const std::string b = Required(query, "b");
      const MatrixParams params = ParseBundle(query);
      index_.Get(a);
      index_.Get(b);
      key = "/api/compare|" + a + "|" + b + "|" +
            BundleKey(params.shingles, params.profile);
      compute = [this, a, b, params] {
        return Dump(ToJson(
            Compare(index_, a, b, params.shingles, params.profile)));
      };
    } else {
      return ErrorResponse(404, "not-found",
                           "no such endpoint: " + std::string(path));
    }

    std::string body;
    if (!cache_.Get(key, &body)) {
      // Computed outside the cache lock; only finished bodies are stored.
      body = compute();
      cache_.Put(key, body);
    }
    return {200, "application/json", std::move(body)};
  } catch (const Error& e) {
    return ErrorResponse(StatusFor(e.code()), e.code(), e.what());
  } catch (const std::exception& e) {
    return ErrorResponse(500, "internal", e.what());
  }
}

struct Server::Impl {
  Impl(const CorpusIndex& index, ServerOptions opts)
      : options(std::move(opts)), api(index, options.cache_capacity) {}

  ServerOptions options;
  ApiService api;
  httplib::Server http;
  int port = -1;
};

Server::Server(const CorpusIndex& index, ServerOptions options)
    : impl_(std::make_unique<Impl>(index, std::move(options))) {
  Impl* impl = impl_.get();
  impl->http.Get(R"(/api/.*)", [impl](const httplib::Request& req,
                                      httplib::Response& res) {
    Query query(req.params.begin(), req.params.end());
    ApiResponse response = impl->api.Handle(req.path, query);
    res.status = response.status;
    res.set_content(response.body, response.content_type);
  });

  const std::filesystem::path& assets = impl->options.assets_dir;
  std::error_code ec;
  const bool have_assets =
      !assets.empty() && std::filesystem::is_directory(assets, ec);
  if (have_assets) impl->http.set_mount_point("/assets", assets.string());
  impl->http.Get("/", [impl, have_assets](const httplib::Request&,
                                          httplib::Response& res) {
    std::ifstream in(impl->options.assets_dir / "index.html", std::ios::binary);
    if (have_assets && in) {
      std::ostringstream page;
      page << in.rdbuf();
      res.set_content(page.str(), "text/html; charset=utf-8");
    } else {
      res.set_content(kFallbackPage, "text/html; charset=utf-8");
    }
  });
}

Server::~Server() { Stop(); }

int Server::Bind() {
  if (impl_->options.port == 0) {
    impl_->port = impl_->http.bind_to_any_port(impl_->options.host);
  } else if (impl_->http.bind_to_port(impl_->options.host,
                                      impl_->options.port)) {
    impl_->port = impl_->options.port;
  }
  return impl_->port;
}

bool Server::ListenAfterBind() { return impl_->http.listen_after_bind(); }

void Server::Stop() {
  if (impl_ && impl_->http.is_running()) impl_->http.stop();
}

}  // namespace aksara
