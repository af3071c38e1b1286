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

#ifndef AKSARA_SERVER_H_
#define AKSARA_SERVER_H_

#include <filesystem>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>

#include "aksara/corpus.h"

namespace aksara {

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

// Thread-safe least-recently-used map from request key to response body.
class ResponseCache {
 public:
  explicit ResponseCache(size_t capacity) : capacity_(capacity) {}

  bool Get(const std::string& key, std::string* body);
  void Put(const std::string& key, std::string body);
  size_t size() const;

 private:
  using Entry = std::pair<std::string, std::string>;

  size_t capacity_;
  mutable std::mutex mu_;
  std::list<Entry> order_;  // most recent first
  std::unordered_map<std::string, std::list<Entry>::iterator> entries_;
};

// Read-only JSON API over an index. Routing and validation live here so
// they can be exercised without a socket.
//
//   /api/corpus
//   /api/document/{id}
//   /api/matrix?metric=&n=&mode=&k=&unit=&normalize=&combine=
//   /api/mst?metric=&n=&mode=&k=&unit=&normalize=&combine=
//   /api/compare?a=&b=&n=&mode=&k=&unit=&normalize=
//
// Errors carry {"status", "code", "message"}.
class ApiService {
 public:
  explicit ApiService(const CorpusIndex& index, size_t cache_capacity = 128);

  ApiResponse Handle(std::string_view path,
                     const std::multimap<std::string, std::string>& query);

  const ResponseCache& cache() const { return cache_; }

 private:
  const CorpusIndex& index_;
  ResponseCache cache_;
};

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  // Directory holding the built explorer (index.html + assets). Optional.
  std::filesystem::path assets_dir;
  size_t cache_capacity = 128;
};

class Server {
 public:
  Server(const CorpusIndex& index, ServerOptions options);
  ~Server();

  // Binds the socket; returns the bound port or -1.
  int Bind();
  // Serves until Stop(). Call after Bind().
  bool ListenAfterBind();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace aksara

#endif  // AKSARA_SERVER_H_
