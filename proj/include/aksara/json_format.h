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

#ifndef AKSARA_JSON_FORMAT_H_
#define AKSARA_JSON_FORMAT_H_

#include "aksara/aligner.h"
#include "aksara/corpus.h"
#include "aksara/graph.h"
#include "aksara/similarity.h"
#include "json.hpp"

// JSON shapes shared by the HTTP API, the CLI and the graph export. Field
// names are part of the public interface.
namespace aksara {

nlohmann::json ToJson(const Span& span);
nlohmann::json ToJson(const DocumentRecord& record);
nlohmann::json ToJson(const MatrixParams& params);
nlohmann::json ToJson(const SimilarityMatrix& matrix);
nlohmann::json ToJson(const ReuseTree& tree);
nlohmann::json ToJson(const ComparisonReport& report);

// {"id", "text", "aksaras": [{"surface", "start", "end", "degenerate"}]}
nlohmann::json DocumentToJson(const CorpusIndex::Document& document);

MatrixParams MatrixParamsFromJson(const nlohmann::json& j);
ReuseTree TreeFromJson(const nlohmann::json& j);

}  // namespace aksara

#endif  // AKSARA_JSON_FORMAT_H_
