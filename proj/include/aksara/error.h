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

#ifndef AKSARA_ERROR_H_
#define AKSARA_ERROR_H_

#include <stdexcept>
#include <string>

namespace aksara {

// Error raised for invalid parameters, unknown documents and unreadable
// inputs. `code()` is a stable machine-readable tag ("invalid-n",
// "unknown-document", ...) that the HTTP layer forwards verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace aksara

#endif  // AKSARA_ERROR_H_
