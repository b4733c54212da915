// Copyright 2026 The tensorcomb Authors.
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

#ifndef TENSORCOMB_ERROR_H_
#define TENSORCOMB_ERROR_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace tensorcomb {

// Domain error raised by library operations. `kind` is a short stable
// identifier (e.g. "invalid_graph", "cap_exceeded") used by the CLI when it
// renders structured error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

}  // namespace tensorcomb

#endif  // TENSORCOMB_ERROR_H_
