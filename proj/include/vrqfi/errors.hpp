// Copyright 2026 The vrqfi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vrqfi {

enum class ErrorKind {
  invalid_input,
  domain,
  numerical,
  degenerate_model,
  step_size,
  divergence,
  not_a_discontinuity,
  multi_branch,
  misidentified_outcome,
  unsupported,
  insufficient_replicates,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library. `evidence` carries sampled
// (parameter, value) pairs for divergence-type failures; empty otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::vector<std::pair<double, double>> evidence = {})
      : std::runtime_error(what), kind_(kind), evidence_(std::move(evidence)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::pair<double, double>>& evidence() const noexcept {
    return evidence_;
  }

 private:
  ErrorKind kind_;
  std::vector<std::pair<double, double>> evidence_;
};

}  // namespace vrqfi
