// Copyright 2026 The seedplan Authors.
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

#ifndef SEEDPLAN_ERROR_HPP_
#define SEEDPLAN_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace seedplan {

enum class ErrorKind {
  kInvalidInput,
  kOversizeItem,
  kSingularFit,
  kUndefinedMetric,
  kParse,
  kRange,
};

// Stable snake_case name, used in machine-readable CLI diagnostics.
std::string_view ErrorKindName(ErrorKind kind);

// All library failures are reported through this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(message), kind_(kind), offset_(offset) {}

  ErrorKind kind() const { return kind_; }
  // Byte offset into the parsed text, for parse errors.
  std::optional<std::size_t> offset() const { return offset_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> offset_;
};

}  // namespace seedplan

#endif  // SEEDPLAN_ERROR_HPP_
