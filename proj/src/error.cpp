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

#include "seedplan/error.hpp"

namespace seedplan {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput:
      return "invalid_input";
    case ErrorKind::kOversizeItem:
      return "oversize_item";
    case ErrorKind::kSingularFit:
      return "singular_fit";
    case ErrorKind::kUndefinedMetric:
      return "undefined_metric";
    case ErrorKind::kParse:
      return "parse_error";
    case ErrorKind::kRange:
      return "range_error";
  }
  return "unknown";
}

}  // namespace seedplan
