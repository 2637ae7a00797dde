// Copyright 2026 The mktinfo Authors.
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

#include "mktinfo/error.hpp"

namespace mktinfo {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInputTooShort:
      return "input-too-short";
    case ErrorKind::kDomain:
      return "domain";
    case ErrorKind::kEmptyTable:
      return "empty-table";
    case ErrorKind::kInconsistency:
      return "inconsistency";
    case ErrorKind::kRange:
      return "range";
    case ErrorKind::kBudgetExceeded:
      return "budget-exceeded";
    case ErrorKind::kUnobservedPrefix:
      return "unobserved-prefix";
    case ErrorKind::kParse:
      return "parse";
    case ErrorKind::kUsage:
      return "usage";
  }
  return "unknown";
}

}  // namespace mktinfo
