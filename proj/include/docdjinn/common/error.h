// Copyright 2026 The DocDjinn Authors.
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

#ifndef DOCDJINN_COMMON_ERROR_H_
#define DOCDJINN_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace docdjinn {

// Base class for all errors raised by the library. Precondition violations
// and unrecoverable backend failures are thrown; per-document rejections are
// returned as values (see RejectReason).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

#define DOCDJINN_CHECK_ARG(cond, msg)          \
  do {                                         \
    if (!(cond)) throw ::docdjinn::InvalidArgument(msg); \
  } while (0)

}  // namespace docdjinn

#endif  // DOCDJINN_COMMON_ERROR_H_
