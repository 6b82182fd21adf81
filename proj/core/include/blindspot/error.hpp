/* Copyright 2026 The Blindspot Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <stdexcept>
#include <string>

namespace blindspot {

/// Failure categories. Each kind maps to a distinct process exit code in the
/// CLI (the enum value itself), so scripts can react to the cause.
enum class ErrorKind : int {
  kInvalidInput = 2,
  kRasterMismatch = 3,
  kWindowUnderflow = 4,
  kDegenerateFit = 5,
  kEmptyVisibility = 6,
  kMissingFile = 7,
  kCountMismatch = 8,
  kMalformedLine = 9,
  kInvariantViolation = 10,
  kIoFailure = 11,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace blindspot
