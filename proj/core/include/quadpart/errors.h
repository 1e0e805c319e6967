// Copyright 2026 The quadpart Authors
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

#ifndef QUADPART_ERRORS_H_
#define QUADPART_ERRORS_H_

#include <stdexcept>
#include <string>

namespace quadpart {

// Process exit codes used by the CLI. Stable contract.
enum class ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kVerificationFailure = 2,
  kResourceLimit = 3,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

// Malformed input: dimension mismatch, bad counts, unparsable files.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what)
      : Error(ExitCode::kInputError, what) {}
};

// A supplied ("forced") matching or scripted choice is valid but not optimal.
class OptimalityError : public Error {
 public:
  explicit OptimalityError(const std::string& what)
      : Error(ExitCode::kVerificationFailure, what) {}
};

// A size limit or search budget was exceeded. Never a wrong answer.
class SizeError : public Error {
 public:
  explicit SizeError(const std::string& what)
      : Error(ExitCode::kResourceLimit, what) {}
};

}  // namespace quadpart

#endif  // QUADPART_ERRORS_H_
