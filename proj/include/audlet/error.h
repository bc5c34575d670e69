// Copyright 2026 The Audlet Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AUDLET_ERROR_H_
#define AUDLET_ERROR_H_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace audlet {

enum class ErrorCode {
  kDomain,       // argument outside the mathematical domain
  kShape,        // length / divisibility / congruence mismatch
  kNotAFrame,    // operator is singular, no stable inverse exists
  kConvergence,  // iterative solver did not reach its tolerance
  kUnsupported,  // configuration outside what the implementation handles
  kFormat,       // malformed file contents
  kIo,           // file system failure
  kInternal,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Thrown by the iterative solvers. Carries the relative residual after every
// iteration that was performed.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, std::vector<double> trace)
      : Error(ErrorCode::kConvergence, message), trace_(std::move(trace)) {}

  const std::vector<double>& trace() const { return trace_; }

 private:
  std::vector<double> trace_;
};

}  // namespace audlet

#endif  // AUDLET_ERROR_H_
