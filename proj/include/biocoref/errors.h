// Copyright 2026 The biocoref Authors.
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

#ifndef BIOCOREF_ERRORS_H_
#define BIOCOREF_ERRORS_H_

#include <stdexcept>
#include <string>

namespace biocoref {

enum class ErrorCode {
  kMalformedInput,
  kSchemaViolation,
  kSchemaMissing,
  kMalformedRow,
  kCorpusMismatch,
  kEmptySample,
  kMissingErrorClass,
  kInvalidJudgment,
  kUnknownAnaphor,
  kConfig,
};

const char *ErrorCodeName(ErrorCode code);

// Error raised by every module. The subject names the offending mention ID,
// offset, line number or file so callers can report it without parsing the
// message.
class CorefError : public std::runtime_error {
 public:
  CorefError(ErrorCode code, std::string subject, const std::string &message);

  ErrorCode code() const { return code_; }
  const std::string &subject() const { return subject_; }

 private:
  ErrorCode code_;
  std::string subject_;
};

}  // namespace biocoref

#endif  // BIOCOREF_ERRORS_H_
