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

#include "biocoref/errors.h"

namespace biocoref {

const char *ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kSchemaViolation: return "SchemaViolation";
    case ErrorCode::kSchemaMissing: return "SchemaMissing";
    case ErrorCode::kMalformedRow: return "MalformedRow";
    case ErrorCode::kCorpusMismatch: return "CorpusMismatch";
    case ErrorCode::kEmptySample: return "EmptySample";
    case ErrorCode::kMissingErrorClass: return "MissingErrorClass";
    case ErrorCode::kInvalidJudgment: return "InvalidJudgment";
    case ErrorCode::kUnknownAnaphor: return "UnknownAnaphor";
    case ErrorCode::kConfig: return "ConfigError";
  }
  return "???";
}

CorefError::CorefError(ErrorCode code, std::string subject,
                       const std::string &message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + "(" + subject +
                         "): " + message),
      code_(code),
      subject_(std::move(subject)) {}

}  // namespace biocoref
