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

#ifndef BIOCOREF_EVALUATION_H_
#define BIOCOREF_EVALUATION_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biocoref/standoff.h"

namespace biocoref {

// Exact fraction, always reduced, denominator positive.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational Of(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / den; }
  std::string ToString() const;

  friend bool operator==(const Rational &, const Rational &) = default;
};

enum class ErrorClass {
  kNamedEntityRecognition,
  kEventRecognition,
  kCoreferenceResolution,
};

const char *ErrorClassName(ErrorClass cls);
std::optional<ErrorClass> ParseErrorClass(std::string_view name);

struct AdjudicationRecord {
  std::string event_id;
  // Judgment in half points: 2 = 1.0, 1 = 0.5, 0 = 0.0.
  int half_points = 0;
  std::optional<ErrorClass> error_class;

  friend bool operator==(const AdjudicationRecord &,
                         const AdjudicationRecord &) = default;
};

// Reads "event_id,judgment[,error_class]" CSV with a header row. Judgment 0.5
// is rejected with kInvalidJudgment unless mutant_mode is set.
std::vector<AdjudicationRecord> ParseAdjudications(std::string_view csv,
                                                   bool mutant_mode);

// Mean judgment. Throws CorefError(kEmptySample) on an empty sample.
Rational GenerousPrecision(const std::vector<AdjudicationRecord> &records);

struct ErrorBreakdown {
  std::map<ErrorClass, int> counts;
  int total = 0;

  Rational Fraction(ErrorClass cls) const;
};

// Distribution of error classes over the records carrying one. Throws
// CorefError(kMissingErrorClass) naming a zero-judgment record without one.
ErrorBreakdown BreakDownErrors(const std::vector<AdjudicationRecord> &records);

struct Throughput {
  // Events without coreference provenance.
  std::int64_t baseline = 0;
  // Events whose provenance names at least one anaphor.
  std::int64_t coref_only = 0;
  std::int64_t combined = 0;
  // Events emitted by the coreference-disabled run, when one was given.
  std::optional<std::int64_t> baseline_run = std::nullopt;
};

struct CountOptions {
  // Count a regulation and the event it controls as one mention.
  bool darpa_collapse = false;
  std::string controlled_role = "controlled";
};

// Counts the completed events of a system run. With a baseline run, the two
// runs must cover the same doc IDs, else CorefError(kCorpusMismatch).
Throughput CountThroughput(const std::vector<ResultDocument> &system,
                           const std::vector<ResultDocument> *baseline_run,
                           const CountOptions &options = {});

struct EvalReport {
  Throughput throughput;
  std::optional<Rational> precision;
  int sample_size = 0;
  bool mutant_mode = false;
  std::optional<ErrorBreakdown> errors;
};

std::string ReportJson(const EvalReport &report);
std::string ReportTable(const EvalReport &report);

}  // namespace biocoref

#endif  // BIOCOREF_EVALUATION_H_
