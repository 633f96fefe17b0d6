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

#include "biocoref/evaluation.h"

#include <array>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "biocoref/errors.h"
#include "biocoref/text.h"

namespace biocoref {

namespace {

constexpr std::array<std::pair<const char *, ErrorClass>, 3> kErrorClasses{{
    {"NamedEntityRecognition", ErrorClass::kNamedEntityRecognition},
    {"EventRecognition", ErrorClass::kEventRecognition},
    {"CoreferenceResolution", ErrorClass::kCoreferenceResolution},
}};

std::string Trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) {
    --e;
  }
  s = s.substr(b, e - b);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    s = s.substr(1, s.size() - 2);
  }
  return std::string(s);
}

std::vector<std::string> SplitFields(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    fields.push_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::optional<int> ParseHalfPoints(const std::string &s) {
  if (s == "1" || s == "1.0" || s == "1.00") return 2;
  if (s == "0.5" || s == ".5" || s == "0.50") return 1;
  if (s == "0" || s == "0.0" || s == "0.00") return 0;
  return std::nullopt;
}

std::string Percent(const Rational &r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f%%", 100.0 * r.value());
  return buf;
}

}  // namespace

Rational Rational::Of(std::int64_t num, std::int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g == 0) return {0, 1};
  return {num / g, den / g};
}

std::string Rational::ToString() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

const char *ErrorClassName(ErrorClass cls) {
  for (const auto &[name, value] : kErrorClasses) {
    if (value == cls) return name;
  }
  return "???";
}

std::optional<ErrorClass> ParseErrorClass(std::string_view name) {
  for (const auto &[key, value] : kErrorClasses) {
    if (name == key) return value;
  }
  return std::nullopt;
}

std::vector<AdjudicationRecord> ParseAdjudications(std::string_view csv,
                                                   bool mutant_mode) {
  std::vector<AdjudicationRecord> records;
  std::size_t pos = 0;
  int line_no = 0;
  bool header = false;
  if (csv.starts_with("\xEF\xBB\xBF")) pos = 3;
  while (pos <= csv.size()) {
    std::size_t nl = csv.find('\n', pos);
    std::string_view line = csv.substr(pos, nl - pos);
    pos = nl == std::string_view::npos ? csv.size() + 1 : nl + 1;
    ++line_no;
    const std::string where = "line " + std::to_string(line_no);
    if (Trim(line).empty()) continue;
    std::vector<std::string> f = SplitFields(line);
    if (!header) {
      if (f.size() < 2 || f.size() > 3 || f[0] != "event_id" ||
          f[1] != "judgment" || (f.size() == 3 && f[2] != "error_class")) {
        throw CorefError(ErrorCode::kMalformedInput, where,
                         "expected header event_id,judgment[,error_class]");
      }
      header = true;
      continue;
    }
    if (f.size() < 2 || f.size() > 3 || f[0].empty()) {
      throw CorefError(ErrorCode::kMalformedRow, where,
                       "expected 2 or 3 columns");
    }
    AdjudicationRecord r;
    r.event_id = f[0];
    std::optional<int> half = ParseHalfPoints(f[1]);
    if (!half || (*half == 1 && !mutant_mode)) {
      throw CorefError(ErrorCode::kInvalidJudgment, r.event_id,
                       "judgment '" + f[1] + "' not in " +
                           (mutant_mode ? "{0, 0.5, 1}" : "{0, 1}"));
    }
    r.half_points = *half;
    if (f.size() == 3 && !f[2].empty()) {
      r.error_class = ParseErrorClass(f[2]);
      if (!r.error_class) {
        throw CorefError(ErrorCode::kMalformedRow, where,
                         "unknown error class " + f[2]);
      }
    }
    records.push_back(std::move(r));
  }
  if (!header) {
    throw CorefError(ErrorCode::kMalformedInput, "line 1",
                     "missing header row");
  }
  return records;
}

Rational GenerousPrecision(const std::vector<AdjudicationRecord> &records) {
  if (records.empty()) {
    throw CorefError(ErrorCode::kEmptySample, "adjudications",
                     "no records to score");
  }
  std::int64_t half = 0;
  for (const AdjudicationRecord &r : records) half += r.half_points;
  return Rational::Of(half, 2 * static_cast<std::int64_t>(records.size()));
}

Rational ErrorBreakdown::Fraction(ErrorClass cls) const {
  auto it = counts.find(cls);
  if (total == 0 || it == counts.end()) return {0, 1};
  return Rational::Of(it->second, total);
}

ErrorBreakdown BreakDownErrors(const std::vector<AdjudicationRecord> &records) {
  ErrorBreakdown out;
  for (const AdjudicationRecord &r : records) {
    if (!r.error_class) {
      if (r.half_points == 0) {
        throw CorefError(ErrorCode::kMissingErrorClass, r.event_id,
                         "incorrect event without an error class");
      }
      continue;
    }
    ++out.counts[*r.error_class];
    ++out.total;
  }
  return out;
}

Throughput CountThroughput(const std::vector<ResultDocument> &system,
                           const std::vector<ResultDocument> *baseline_run,
                           const CountOptions &options) {
  auto count_doc = [&](const ResultDocument &doc, Throughput &t) {
    std::set<std::string, std::less<>> absorbed;
    if (options.darpa_collapse) {
      for (const CompletedEvent &c : doc.completed) {
        for (const Argument &a : c.event.args) {
          if (a.role == options.controlled_role) absorbed.insert(a.ref);
        }
      }
    }
    for (const CompletedEvent &c : doc.completed) {
      if (absorbed.contains(c.event.id)) continue;
      ++(c.provenance.empty() ? t.baseline : t.coref_only);
    }
  };

  Throughput t;
  for (const ResultDocument &doc : system) count_doc(doc, t);
  t.combined = t.baseline + t.coref_only;
  if (baseline_run != nullptr) {
    auto ids = [](const std::vector<ResultDocument> &docs) {
      std::multiset<std::string> out;
      for (const ResultDocument &d : docs) out.insert(d.doc.doc_id());
      return out;
    };
    std::multiset<std::string> a = ids(system);
    std::multiset<std::string> b = ids(*baseline_run);
    if (a != b) {
      std::string first;
      for (const std::string &id : a) {
        if (!b.contains(id)) first = id;
      }
      for (const std::string &id : b) {
        if (first.empty() && !a.contains(id)) first = id;
      }
      throw CorefError(ErrorCode::kCorpusMismatch,
                       first.empty() ? "doc ids" : first,
                       "system and baseline runs cover different documents");
    }
    Throughput base;
    for (const ResultDocument &doc : *baseline_run) count_doc(doc, base);
    t.baseline_run = base.baseline + base.coref_only;
  }
  return t;
}

std::string ReportJson(const EvalReport &report) {
  nlohmann::ordered_json j;
  const Throughput &t = report.throughput;
  j["throughput"] = {{"baseline", t.baseline},
                     {"coref_only", t.coref_only},
                     {"combined", t.combined}};
  if (t.baseline_run) j["throughput"]["baseline_run"] = *t.baseline_run;
  if (report.precision) {
    const Rational &p = *report.precision;
    j["generous_precision"] = {{"value", p.value()},
                               {"numerator", p.num},
                               {"denominator", p.den},
                               {"sample_size", report.sample_size},
                               {"mutant_mode", report.mutant_mode}};
  }
  if (report.errors) {
    nlohmann::ordered_json e;
    for (const auto &[name, cls] : kErrorClasses) {
      Rational f = report.errors->Fraction(cls);
      auto it = report.errors->counts.find(cls);
      e[name] = {{"count", it == report.errors->counts.end() ? 0 : it->second},
                 {"fraction", f.value()}};
    }
    j["error_breakdown"] = std::move(e);
  }
  return j.dump(2) + "\n";
}

std::string ReportTable(const EvalReport &report) {
  std::ostringstream out;
  char line[128];
  const Throughput &t = report.throughput;
  out << "Throughput                  Events\n";
  std::snprintf(line, sizeof(line), "  %-26s%8lld\n", "Baseline",
                static_cast<long long>(t.baseline));
  out << line;
  std::snprintf(line, sizeof(line), "  %-26s%8lld\n", "Coreference only",
                static_cast<long long>(t.coref_only));
  out << line;
  std::snprintf(line, sizeof(line), "  %-26s%8lld\n", "Baseline + coreference",
                static_cast<long long>(t.combined));
  out << line;
  if (t.baseline_run) {
    std::snprintf(line, sizeof(line), "  %-26s%8lld\n", "Coreference disabled run",
                  static_cast<long long>(*t.baseline_run));
    out << line;
  }
  if (report.precision) {
    out << (report.mutant_mode ? "Mutant precision" : "Generous precision")
        << "  " << Percent(*report.precision) << " (" << report.sample_size
        << " events)\n";
  }
  if (report.errors) {
    out << "Error source                Share\n";
    for (const auto &[name, cls] : kErrorClasses) {
      std::snprintf(line, sizeof(line), "  %-26s%8s\n", name,
                    Percent(report.errors->Fraction(cls)).c_str());
      out << line;
    }
  }
  return out.str();
}

}  // namespace biocoref
