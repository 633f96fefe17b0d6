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

#include "biocoref/batch.h"

#include <glob.h>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "biocoref/errors.h"


namespace biocoref {

namespace {

using ojson = nlohmann::ordered_json;

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorefError(ErrorCode::kConfig, path, "cannot read file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

template <typename T, typename Parse>
T LoadConfigFile(const std::optional<std::string> &path, Parse parse,
                 T fallback) {
  if (!path) return fallback;
  std::string text = ReadFile(*path);
  try {
    return parse(text);
  } catch (const std::exception &e) {
    throw CorefError(ErrorCode::kConfig, *path, e.what());
  }
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Work is claimed in
// index order; once `stop` is set no further index is claimed.
template <typename Fn>
void ParallelFor(std::size_t n, int jobs, Fn fn,
                 std::atomic<bool> *stop = nullptr) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (!(stop && stop->load())) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(n, static_cast<std::size_t>(std::max(jobs, 1)));
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
}

struct DocOutcome {
  std::string doc_id;
  std::string output;
  std::string error;
  int detected = 0;
  std::map<std::string, int, std::less<>> resolved;
  int events_emitted = 0;
  int events_dropped = 0;
};

struct FileOutcome {
  std::string error;
  std::vector<DocOutcome> docs;
  bool failed() const {
    return !error.empty() ||
           std::any_of(docs.begin(), docs.end(),
                       [](const DocOutcome &d) { return !d.error.empty(); });
  }
};

DocOutcome ProcessOne(const Document &doc, const ResolverConfig &config,
                      bool emit_provenance) {
  DocOutcome out;
  out.doc_id = doc.doc_id();
  try {
    ResultDocument r = Process(doc, config);
    IdSet anaphors;
    for (const AnaphorTrace &t : r.traces) {
      anaphors.insert(t.anaphor_id);
      ++out.detected;
      if (t.linked) ++out.resolved[t.sieve];
    }
    out.events_emitted = static_cast<int>(r.completed.size());
    for (const Removal &d : r.dropped) {
      if (doc.FindEvent(d.id) && !anaphors.contains(d.id)) ++out.events_dropped;
    }
    r.has_trace = emit_provenance;
    out.output = SaveResult(r);
  } catch (const std::exception &e) {
    out.error = e.what();
  }
  return out;
}

FileOutcome ProcessFile(const std::string &path, const Resources &resources,
                        const ResolverConfig &config, bool emit_provenance) {
  FileOutcome out;
  std::vector<Document> docs;
  try {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CorefError(ErrorCode::kMalformedInput, path, "cannot read");
    std::ostringstream s;
    s << in.rdbuf();
    docs = LoadDocuments(s.str(), &resources.schema);
  } catch (const std::exception &e) {
    out.error = e.what();
    return out;
  }
  for (const Document &doc : docs) {
    out.docs.push_back(ProcessOne(doc, config, emit_provenance));
  }
  return out;
}

void LogLine(std::ostream &log, const ojson &line) {
  log << line.dump() << "\n";
}

}  // namespace

Resources LoadResources(const RunConfig &config) {
  Resources defaults = Resources::Defaults();
  Resources r;
  r.dict = LoadConfigFile<TriggerDictionary>(
      config.lexicon,
      [](const std::string &t) { return TriggerDictionary::FromJson(t); },
      std::move(defaults.dict));
  r.schema = LoadConfigFile<ArgSchema>(
      config.schema, [](const std::string &t) { return ArgSchema::FromJson(t); },
      std::move(defaults.schema));
  r.grounding = LoadConfigFile<GroundingTable>(
      config.grounding,
      [](const std::string &t) { return GroundingTable::FromTsv(t); },
      std::move(defaults.grounding));
  return r;
}

std::vector<std::string> ExpandInputs(
    const std::vector<std::string> &patterns) {
  std::set<std::string> files;
  for (const std::string &p : patterns) {
    glob_t g{};
    int rc = glob(p.c_str(), 0, nullptr, &g);
    if (rc == 0) {
      for (std::size_t i = 0; i < g.gl_pathc; ++i) {
        if (std::filesystem::is_regular_file(g.gl_pathv[i])) {
          files.insert(g.gl_pathv[i]);
        }
      }
    }
    globfree(&g);
    if (rc != 0 && rc != GLOB_NOMATCH) {
      throw CorefError(ErrorCode::kConfig, p, "cannot expand input pattern");
    }
  }
  return {files.begin(), files.end()};
}

std::string SummaryJson(const RunSummary &s) {
  ojson j;
  j["docs"] = s.docs;
  j["failed"] = s.failed;
  ojson failures = ojson::array();
  for (const DocumentFailure &f : s.failures) {
    failures.push_back(
        ojson{{"input", f.input}, {"doc_id", f.doc_id}, {"error", f.error}});
  }
  j["failures"] = std::move(failures);
  j["anaphors_detected"] = s.detected;
  j["resolved"] = s.resolved;
  ojson per_sieve = ojson::object();
  for (const auto &[name, n] : s.resolved_per_sieve) per_sieve[name] = n;
  j["resolved_per_sieve"] = std::move(per_sieve);
  j["unresolved"] = s.unresolved;
  j["events_emitted"] = s.events_emitted;
  j["events_dropped"] = s.events_dropped;
  return j.dump();
}

RunResult RunResolve(const RunConfig &config, std::ostream &log) {
  Resources resources = LoadResources(config);
  IdSet disabled = ParseDisabledSieves(config.disabled_sieves);
  const std::vector<std::string> files = ExpandInputs(config.inputs);
  if (!files.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec || !std::filesystem::is_directory(config.out_dir)) {
      throw CorefError(ErrorCode::kConfig, config.out_dir,
                       "cannot create output directory");
    }
  }
  const ResolverConfig resolver = resources.Config(std::move(disabled), true);

  std::vector<FileOutcome> outcomes(files.size());
  std::atomic<bool> stop{false};
  ParallelFor(
      files.size(), config.jobs,
      [&](std::size_t i) {
        outcomes[i] = ProcessFile(files[i], resources, resolver,
                                  config.emit_provenance);
        if (config.strict && outcomes[i].failed()) stop = true;
      },
      &stop);

  RunResult result;
  RunSummary &s = result.summary;
  for (const char *name : kSieveNames) s.resolved_per_sieve.emplace_back(name, 0);
  std::set<std::string, std::less<>> written;
  auto fail = [&](const std::string &input, const std::string &doc_id,
                  const std::string &error) {
    ++s.failed;
    s.failures.push_back({input, doc_id, error});
    LogLine(log, ojson{{"level", "error"},
                       {"msg", "document failed"},
                       {"input", input},
                       {"doc_id", doc_id},
                       {"error", error}});
  };
  for (std::size_t i = 0; i < files.size(); ++i) {
    const FileOutcome &f = outcomes[i];
    if (!f.error.empty()) {
      ++s.docs;
      fail(files[i], "", f.error);
    }
    for (const DocOutcome &d : f.docs) {
      ++s.docs;
      if (!d.error.empty()) {
        fail(files[i], d.doc_id, d.error);
        continue;
      }
      if (!written.insert(d.doc_id).second) {
        fail(files[i], d.doc_id, "duplicate doc_id in batch");
        continue;
      }
      const std::filesystem::path out =
          std::filesystem::path(config.out_dir) / (d.doc_id + ".json");
      std::ofstream os(out, std::ios::binary);
      os << d.output;
      if (!os) {
        fail(files[i], d.doc_id, "cannot write " + out.string());
        continue;
      }
      s.detected += d.detected;
      int resolved = 0;
      for (auto &[name, n] : s.resolved_per_sieve) {
        auto it = d.resolved.find(name);
        if (it != d.resolved.end()) {
          n += it->second;
          resolved += it->second;
        }
      }
      s.resolved += resolved;
      s.events_emitted += d.events_emitted;
      s.events_dropped += d.events_dropped;
      LogLine(log, ojson{{"level", "info"},
                         {"msg", "document resolved"},
                         {"input", files[i]},
                         {"doc_id", d.doc_id},
                         {"anaphors", d.detected},
                         {"resolved", resolved},
                         {"events", d.events_emitted}});
    }
    if (config.strict && f.failed()) break;
  }
  s.unresolved = s.detected - s.resolved;
  result.exit_code = s.failed > 0 ? 1 : 0;
  ojson summary = ojson::parse(SummaryJson(s));
  LogLine(log, ojson{{"level", "info"}, {"msg", "summary"}, {"summary", summary}});
  return result;
}

std::vector<ResultDocument> ProcessAll(const std::vector<Document> &docs,
                                       const ResolverConfig &config,
                                       int jobs) {
  std::vector<ResultDocument> out(docs.size());
  ParallelFor(docs.size(), jobs,
              [&](std::size_t i) { out[i] = Process(docs[i], config); });
  return out;
}

std::string InspectAnaphor(const ResultDocument &result,
                           std::string_view anaphor_id) {
  if (!result.has_trace) {
    throw CorefError(ErrorCode::kMalformedInput, result.doc.doc_id(),
                     "output has no trace; rerun resolve with "
                     "--emit-provenance");
  }
  auto it = std::find_if(
      result.traces.begin(), result.traces.end(),
      [&](const AnaphorTrace &t) { return t.anaphor_id == anaphor_id; });
  if (it == result.traces.end()) {
    throw CorefError(ErrorCode::kUnknownAnaphor, std::string(anaphor_id),
                     "no anaphor with this ID in " + result.doc.doc_id());
  }
  const AnaphorTrace &t = *it;
  auto surface = [&](const std::string &id) {
    std::optional<Span> span = result.doc.MentionSpan(id);
    return span ? std::string(result.doc.Slice(*span)) : std::string();
  };
  std::ostringstream os;
  os << "anaphor " << t.anaphor_id << " \"" << t.surface << "\" [" << t.kind
     << ", " << t.cardinality << "] in " << result.doc.doc_id() << "\n";
  for (const SieveAttempt &a : t.attempts) {
    os << "  sieve " << a.sieve;
    if (!a.note.empty()) os << ": " << a.note;
    os << "\n";
    for (const TraceStep &step : a.steps) {
      os << "    " << step.mention_id << " \"" << step.surface << "\": ";
      if (step.accepted) {
        os << "accepted\n";
      } else {
        os << "excluded (" << step.reason << ")\n";
      }
    }
  }
  if (t.linked) {
    os << "LINKED";
    for (const std::string &id : t.antecedent_ids) {
      os << " " << id << " \"" << surface(id) << "\"";
    }
    os << " via " << t.sieve << "\n";
  } else {
    os << "DROPPED: " << t.drop_reason << "\n";
  }
  return os.str();
}

}  // namespace biocoref
