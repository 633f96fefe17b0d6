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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "biocoref/batch.h"
#include "biocoref/errors.h"
#include "biocoref/evaluation.h"
#include "biocoref/fixtures.h"

namespace {

using biocoref::CorefError;
using biocoref::ErrorCode;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

void LogError(const std::exception &e) {
  nlohmann::ordered_json line{{"level", "error"}, {"error", e.what()}};
  if (const auto *c = dynamic_cast<const CorefError *>(&e)) {
    line["code"] = biocoref::ErrorCodeName(c->code());
    line["subject"] = c->subject();
  }
  std::cerr << line.dump() << "\n";
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorefError(ErrorCode::kConfig, path, "cannot read file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<biocoref::ResultDocument> LoadResultFiles(
    const std::vector<std::string> &patterns) {
  std::vector<biocoref::ResultDocument> out;
  for (const std::string &path : biocoref::ExpandInputs(patterns)) {
    for (auto &r : biocoref::LoadResults(ReadFile(path))) {
      out.push_back(std::move(r));
    }
  }
  return out;
}

struct EvalOptions {
  std::vector<std::string> system;
  std::vector<std::string> baseline;
  std::string adjudications;
  bool mutant_mode = false;
  bool darpa_collapse = false;
};

int RunEval(const EvalOptions &o) {
  biocoref::EvalReport report;
  std::vector<biocoref::ResultDocument> system = LoadResultFiles(o.system);
  std::vector<biocoref::ResultDocument> baseline;
  if (!o.baseline.empty()) baseline = LoadResultFiles(o.baseline);
  biocoref::CountOptions count;
  count.darpa_collapse = o.darpa_collapse;
  report.throughput = biocoref::CountThroughput(
      system, o.baseline.empty() ? nullptr : &baseline, count);
  report.mutant_mode = o.mutant_mode;
  if (!o.adjudications.empty()) {
    auto records =
        biocoref::ParseAdjudications(ReadFile(o.adjudications), o.mutant_mode);
    report.sample_size = static_cast<int>(records.size());
    report.precision = biocoref::GenerousPrecision(records);
    report.errors = biocoref::BreakDownErrors(records);
  }
  std::cout << biocoref::ReportJson(report);
  std::cerr << biocoref::ReportTable(report);
  return kExitOk;
}

int RunInspect(const std::string &path, const std::string &anaphor) {
  biocoref::ResultDocument result = biocoref::LoadResult(ReadFile(path));
  std::cout << biocoref::InspectAnaphor(result, anaphor);
  return kExitOk;
}

int RunFixtures(const std::string &out_dir, const std::string &check_dir) {
  const biocoref::Resources resources = biocoref::Resources::Defaults();
  const bool check = !check_dir.empty();
  const std::filesystem::path dir = check ? check_dir : out_dir;
  if (!check) std::filesystem::create_directories(dir);
  int mismatches = 0;
  for (const biocoref::FixtureSpec &spec : biocoref::ExampleFixtures()) {
    const std::string text = biocoref::SaveDocument(
        biocoref::BuildFixture(spec, resources.dict, &resources.schema));
    const std::filesystem::path path = dir / (spec.name + ".json");
    if (!check) {
      std::ofstream(path, std::ios::binary) << text;
      continue;
    }
    std::string existing;
    try {
      existing = ReadFile(path.string());
      biocoref::LoadDocument(existing, &resources.schema);
    } catch (const std::exception &e) {
      LogError(e);
      ++mismatches;
      continue;
    }
    if (existing != text) {
      nlohmann::ordered_json line{{"level", "error"},
                                  {"msg", "fixture differs from its source"},
                                  {"fixture", path.string()}};
      std::cerr << line.dump() << "\n";
      ++mismatches;
    }
  }
  nlohmann::ordered_json line{
      {"level", "info"},
      {"msg", check ? "fixtures checked" : "fixtures written"},
      {"count", biocoref::ExampleFixtures().size()},
      {"mismatches", mismatches}};
  std::cerr << line.dump() << "\n";
  return mismatches == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Sieve-based coreference resolution for biomedical events"};
  app.require_subcommand(1);

  biocoref::RunConfig run;
  std::string grounding, lexicon, schema;
  CLI::App *resolve = app.add_subcommand("resolve", "Resolve documents");
  resolve->add_option("--in", run.inputs, "Input path or glob")->required();
  resolve->add_option("--out", run.out_dir, "Output directory")->required();
  resolve->add_option("--grounding", grounding, "Grounding table (TSV)");
  resolve->add_option("--lexicon", lexicon, "Trigger dictionary (JSON)");
  resolve->add_option("--schema", schema, "Argument schema (JSON)");
  resolve->add_option("--disable-sieve", run.disabled_sieves,
                      "Sieve to skip; repeatable; 'all' skips every sieve");
  resolve->add_option("--jobs", run.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  resolve->add_flag("--strict", run.strict, "Stop at the first failure");
  resolve->add_flag("--emit-provenance", run.emit_provenance,
                    "Include per-anaphor search traces");

  EvalOptions eval;
  CLI::App *eval_cmd = app.add_subcommand("eval", "Score resolver output");
  eval_cmd->add_option("--system", eval.system, "Output files or globs")
      ->required();
  eval_cmd->add_option("--baseline", eval.baseline,
                       "Output of a run with coreference disabled");
  eval_cmd->add_option("--adjudications", eval.adjudications,
                       "CSV: event_id,judgment[,error_class]");
  eval_cmd->add_flag("--mutant-mode", eval.mutant_mode,
                     "Allow half-point judgments");
  eval_cmd->add_flag("--darpa-collapse", eval.darpa_collapse,
                     "Count a regulation and its controlled event once");

  std::string inspect_doc, inspect_anaphor;
  CLI::App *inspect =
      app.add_subcommand("inspect", "Print the search trace of an anaphor");
  inspect->add_option("--doc", inspect_doc, "Output document")->required();
  inspect->add_option("--anaphor", inspect_anaphor, "Anaphor ID")->required();

  std::string fixtures_out, fixtures_check;
  CLI::App *fixtures =
      app.add_subcommand("fixtures", "Write or check the example corpus");
  auto *out_opt = fixtures->add_option("--out", fixtures_out, "Write to dir");
  auto *check_opt =
      fixtures->add_option("--check", fixtures_check, "Compare against dir");
  out_opt->excludes(check_opt);
  fixtures->require_option(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  if (!grounding.empty()) run.grounding = grounding;
  if (!lexicon.empty()) run.lexicon = lexicon;
  if (!schema.empty()) run.schema = schema;

  try {
    if (*resolve) return biocoref::RunResolve(run, std::cerr).exit_code;
    if (*eval_cmd) return RunEval(eval);
    if (*inspect) return RunInspect(inspect_doc, inspect_anaphor);
    return RunFixtures(fixtures_out, fixtures_check);
  } catch (const CorefError &e) {
    LogError(e);
    return e.code() == ErrorCode::kConfig ? kExitConfig : kExitFailure;
  } catch (const std::exception &e) {
    LogError(e);
    return kExitFailure;
  }
}
