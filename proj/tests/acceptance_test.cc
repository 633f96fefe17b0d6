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

// Acceptance criteria, one PASS/FAIL line each.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "biocoref/batch.h"
#include "biocoref/errors.h"
#include "biocoref/evaluation.h"
#include "synthetic.h"
#include "test_support.h"

namespace biocoref {
namespace {

namespace fs = std::filesystem;
using testing::Res;

constexpr int kSyntheticCases = 1000;
constexpr double kFixtureBudgetSeconds = 5.0;

struct Outcome {
  bool pass = true;
  std::string detail;
  void Fail(const std::string &why) {
    if (pass) detail = why;
    pass = false;
  }
};

void Report(int n, const std::string &title, const Outcome &o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << title
            << " (" << o.detail << ")" << std::endl;
}

std::string Shell(const std::string &command, int *status) {
  std::string out;
  FILE *pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    *status = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  *status = pclose(pipe);
  return out;
}

std::vector<Document> Synthetic() {
  testing::SyntheticCorpus corpus(Res().dict, Res().schema);
  std::vector<Document> docs;
  for (int seed = 0; seed < kSyntheticCases; ++seed) {
    docs.push_back(corpus.Generate(seed, "syn" + std::to_string(seed)));
  }
  return docs;
}

Outcome FixtureSuite(const nlohmann::json &manifest) {
  Outcome o;
  int assertions = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto &[name, expect] : manifest["fixtures"].items()) {
    for (const std::string &f : testing::CheckFixture(name, expect)) o.Fail(f);
    ++assertions;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (assertions != manifest["totals"]["docs"].get<int>()) {
    o.Fail("manifest lists " + std::to_string(assertions) + " fixtures");
  }
  if (seconds >= kFixtureBudgetSeconds) {
    o.Fail("runtime " + std::to_string(seconds) + " s");
  }
  if (o.pass) {
    std::ostringstream s;
    s << assertions << " fixtures, every manifest assertion holds, "
      << static_cast<int>(seconds * 1000) << " ms";
    o.detail = s.str();
  }
  return o;
}

// Two arguments of one completed event never share a chain.
bool ChainMatesRelated(const Document &doc, const ResolverConfig &config,
                       std::string *which) {
  Resolution r = Resolve(doc, config);
  ResultDocument result = Process(doc, config);
  for (const CompletedEvent &c : result.completed) {
    const auto &args = c.event.args;
    for (std::size_t i = 0; i < args.size(); ++i) {
      for (std::size_t j = i + 1; j < args.size(); ++j) {
        if (args[i].ref == args[j].ref ||
            (doc.FindEntity(args[i].ref) && doc.FindEntity(args[j].ref) &&
             r.state.SameChain(args[i].ref, args[j].ref))) {
          *which = doc.doc_id() + " " + c.event.id;
          return true;
        }
      }
    }
  }
  return false;
}

Outcome NegativeControls(const std::vector<Document> &synthetic) {
  Outcome o;
  const ResolverConfig config = Res().Config({}, true);
  ResultDocument ikb = Process(testing::Fixture("ex17_ikappab"), config);
  if (!ikb.links.empty()) o.Fail("IκB fixture produced a link");

  Document kinase = testing::Fixture("neg_a_kinase");
  for (const AnaphorCandidate &c : DetectCandidates(kinase, Res().dict)) {
    if (c.mention_id == "T1") o.Fail("\"A kinase\" detected as an anaphor");
  }
  if (testing::LinkOf(Process(kinase, config), "T1")) {
    o.Fail("\"A kinase\" resolved");
  }

  const Document doc_promotion = testing::Fixture("neg_promotion");
  Resolution promotion = Resolve(doc_promotion, config);
  for (const AnaphorTrace &t : promotion.traces) {
    if (t.anaphor_id != "E3") continue;
    for (const SieveAttempt &a : t.attempts) {
      if (!a.steps.empty()) o.Fail("\"The promotion\" searched by " + a.sieve);
    }
    if (t.linked) o.Fail("\"The promotion\" linked");
  }

  std::string which;
  int docs = 0;
  for (const FixtureSpec &spec : ExampleFixtures()) {
    ++docs;
    if (ChainMatesRelated(testing::Build(spec), config, &which)) {
      o.Fail("chain-mates related in " + which);
    }
  }
  for (const Document &doc : synthetic) {
    ++docs;
    if (ChainMatesRelated(doc, config, &which)) {
      o.Fail("chain-mates related in " + which);
    }
  }
  if (o.pass) {
    o.detail = "no IκB link, no indefinite resolution, promotion unsearched, " +
               std::to_string(docs) + " documents without chain-mate events";
  }
  return o;
}

Outcome Properties(const std::vector<Document> &synthetic) {
  Outcome o;
  const ResolverConfig config = Res().Config({}, true);
  int links = 0;
  for (const Document &doc : synthetic) {
    const std::string where = doc.doc_id();
    std::size_t seen = 0;
    std::set<std::string> resolved;
    auto observer = [&](std::string_view sieve, const CorefState &state) {
      for (int i = 0; i < doc.mention_count(); ++i) {
        const std::string &id = doc.MentionId(i);
        for (const std::string &m : state.ChainMembers(id)) {
          if (state.ChainMembers(m) != state.ChainMembers(id)) {
            o.Fail("chain partition broken in " + where);
          }
        }
      }
      for (; seen < state.links().size(); ++seen) {
        const CorefLink &l = state.links()[seen];
        if (l.sieve_name != sieve || !resolved.insert(l.anaphor_id).second) {
          o.Fail("sieve precedence violated in " + where);
        }
        try {
          ValidateLink(doc, l);
        } catch (const CorefError &e) {
          o.Fail("cataphoric link in " + where);
        }
        ++links;
      }
    };
    Resolve(doc, config, observer);
    if (SaveResult(Process(doc, config)) != SaveResult(Process(doc, config))) {
      o.Fail("non-deterministic output for " + where);
    }
  }
  std::vector<ResultDocument> one = ProcessAll(synthetic, config, 1);
  std::vector<ResultDocument> eight = ProcessAll(synthetic, config, 8);
  for (std::size_t i = 0; i < one.size(); ++i) {
    if (SaveResult(one[i]) != SaveResult(eight[i])) {
      o.Fail("jobs 1 and jobs 8 differ on " + one[i].doc.doc_id());
    }
  }
  if (o.pass) {
    o.detail = std::to_string(synthetic.size()) + " synthetic documents, " +
               std::to_string(links) + " links checked";
  }
  return o;
}

Outcome ThroughputAccounting(const nlohmann::json &manifest) {
  Outcome o;
  const fs::path dir =
      fs::temp_directory_path() / ("biocoref_accept_" + std::to_string(getpid()));
  fs::remove_all(dir);
  const std::string cli = BIOCOREF_CLI;
  int status = 0;
  Shell("'" + cli + "' resolve --in '" + testing::SourcePath("fixtures/*_*.json") +
            "' --out '" + (dir / "system").string() + "' 2>/dev/null",
        &status);
  if (status != 0) o.Fail("resolve exited with " + std::to_string(status));
  Shell("'" + cli + "' resolve --disable-sieve all --in '" +
            testing::SourcePath("fixtures/*_*.json") + "' --out '" +
            (dir / "baseline").string() + "' 2>/dev/null",
        &status);
  if (status != 0) o.Fail("baseline resolve exited with " + std::to_string(status));
  const std::string report =
      Shell("'" + cli + "' eval --system '" + (dir / "system").string() +
                "/*.json' --baseline '" + (dir / "baseline").string() +
                "/*.json' 2>/dev/null",
            &status);
  fs::remove_all(dir);
  if (status != 0) {
    o.Fail("eval exited with " + std::to_string(status));
    return o;
  }
  nlohmann::json t = nlohmann::json::parse(report)["throughput"];
  const int expected = manifest["totals"]["coref_events"].get<int>();
  if (t["coref_only"].get<int>() != expected) {
    o.Fail("coref_only " + t["coref_only"].dump() + ", manifest " +
           std::to_string(expected));
  }
  if (t["combined"].get<int>() !=
      t["baseline"].get<int>() + t["coref_only"].get<int>()) {
    o.Fail("combined is not baseline + coref_only");
  }
  if (o.pass) {
    o.detail = "baseline " + t["baseline"].dump() + " + coref_only " +
               t["coref_only"].dump() + " = combined " + t["combined"].dump();
  }
  return o;
}

Outcome MetricArithmetic() {
  Outcome o;
  std::mt19937_64 rng(2026);
  static const char *kJudgments[] = {"0", "1", "0.5"};
  for (int file = 0; file < 100; ++file) {
    const bool mutant = file % 2 == 1;
    const int n = 1 + static_cast<int>(rng() % 200);
    std::string csv = "event_id,judgment\n";
    // Oracle: the judgments summed as a fraction over n, never as a double.
    std::int64_t quarters = 0;
    for (int i = 0; i < n; ++i) {
      const int v = static_cast<int>(rng() % (mutant ? 3 : 2));
      csv += "E" + std::to_string(i) + "," + kJudgments[v] + "\n";
      quarters += v == 1 ? 4 : (v == 2 ? 2 : 0);
    }
    std::int64_t num = quarters;
    std::int64_t den = 4 * static_cast<std::int64_t>(n);
    for (std::int64_t d = den; d > 1; --d) {
      if (num % d == 0 && den % d == 0) {
        num /= d;
        den /= d;
      }
    }
    Rational p = GenerousPrecision(ParseAdjudications(csv, mutant));
    if (p.num != num || p.den != den) {
      o.Fail("file " + std::to_string(file) + ": " + p.ToString() + " vs " +
             std::to_string(num) + "/" + std::to_string(den));
    }
  }

  std::string csv = "event_id,judgment,error_class\n";
  const std::pair<const char *, int> kShape[] = {
      {"NamedEntityRecognition", 7},
      {"EventRecognition", 18},
      {"CoreferenceResolution", 25},
  };
  int id = 0;
  for (const auto &[cls, count] : kShape) {
    for (int i = 0; i < count; ++i) {
      csv += "E" + std::to_string(id++) + ",0," + cls + "\n";
    }
  }
  for (int i = 0; i < 30; ++i) csv += "E" + std::to_string(id++) + ",1,\n";
  ErrorBreakdown b = BreakDownErrors(ParseAdjudications(csv, false));
  if (b.Fraction(ErrorClass::kNamedEntityRecognition) != Rational{7, 50} ||
      b.Fraction(ErrorClass::kEventRecognition) != Rational{9, 25} ||
      b.Fraction(ErrorClass::kCoreferenceResolution) != Rational{1, 2}) {
    o.Fail("error breakdown is not {14%, 36%, 50%}");
  }
  EvalReport report;
  report.errors = b;
  const std::string table = ReportTable(report);
  for (const char *pct : {"14.0%", "36.0%", "50.0%"}) {
    if (table.find(pct) == std::string::npos) o.Fail(std::string("table lacks ") + pct);
  }
  if (o.pass) o.detail = "100 random files exact, breakdown 14% / 36% / 50%";
  return o;
}

Outcome Ablation() {
  Outcome o;
  const Document doc = testing::Fixture("ex01_gsk3b_axin");
  const CorefLink *full = nullptr;
  ResultDocument with = testing::Run(doc);
  full = testing::LinkOf(with, "T3");
  if (full == nullptr || full->antecedent_ids != std::vector<std::string>{"T2"}) {
    o.Fail("full pipeline does not link its to Axin GBD");
  }
  ResultDocument without =
      testing::Run(doc, {"exact_string", "shared_grounding"});
  const CorefLink *ablated = testing::LinkOf(without, "T3");
  if (ablated == nullptr ||
      ablated->antecedent_ids != std::vector<std::string>{"T1"} ||
      ablated->sieve_name != "pronominal") {
    o.Fail("ablated pipeline does not link its to GSK3β");
  }
  if (o.pass) o.detail = "its -> Axin GBD; without chain sieves its -> GSK3β";
  return o;
}

}  // namespace
}  // namespace biocoref

int main() {
  using namespace biocoref;
  const nlohmann::json manifest = testing::LoadManifest();
  const std::vector<Document> synthetic = Synthetic();
  Outcome results[] = {
      FixtureSuite(manifest),           NegativeControls(synthetic),
      Properties(synthetic),            ThroughputAccounting(manifest),
      MetricArithmetic(),               Ablation(),
  };
  const char *titles[] = {
      "worked-example fixture suite",
      "negative controls",
      "randomized property suite",
      "throughput accounting",
      "metric arithmetic",
      "ablation sanity",
  };
  int failed = 0;
  for (int i = 0; i < 6; ++i) {
    Report(i + 1, titles[i], results[i]);
    failed += !results[i].pass;
  }
  return failed == 0 ? 0 : 1;
}
