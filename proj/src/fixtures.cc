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

#include "biocoref/fixtures.h"

#include <algorithm>
#include <set>

#include "biocoref/errors.h"
#include "biocoref/text.h"

namespace biocoref {

namespace {

const std::set<std::string, std::less<>> kLeading = {"(", "“", "\"", "‘", "[",
                                                     "…"};
const std::set<std::string, std::less<>> kTrailing = {
    ",", ".", ";", ":", ")", "”", "\"", "’", "]", "!", "?", "…"};

FixtureEntity Ent(std::string id, std::string surface, EntityClass label,
                  int occurrence = 1) {
  return {std::move(id), std::move(surface), occurrence, label, {}, {}};
}

FixtureEntity Mut(std::string id, std::string surface, MutationKind kind,
                  std::optional<std::string> label,
                  std::optional<std::string> grounding = std::nullopt) {
  FixtureEntity e = Ent(std::move(id), std::move(surface), EntityClass::kProtein);
  e.grounding = std::move(grounding);
  e.mutations.push_back({kind, std::move(label)});
  return e;
}

FixtureEvent Evt(std::string id, std::string trigger, std::string type,
                 std::vector<Argument> args,
                 Polarity polarity = Polarity::kUnspecified,
                 int occurrence = 1) {
  return {std::move(id), std::move(trigger), occurrence, std::move(type),
          polarity,      std::move(args)};
}

constexpr EntityClass kProtein = EntityClass::kProtein;
constexpr MutationKind kPoint = MutationKind::kPointSubstitution;

std::vector<FixtureSpec> MakeFixtures() {
  std::vector<FixtureSpec> f;
  const std::string gsk_axin =
      "… we incubated GSK3β with excess Axin GBD protein to saturate its "
      "binding to GSK3β …";
  f.push_back({"ex01_gsk3b_axin",
               {gsk_axin},
               {Ent("T1", "GSK3β", kProtein), Ent("T2", "Axin GBD", kProtein),
                Ent("T3", "its", kProtein), Ent("T4", "GSK3β", kProtein, 2)},
               {Evt("E1", "binding", "Binding",
                    {{"theme", "T3"}, {"theme", "T4"}})},
               {}});
  f.push_back(
      {"ex02_pax8",
       {"The only previous study concerned the class II paired box gene "
        "Pax8, and its interaction with Smad3."},
       {Ent("T1", "Pax8", EntityClass::kGene), Ent("T2", "its", kProtein),
        Ent("T3", "Smad3", kProtein)},
       {Evt("E1", "interaction", "Binding", {{"theme", "T2"}, {"theme", "T3"}})},
       {"previous"}});
  f.push_back(
      {"ex03_which",
       {"TGFβ signaling is initiated by the binding of TGFβ to TBRII, which "
        "leads to the recruitment of TBRI."},
       {Ent("T1", "TGFβ", kProtein), Ent("T2", "TGFβ", kProtein, 2),
        Ent("T3", "TBRII", kProtein), Ent("T4", "TBRI", kProtein)},
       {Evt("E1", "binding", "Binding", {{"theme", "T2"}, {"theme", "T3"}}),
        Evt("E2", "leads", "Regulation",
            {{"controller", "E1"}, {"controlled", "E3"}}, Polarity::kPositive),
        Evt("E3", "recruitment", "Translocation", {{"theme", "T4"}})},
       {}});
  const std::string central =
      "Central to the hyperphosphorylation of Tau was the activation of "
      "GSK-3β (glycogen synthase kinase 3 beta) …";
  f.push_back({"ex04_appositive",
               {central},
               {Ent("T1", "Tau", kProtein), Ent("T2", "GSK-3β", kProtein),
                Ent("T3", "glycogen synthase kinase 3 beta", kProtein)},
               {Evt("E1", "hyperphosphorylation", "Phosphorylation",
                    {{"theme", "T1"}}),
                Evt("E2", "activation", "Activation", {{"theme", "T2"}})},
               {}});
  f.push_back(
      {"ex05_pik3ca_braf",
       {"… PIK3CA and BRAF are, in part, regulated by direct binding to "
        "activated forms of the Ras proteins …"},
       {Ent("T1", "PIK3CA", kProtein), Ent("T2", "BRAF", kProtein),
        Ent("T3", "Ras", EntityClass::kFamily)},
       {Evt("E1", "binding", "Binding",
            {{"theme1", "T1"}, {"theme1", "T2"}, {"theme2", "T3"}})},
       {"direct", "activated"}});
  f.push_back(
      {"ex06_cbl_mlk3",
       {"… while over-expressed c-Cbl stabilized “activated” MLK3, it "
        "suppressed its capacity to promote phosphorylation …"},
       {Ent("T1", "c-Cbl", kProtein), Ent("T2", "MLK3", kProtein),
        Ent("T3", "it", kProtein), Ent("T4", "its", kProtein)},
       {Evt("E1", "stabilized", "Regulation",
            {{"controller", "T1"}, {"controlled", "T2"}}, Polarity::kPositive),
        Evt("E2", "suppressed", "Regulation",
            {{"controller", "T3"}, {"controlled", "T4"}},
            Polarity::kNegative)},
       {"over-expressed"}});
  f.push_back({"ex07_s34a",
               {"The anti-pSer34 antibody reacted with AATYK1A but not with "
                "the S34A mutant …"},
               {Ent("T1", "AATYK1A", kProtein),
                Mut("T2", "the S34A mutant", kPoint, "S34A")},
               {},
               {}});
  f.push_back(
      {"ex08_k134a",
       {"… we prepared recombinant H2AX-K134A …",
        "The intensity of the band corresponding to histone H2AX methylation "
        "was significantly diminished in the K134A mutant compared with that "
        "of wild-type H2AX (H2AX-WT) …"},
       {Mut("T1", "H2AX-K134A", kPoint, "K134A", "uniprot:P16104"),
        Ent("T2", "H2AX", kProtein), Mut("T3", "the K134A mutant", kPoint, "K134A"),
        Ent("T4", "H2AX", kProtein, 2), Ent("T5", "H2AX-WT", kProtein)},
       {Evt("E1", "methylation", "Methylation", {{"theme", "T2"}})},
       {"recombinant", "wild-type"}});
  {
    FixtureSpec s{
        "ex09_fgfr3",
        {"Cells were transfected with N540K, G380R, R248C, Y373C, K650M and "
         "K650E-FGFR3 mutants … all six FGFR3 mutants induced activatory "
         "ERK(T202/Y204) phosphorylation …"},
        {},
        {},
        {"activatory"}};
    const char *labels[] = {"N540K", "G380R", "R248C", "Y373C", "K650M"};
    int n = 0;
    for (const char *l : labels) {
      s.entities.push_back(Mut("T" + std::to_string(++n), l, kPoint, l,
                               "uniprot:P22607"));
    }
    s.entities.push_back(
        Mut("T6", "K650E-FGFR3", kPoint, "K650E", "uniprot:P22607"));
    s.entities.push_back(Mut("T7", "all six FGFR3 mutants",
                             MutationKind::kUnknownMutation, std::nullopt));
    s.entities.push_back(Ent("T8", "FGFR3", kProtein));
    s.entities.push_back(Ent("T9", "ERK", kProtein));
    s.events = {Evt("E1", "phosphorylation", "Phosphorylation", {{"theme", "T9"}}),
                Evt("E2", "induced", "Regulation",
                    {{"controller", "T7"}, {"controlled", "E1"}},
                    Polarity::kPositive)};
    f.push_back(std::move(s));
  }
  f.push_back({"ex10_gsk3b",
               {gsk_axin},
               {Ent("T1", "GSK3β", kProtein), Ent("T2", "Axin GBD", kProtein),
                Ent("T3", "its", kProtein), Ent("T4", "GSK3β", kProtein, 2)},
               {Evt("E1", "binding", "Binding",
                    {{"theme", "T3"}, {"theme", "T4"}})},
               {}});
  f.push_back({"ex11_gsk3b_grounding",
               {central, "It phosphorylates GSK-3β."},
               {Ent("T1", "Tau", kProtein), Ent("T2", "GSK-3β", kProtein),
                Ent("T3", "glycogen synthase kinase 3 beta", kProtein),
                Ent("T4", "It", kProtein), Ent("T5", "GSK-3β", kProtein, 2)},
               {Evt("E1", "hyperphosphorylation", "Phosphorylation",
                    {{"theme", "T1"}}),
                Evt("E2", "activation", "Activation", {{"theme", "T2"}}),
                Evt("E3", "phosphorylates", "Phosphorylation",
                    {{"cause", "T4"}, {"theme", "T5"}})},
               {}});
  f.push_back({"ex12_foxp3",
               {"FOXP3 is an essential transcription factor …; however, the "
                "mechanisms regulating its expression are as yet unknown."},
               {Ent("T1", "FOXP3", kProtein), Ent("T2", "its", kProtein)},
               {Evt("E1", "expression", "Expression", {{"theme", "T2"}})},
               {"essential"}});
  f.push_back(
      {"ex13_rb",
       {"… Rb binds to E2F.",
        "The protein also inhibits the transactivation capacity of E2F."},
       {Ent("T1", "Rb", kProtein), Ent("T2", "E2F", kProtein),
        Ent("T3", "The protein", kProtein), Ent("T4", "E2F", kProtein, 2)},
       {Evt("E1", "binds", "Binding", {{"theme", "T1"}, {"theme", "T2"}}),
        Evt("E2", "inhibits", "Regulation",
            {{"controller", "T3"}, {"controlled", "T4"}},
            Polarity::kNegative)},
       {}});
  f.push_back(
      {"ex14_rsmad",
       {"… the receptor Smads (Smad-1, Smad-5, and Smad-8).",
        "The R-Smads then form complexes with the co-Smad (Smad4) and are "
        "translocated into the nucleus …"},
       {Ent("T1", "Smad-1", kProtein), Ent("T2", "Smad-5", kProtein),
        Ent("T3", "Smad-8", kProtein), Ent("T4", "The R-Smads", kProtein),
        Ent("T5", "Smad4", kProtein),
        Ent("T6", "nucleus", EntityClass::kCellularComponent)},
       {Evt("E1", "form complexes", "Binding",
            {{"theme", "T4"}, {"theme", "T5"}}),
        Evt("E2", "translocated", "Translocation",
            {{"theme", "T4"}, {"destination", "T6"}})},
       {}});
  f.push_back({"ex15_headmatch",
               {"… in the enzyme guanylate cyclase.",
                "As a result, the enzyme becomes active and catalyses the "
                "production of more cGMP from GTP."},
               {Ent("T1", "guanylate cyclase", kProtein),
                Ent("T2", "the enzyme", kProtein, 2),
                Ent("T3", "cGMP", EntityClass::kSimpleChemical),
                Ent("T4", "GTP", EntityClass::kSimpleChemical)},
               {Evt("E1", "becomes active", "Activation", {{"theme", "T2"}})},
               {}});
  f.push_back(
      {"ex16_cul4a",
       {"… endogenous BAF and emerin consistently “co-peaked” in their "
        "interaction with FLAG-CUL4A after UV-treatment."},
       {Ent("T1", "BAF", kProtein), Ent("T2", "emerin", kProtein),
        Ent("T3", "their", kProtein), Ent("T4", "FLAG-CUL4A", kProtein)},
       {Evt("E1", "interaction", "Binding", {{"theme", "T3"}, {"theme", "T4"}})},
       {"endogenous"}});
  f.push_back(
      {"ex17_ikappab",
       {"Two related kinases, IκB kinase α (IKKα) and IKKβ, phosphorylate "
        "the IκB proteins …"},
       {Ent("T1", "IκB kinase α", kProtein), Ent("T2", "IKKα", kProtein),
        Ent("T3", "IKKβ", kProtein),
        Ent("T4", "the IκB proteins", EntityClass::kFamily)},
       {Evt("E1", "phosphorylate", "Phosphorylation",
            {{"cause", "T1"}, {"cause", "T3"}, {"theme", "T4"}})},
       {"related"}});
  f.push_back(
      {"ex18_ll37",
       {"LL-37 forms a complex together with the IGF-1R … and this binding "
        "results in IGF-1R activation …"},
       {Ent("T1", "LL-37", kProtein), Ent("T2", "IGF-1R", kProtein),
        Ent("T3", "IGF-1R", kProtein, 2)},
       {Evt("E1", "forms a complex", "Binding",
            {{"theme", "T1"}, {"theme", "T2"}}),
        Evt("E2", "binding", "Binding", {}),
        Evt("E3", "results", "Regulation",
            {{"controller", "E2"}, {"controlled", "E4"}}, Polarity::kPositive),
        Evt("E4", "activation", "Activation", {{"theme", "T3"}})},
       {}});
  f.push_back(
      {"neg_a_kinase",
       {"A kinase phosphorylates Rb.", "This kinase also phosphorylates E2F."},
       {Ent("T1", "A kinase", kProtein), Ent("T2", "Rb", kProtein),
        Ent("T3", "This kinase", kProtein), Ent("T4", "E2F", kProtein)},
       {Evt("E1", "phosphorylates", "Phosphorylation",
            {{"cause", "T1"}, {"theme", "T2"}}),
        Evt("E2", "phosphorylates", "Phosphorylation",
            {{"cause", "T3"}, {"theme", "T4"}}, Polarity::kUnspecified, 2)},
       {}});
  f.push_back(
      {"neg_promotion",
       {"Insulin promotes Akt activation.",
        "The promotion results in GSK3β phosphorylation."},
       {Ent("T1", "Insulin", kProtein), Ent("T2", "Akt", kProtein),
        Ent("T3", "GSK3β", kProtein)},
       {Evt("E1", "promotes", "Regulation",
            {{"controller", "T1"}, {"controlled", "E2"}}, Polarity::kPositive),
        Evt("E2", "activation", "Activation", {{"theme", "T2"}}),
        Evt("E3", "promotion", "Regulation", {}, Polarity::kPositive),
        Evt("E4", "results", "Regulation",
            {{"controller", "E3"}, {"controlled", "E5"}}, Polarity::kPositive),
        Evt("E5", "phosphorylation", "Phosphorylation", {{"theme", "T3"}})},
       {}});
  f.push_back(
      {"neg_expletive",
       {"It is hypothesized that Rac1 binds PAK1."},
       {Ent("T1", "It", kProtein), Ent("T2", "Rac1", kProtein),
        Ent("T3", "PAK1", kProtein)},
       {Evt("E1", "binds", "Binding", {{"theme", "T2"}, {"theme", "T3"}}),
        Evt("E2", "binds", "Binding", {{"theme", "T1"}, {"theme", "T3"}})},
       {}});
  f.push_back(
      {"neg_cataphor",
       {"After its release from IκBα, NF-κB p65 can undergo "
        "post-translational modification to activate gene transcription."},
       {Ent("T1", "its", kProtein), Ent("T2", "IκBα", kProtein),
        Ent("T3", "NF-κB p65", kProtein)},
       {Evt("E1", "release", "Translocation", {{"theme", "T1"}})},
       {"post-translational"}});
  return f;
}

// Code points of a UTF-8 string.
std::vector<std::string> CodePoints(std::string_view s) {
  Utf8Text text{std::string(s)};
  std::vector<std::string> out;
  out.reserve(text.size());
  for (int i = 0; i < text.size(); ++i) out.emplace_back(text.At(i));
  return out;
}

}  // namespace

std::vector<Span> FixtureTokenize(std::string_view text) {
  std::vector<std::string> cps = CodePoints(text);
  const int n = static_cast<int>(cps.size());
  std::vector<Span> tokens;
  int i = 0;
  while (i < n) {
    if (cps[i] == " ") {
      ++i;
      continue;
    }
    int j = i;
    while (j < n && cps[j] != " ") ++j;
    // Pieces between parentheses, each parenthesis a token of its own.
    int p = i;
    for (int k = i; k <= j; ++k) {
      if (k < j && cps[k] != "(" && cps[k] != ")") continue;
      int b = p;
      int e = k;
      std::vector<Span> tail;
      while (b < e && kLeading.contains(cps[b])) {
        tokens.push_back({b, b + 1});
        ++b;
      }
      while (e > b && kTrailing.contains(cps[e - 1])) {
        tail.push_back({e - 1, e});
        --e;
      }
      if (b < e) tokens.push_back({b, e});
      tokens.insert(tokens.end(), tail.rbegin(), tail.rend());
      if (k < j) tokens.push_back({k, k + 1});
      p = k + 1;
    }
    i = j;
  }
  return tokens;
}

Document BuildFixture(const FixtureSpec &spec, const TriggerDictionary &dict,
                      const ArgSchema *schema) {
  std::string text;
  std::vector<Sentence> sentences;
  int offset = 0;
  for (std::size_t i = 0; i < spec.sentences.size(); ++i) {
    if (i > 0) {
      text += " ";
      ++offset;
    }
    const std::string &s = spec.sentences[i];
    Sentence sentence;
    sentence.index = static_cast<int>(i);
    const int length = CodePointLength(s);
    sentence.span = {offset, offset + length};
    for (Span t : FixtureTokenize(s)) {
      sentence.tokens.push_back({{t.start + offset, t.end + offset}, "", {}});
    }
    sentences.push_back(std::move(sentence));
    text += s;
    offset += length;
  }

  const std::vector<std::string> cps = CodePoints(text);
  std::set<int> starts;
  std::set<int> ends;
  for (const Sentence &s : sentences) {
    for (const Token &t : s.tokens) {
      starts.insert(t.span.start);
      ends.insert(t.span.end);
    }
  }
  auto locate = [&](const std::string &surface, int occurrence) -> Span {
    const std::vector<std::string> needle = CodePoints(surface);
    const int m = static_cast<int>(needle.size());
    int seen = 0;
    for (int i = 0; i + m <= static_cast<int>(cps.size()); ++i) {
      if (!starts.contains(i) || !ends.contains(i + m)) continue;
      if (!std::equal(needle.begin(), needle.end(), cps.begin() + i)) continue;
      if (++seen == occurrence) return {i, i + m};
    }
    throw CorefError(ErrorCode::kConfig, spec.name,
                     "cannot locate '" + surface + "' occurrence " +
                         std::to_string(occurrence));
  };

  std::vector<EntityMention> entities;
  for (const FixtureEntity &e : spec.entities) {
    EntityMention m;
    m.id = e.id;
    m.span = locate(e.surface, e.occurrence);
    m.label = e.label;
    m.grounding_id = e.grounding;
    m.mutations = e.mutations;
    entities.push_back(std::move(m));
  }
  std::vector<EventMention> events;
  for (const FixtureEvent &e : spec.events) {
    EventMention m;
    m.id = e.id;
    m.trigger = locate(e.trigger, e.occurrence);
    m.type = e.type;
    m.polarity = e.polarity;
    m.args = e.args;
    events.push_back(std::move(m));
  }

  Utf8Text utf8(text);
  for (Sentence &s : sentences) {
    for (Token &t : s.tokens) {
      const std::string word = ToLower(utf8.Slice(t.span));
      bool in_entity = std::any_of(
          entities.begin(), entities.end(),
          [&](const EntityMention &e) { return e.span.Contains(t.span); });
      if (dict.IsDeterminer(word)) {
        t.pos = PosTag::kDet;
      } else if (dict.Pronoun(word)) {
        t.pos = PosTag::kPron;
      } else if (dict.Numeral(word)) {
        t.pos = PosTag::kNum;
      } else if (IsPunctuation(word)) {
        t.pos = PosTag::kOther;
      } else if (in_entity || dict.IsLexiconNoun(word)) {
        t.pos = PosTag::kNoun;
      } else if (std::find(spec.adjectives.begin(), spec.adjectives.end(),
                           word) != spec.adjectives.end()) {
        t.pos = PosTag::kAdj;
      } else {
        t.pos = PosTag::kOther;
      }
    }
  }
  return Document(spec.name, std::move(text), std::move(sentences),
                  std::move(entities), std::move(events), schema);
}

const std::vector<FixtureSpec> &ExampleFixtures() {
  static const std::vector<FixtureSpec> kFixtures = MakeFixtures();
  return kFixtures;
}

}  // namespace biocoref
