// Copyright 2026 The HELFI Tools Authors.
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

#include "helfi/validator.h"

#include <gtest/gtest.h>

#include <map>
#include <memory>
#include <random>
#include <set>

#include "helfi/error.h"
#include "helfi/format.h"
#include "support/generators.h"
#include "support/mutations.h"

namespace helfi {
namespace {

using testing::ReadFixture;

TEST(RuleCatalogTest, IdsAreUniqueAndResolvable) {
  std::set<std::string> ids;
  for (const Rule& r : RuleCatalog()) {
    EXPECT_TRUE(ids.insert(r.id).second) << r.id;
    EXPECT_EQ(FindRule(r.id), &r);
    EXPECT_EQ(FindRule(r.id.substr(0, r.id.find('-'))), &r);
  }
  EXPECT_EQ(ids.size(), 20u);
  EXPECT_EQ(FindRule("R9"), nullptr);
  EXPECT_EQ(FindRule("R7")->severity, Severity::kWarning);
  EXPECT_EQ(FindRule("R1")->severity, Severity::kError);
}

TEST(ValidatorTest, CleanFixturesHaveNoDiagnostics) {
  for (const char* name : {"ps001_001.tsv", "hb001_001.tsv", "two_verses.tsv"}) {
    ValidationSummary s = testing::ParseAndValidate(ReadFixture(name), true);
    EXPECT_TRUE(s.diagnostics.empty()) << name << "\n"
                                       << RenderDiagnosticsText(s);
  }
  ValidationSummary s =
      testing::ParseAndValidate(ReadFixture("two_verses.tsv"));
  EXPECT_EQ(s.verses, 2u);
  for (const Rule& r : RuleCatalog()) {
    ASSERT_TRUE(s.counts.count(r.id)) << r.id;
    EXPECT_EQ(s.counts.at(r.id).errors, 0u);
  }
  EXPECT_EQ(s.coverage.target_rows(), 19u);
}

TEST(ValidatorTest, SingleFaultMutations) {
  ASSERT_EQ(testing::SingleFaultMutations().size(), 7u);
  for (const testing::TextMutation& m : testing::SingleFaultMutations()) {
    const std::string text =
        testing::ApplyMutation(ReadFixture(m.fixture), m);
    ValidationSummary s =
        testing::ParseAndValidate(text, m.with_morph_inventory);
    ASSERT_EQ(s.diagnostics.size(), 1u) << m.rule << "\n"
                                        << RenderDiagnosticsText(s);
    EXPECT_EQ(s.diagnostics[0].rule, m.rule);
    EXPECT_EQ(s.diagnostics[0].severity, FindRule(m.rule)->severity);
  }
}

TEST(ValidatorTest, NeuvossaRelinkedToMissingToken) {
  const std::string text = ReadFixture("ps001_001.tsv");
  const std::string from = "\t\t6b\tneuvo\t";
  std::string mutated = text;
  mutated.replace(mutated.find(from), from.size(), "\t\t9\tneuvo\t");
  ValidationSummary s = testing::ParseAndValidate(mutated);
  EXPECT_EQ(s.error_count(), 1u);
  EXPECT_EQ(s.counts.at("R1-dangling-link").errors, 1u);
}

TEST(ValidatorTest, ExtractorWithoutLinksIsOneR3Error) {
  std::string text = ReadFixture("ps001_001.tsv");
  const std::string from = "\t\t6a\t%case\t";
  text.replace(text.find(from), from.size(), "\t\t-\t%case\t");
  ValidationSummary s = testing::ParseAndValidate(text);
  EXPECT_EQ(s.error_count(), 1u);
  EXPECT_EQ(s.counts.at("R3-extractor-row").errors, 1u);
}

TEST(ValidatorConfigTest, SeverityOverrides) {
  ValidatorConfig cfg = ValidatorConfig::Parse(
      "# stricter review\nrule.R7=error\nrule.R4-no-source-lemma=off\n"
      "r7.exclude_pro=false\n");
  EXPECT_EQ(cfg.SeverityFor("R7-unlinked-source"), Severity::kError);
  EXPECT_EQ(cfg.SeverityFor("R4-no-source-lemma"), std::nullopt);
  EXPECT_EQ(cfg.SeverityFor("R1-dangling-link"), Severity::kError);
  EXPECT_FALSE(cfg.r7_exclude_pro);
  EXPECT_THROW(ValidatorConfig::Parse("rule.R99=error"), Error);
  EXPECT_THROW(ValidatorConfig::Parse("rule.R1=fatal"), Error);

  const testing::TextMutation& r4 = testing::SingleFaultMutations()[3];
  CorpusParse parsed = ParseCorpusText(
      testing::ApplyMutation(ReadFixture(r4.fixture), r4),
      FormatProfile::Strict(), std::make_shared<const CorpusConfig>());
  EXPECT_TRUE(ValidateCorpus(parsed.corpus, cfg).diagnostics.empty());
}

TEST(ValidatorConfigTest, ParserDiagnosticsKeepSeverityUnlessOverridden) {
  std::vector<Diagnostic> prior = {
      {Severity::kWarning, "F2-row-kind", "ps001:001", "f", 3, "x"},
      {Severity::kError, "R6-lemma-triple", "ps001:001", "f", 4, "y"}};
  ValidatorConfig cfg;
  EXPECT_EQ(ApplyRuleConfig(prior, cfg), prior);
  cfg.Set("R6", Severity::kWarning);
  cfg.Set("F2", std::nullopt);
  std::vector<Diagnostic> out = ApplyRuleConfig(prior, cfg);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].severity, Severity::kWarning);
}

TEST(ValidatorTest, ProRowsDoNotCoverByDefault) {
  std::string text = ReadFixture("ps001_001.tsv");
  const std::string from = "\t\t5\tvaeltaa\t";
  text.replace(text.find(from), from.size(), "\t\t4\tvaeltaa\t");
  text += "ps001:001\t\t5\t%pro\t3S\t\t\n";
  CorpusParse parsed = ParseCorpusText(text, FormatProfile::Strict(),
                                       std::make_shared<const CorpusConfig>());
  ASSERT_EQ(parsed.error_count(), 0u);
  ValidatorConfig cfg;
  EXPECT_EQ(ValidateCorpus(parsed.corpus, cfg).counts.at("R7-unlinked-source")
                .warnings,
            1u);
  cfg.r7_exclude_pro = false;
  EXPECT_TRUE(ValidateCorpus(parsed.corpus, cfg).diagnostics.empty());
}

TEST(ValidatorTest, CorpusScopeChecks) {
  const std::string ps = ReadFixture("ps001_001.tsv");
  const std::string hb = ReadFixture("hb001_001.tsv");
  ValidationSummary dup = testing::ParseAndValidate(ps + hb + ps);
  ASSERT_EQ(dup.diagnostics.size(), 2u) << RenderDiagnosticsText(dup);
  EXPECT_EQ(dup.counts.at("C1-duplicate-verse").errors, 1u);
  EXPECT_EQ(dup.counts.at("C4-verse-order").warnings, 1u);

  std::string unknown = hb;
  for (std::size_t at = unknown.find("hb001"); at != std::string::npos;
       at = unknown.find("hb001", at)) {
    unknown.replace(at, 2, "zz");
  }
  ValidationSummary c2 = testing::ParseAndValidate(ps + unknown);
  ASSERT_EQ(c2.diagnostics.size(), 1u) << RenderDiagnosticsText(c2);
  EXPECT_EQ(c2.diagnostics[0].rule, "C2-book-order");

  auto lenient = [](const std::string& text) {
    CorpusParse parsed =
        ParseCorpusText(text, FormatProfile::Lenient(),
                        std::make_shared<const CorpusConfig>());
    return ValidateCorpus(parsed.corpus, {}, parsed.diagnostics);
  };
  const std::string cross = "ps001:001\t\t+1:6\tx\tSG\tx\t\n";
  EXPECT_TRUE(lenient(ps + cross + hb).diagnostics.empty());
  const std::string far = "ps001:001\t\t+1:9\tx\tSG\tx\t\n";
  ValidationSummary c3 = lenient(ps + far + hb);
  ASSERT_EQ(c3.diagnostics.size(), 1u) << RenderDiagnosticsText(c3);
  EXPECT_EQ(c3.diagnostics[0].rule, "C3-cross-verse-target");
  ValidationSummary off_end = lenient(ps + hb + "hb001:001\t\t+1:1\tx\tSG\tx\t\n");
  EXPECT_EQ(off_end.counts.at("C3-cross-verse-target").errors, 1u);
}

TEST(ValidatorTest, Deterministic) {
  std::mt19937 rng(3);
  testing::RandomVerseOptions opts;
  opts.clean = false;
  Corpus corpus = testing::RandomCorpus(rng, 300, opts);
  ValidationSummary a = ValidateCorpus(corpus);
  ValidationSummary b = ValidateCorpus(corpus);
  EXPECT_EQ(a.diagnostics, b.diagnostics);
  EXPECT_FALSE(a.diagnostics.empty());
}

// Applies one fault for `rule` to `v`; the fault triggers that rule once.
// Returns the rule actually seeded.
std::string SeedFault(std::mt19937& rng, VerseAlignment& v,
                      const std::string& rule) {
  const SourceToken& last = v.source.back();
  if (rule == "R1-dangling-link") {
    TargetToken& row = v.target[rng() % v.target.size()];
    row.links.links.push_back({TokenId{last.id.word + 1, 0}, LinkKind::kCore, 0});
  } else if (rule == "R2-source-ids") {
    SourceToken dup = last;
    dup.lemma = SourceLemma::Parse("-/b/-");
    v.source.push_back(dup);
  } else if (rule == "R3-extractor-row") {
    TargetToken row;
    row.links = LinkField::Parse("-");
    row.lemma = TargetLemma::Extractor("case");
    row.morph.atoms = {testing::RandomMorphAtoms().front()};
    v.target.insert(v.target.begin() + rng() % (v.target.size() + 1), row);
  } else if (rule == "R4-no-source-lemma") {
    TargetToken row;
    row.links = LinkField::Parse("-");
    row.lemma = TargetLemma::Plain("lisays");
    row.morph.atoms = {testing::RandomMorphAtoms().back()};
    row.surface = "lisäys";
    v.target.insert(v.target.begin() + rng() % (v.target.size() + 1), row);
  } else if (rule == "R5-morph-inventory") {
    v.source[rng() % v.source.size()].morph.atoms.push_back("XYZZY");
  } else if (rule == "R6-lemma-triple") {
    // Particles may stay unlinked; emptying one would also trip R7.
    std::vector<SourceToken*> content;
    for (SourceToken& t : v.source) {
      if (!t.lemma.strong->IsParticle()) content.push_back(&t);
    }
    if (content.empty()) {
      v.source[rng() % v.source.size()].morph.atoms.push_back("XYZZY");
      return "R5-morph-inventory";
    }
    content[rng() % content.size()]->lemma = SourceLemma{};
  } else if (rule == "R7-unlinked-source") {
    SourceToken extra = last;
    extra.id = TokenId{last.id.word + 1, 0};
    extra.lemma = SourceLemma::Parse("-/430/-");
    v.source.push_back(extra);
  }
  return rule;
}

TEST(ValidatorTest, SeededRandomFaultsAreEachReported) {
  const std::vector<std::string> seedable = {
      "R1-dangling-link", "R2-source-ids",      "R3-extractor-row",
      "R4-no-source-lemma", "R5-morph-inventory", "R6-lemma-triple",
      "R7-unlinked-source"};
  std::mt19937 rng(41);
  for (int round = 0; round < 20; ++round) {
    Corpus clean = testing::RandomCorpus(rng, 120);
    auto config = std::make_shared<CorpusConfig>(clean.config());
    config->morph_tags = testing::RandomMorphAtoms();
    Corpus corpus(config);
    std::map<std::string, std::string> seeded;  // verse -> rule
    std::map<std::string, std::size_t> per_rule;
    for (std::size_t i = 0; i < clean.size(); ++i) {
      VerseAlignment v = clean.at(i);
      if (!v.source.empty() && rng() % 3 == 0) {
        const std::string rule =
            SeedFault(rng, v, seedable[rng() % seedable.size()]);
        seeded[v.ref.ToString()] = rule;
        ++per_rule[rule];
      }
      corpus.Add(std::move(v));
    }
    ValidationSummary s = ValidateCorpus(corpus);
    ASSERT_EQ(s.diagnostics.size(), seeded.size()) << RenderDiagnosticsText(s);
    for (const Diagnostic& d : s.diagnostics) {
      ASSERT_TRUE(seeded.count(d.verse)) << d.verse << " " << d.message;
      EXPECT_EQ(seeded.at(d.verse), d.rule) << d.message;
    }
    for (const auto& [rule, n] : per_rule) {
      const RuleCount& c = s.counts.at(rule);
      EXPECT_EQ(c.errors + c.warnings, n) << rule;
    }
  }
}

TEST(RenderTest, TsvAndText) {
  const testing::TextMutation& m = testing::SingleFaultMutations()[0];
  ValidationSummary s =
      testing::ParseAndValidate(testing::ApplyMutation(ReadFixture(m.fixture), m));
  const std::string tsv = RenderDiagnosticsTsv(s.diagnostics);
  EXPECT_EQ(tsv.substr(0, tsv.find('\n')),
            "severity\trule\tverse\tfile\tline\tmessage");
  EXPECT_NE(tsv.find("error\tR1-dangling-link\tps001:001\t"), std::string::npos);
  const std::string text = RenderDiagnosticsText(s);
  EXPECT_NE(text.find("1 verses, 1 errors, 0 warnings"), std::string::npos);
}

}  // namespace
}  // namespace helfi
