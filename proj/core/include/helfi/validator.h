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

#ifndef HELFI_VALIDATOR_H_
#define HELFI_VALIDATOR_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "helfi/alignment.h"
#include "helfi/diagnostic.h"
#include "helfi/model.h"

namespace helfi {

enum class RuleScope { kFormat, kVerse, kCorpus };

struct Rule {
  std::string id;
  Severity severity = Severity::kError;  // default severity
  std::string description;
  RuleScope scope = RuleScope::kVerse;
};

// Every rule id any diagnostic may carry, in report order.
const std::vector<Rule>& RuleCatalog();

// Accepts the full id ("R1-dangling-link") or its short form ("R1").
const Rule* FindRule(std::string_view id);

class ValidatorConfig {
 public:
  // Effective severity, or nullopt when the rule is switched off.
  std::optional<Severity> SeverityFor(std::string_view rule) const;
  void Set(std::string_view rule, std::optional<Severity> severity);

  // Links from %pro rows do not make a source token count as covered.
  bool r7_exclude_pro = true;

  // Lines of `rule.<id>=error|warning|off` and `r7.exclude_pro=true|false`.
  static ValidatorConfig Parse(std::string_view text);
  static ValidatorConfig Load(const std::string& path);

 private:
  std::map<std::string, std::optional<Severity>> overrides_;
};

std::vector<Diagnostic> ValidateVerse(const VerseAlignment& verse,
                                      const CorpusConfig& corpus_config,
                                      const ValidatorConfig& config = {});

// Re-grades diagnostics produced elsewhere (e.g. by the parser) under
// `config`, dropping those whose rule is off.
std::vector<Diagnostic> ApplyRuleConfig(std::vector<Diagnostic> diagnostics,
                                        const ValidatorConfig& config);

struct RuleCount {
  std::size_t errors = 0;
  std::size_t warnings = 0;
};

struct ValidationSummary {
  std::vector<Diagnostic> diagnostics;
  std::map<std::string, RuleCount> counts;  // every catalog rule present
  CoverageStats coverage;
  std::size_t verses = 0;

  std::size_t error_count() const { return CountErrors(diagnostics); }
};

// Per-verse diagnostics in corpus order followed by corpus-scope checks.
// `prior` (typically parser output) is folded into the summary first.
ValidationSummary ValidateCorpus(const Corpus& corpus,
                                 const ValidatorConfig& config = {},
                                 std::vector<Diagnostic> prior = {});

std::string RenderDiagnosticsTsv(const std::vector<Diagnostic>& diagnostics);
std::string RenderDiagnosticsText(const ValidationSummary& summary);

}  // namespace helfi

#endif  // HELFI_VALIDATOR_H_
