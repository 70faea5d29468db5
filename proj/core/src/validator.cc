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

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "helfi/config.h"
#include "helfi/error.h"
#include "helfi/format.h"

namespace helfi {
namespace {

std::string_view ShortId(std::string_view id) {
  return id.substr(0, id.find('-'));
}

std::optional<Severity> ParseSeverity(const ConfigEntry& e) {
  if (e.value == "error") return Severity::kError;
  if (e.value == "warning") return Severity::kWarning;
  if (e.value == "off") return std::nullopt;
  throw Error(ErrorCode::kConfig, "rules line " + std::to_string(e.line) +
                                      ": severity must be error, warning or "
                                      "off");
}

class VerseChecker {
 public:
  VerseChecker(const VerseAlignment& verse, const CorpusConfig& corpus_config,
               const ValidatorConfig& config)
      : verse_(verse),
        corpus_config_(corpus_config),
        config_(config),
        label_(verse.ref.ToString()) {}

  std::vector<Diagnostic> Run() {
    CheckLinks();
    CheckSourceIds();
    CheckExtractorRows();
    CheckNoSourceLemmas();
    CheckMorphology();
    CheckLemmaTriples();
    CheckCoverage();
    return std::move(diags_);
  }

 private:
  void Report(std::string_view rule, std::string message) {
    std::optional<Severity> sev = config_.SeverityFor(rule);
    if (!sev) return;
    diags_.push_back(
        Diagnostic{*sev, std::string(rule), label_, {}, 0, std::move(message)});
  }

  static std::string Row(std::size_t pos) {
    return "target row " + std::to_string(pos + 1);
  }

  void CheckLinks() {
    for (std::size_t pos = 0; pos < verse_.target.size(); ++pos) {
      for (const LinkRef& l : verse_.target[pos].links.links) {
        if (l.is_cross_verse()) continue;
        if (verse_.FindSource(l.target) == nullptr) {
          Report(rules::kDanglingLink, Row(pos) + " links to missing token " +
                                           l.target.ToString());
        }
      }
    }
  }

  void CheckSourceIds() {
    const std::vector<SourceToken>& src = verse_.source;
    for (std::size_t i = 0; i < src.size(); ++i) {
      const TokenId& id = src[i].id;
      if (id.word <= 0 || (id.has_sub() && (id.sub < 'a' || id.sub > 'z'))) {
        Report(rules::kSourceIds, "invalid token id " + id.ToString());
        continue;
      }
      if (i == 0) {
        if (id.has_sub() && id.sub != 'a') {
          Report(rules::kSourceIds, "subtokens of word " +
                                        std::to_string(id.word) +
                                        " must start at 'a'");
        }
        continue;
      }
      const TokenId& prev = src[i - 1].id;
      if (!(prev < id)) {
        Report(rules::kSourceIds, "token id " + id.ToString() +
                                      " does not follow " + prev.ToString());
      } else if (prev.word == id.word) {
        if (!prev.has_sub()) {
          Report(rules::kSourceIds, "word " + std::to_string(id.word) +
                                        " has both a bare and a lettered id");
        } else if (id.sub != prev.sub + 1) {
          Report(rules::kSourceIds, "subtoken " + id.ToString() +
                                        " skips letters after " +
                                        prev.ToString());
        }
      } else if (id.has_sub() && id.sub != 'a') {
        Report(rules::kSourceIds, "subtokens of word " +
                                      std::to_string(id.word) +
                                      " must start at 'a'");
      }
    }
  }

  void CheckExtractorRows() {
    for (std::size_t pos = 0; pos < verse_.target.size(); ++pos) {
      const TargetToken& row = verse_.target[pos];
      if (row.lemma.is_extractor()) {
        if (row.links.IsNoSource()) {
          Report(rules::kExtractorRow,
                 Row(pos) + ": extractor %" + row.lemma.text +
                     " has no source link");
        }
      } else if (row.surface.empty()) {
        Report(rules::kExtractorRow,
               Row(pos) + ": row without a word form must be an extractor");
      }
    }
  }

  void CheckNoSourceLemmas() {
    for (std::size_t pos = 0; pos < verse_.target.size(); ++pos) {
      const TargetToken& row = verse_.target[pos];
      if (row.links.IsNoSource() && row.lemma.is_plain()) {
        Report(rules::kNoSourceLemma,
               Row(pos) + ": unlinked lemma '" + row.lemma.text +
                   "' should be parenthesized");
      }
    }
  }

  void CheckMorphology() {
    if (corpus_config_.morph_tags.empty()) return;
    auto check = [&](const MorphTags& tags, const std::string& where) {
      for (const std::string& atom : tags.atoms) {
        if (!corpus_config_.IsKnownMorphTag(atom)) {
          Report(rules::kMorphInventory,
                 where + ": unknown morphology tag '" + atom + "'");
        }
      }
    };
    for (const SourceToken& tok : verse_.source) {
      check(tok.morph, "source token " + tok.id.ToString());
    }
    for (std::size_t pos = 0; pos < verse_.target.size(); ++pos) {
      check(verse_.target[pos].morph, Row(pos));
    }
  }

  void CheckLemmaTriples() {
    for (const SourceToken& tok : verse_.source) {
      const SourceLemma& l = tok.lemma;
      std::string what;
      if (!l.lemma && !l.strong && !l.concord) {
        what = "all lemma slots are empty";
      } else if (l.lemma && (l.lemma->empty() ||
                             l.lemma->find_first_of("/\t\n") !=
                                 std::string::npos)) {
        what = "invalid lemma '" + *l.lemma + "'";
      } else if (l.concord && *l.concord <= 0) {
        what = "concordance number must be positive";
      } else if (l.strong) {
        try {
          if (StrongCode::Parse(l.strong->ToString()) != *l.strong) {
            what = "Strong code does not round-trip";
          }
        } catch (const Error&) {
          what = "invalid Strong code";
        }
      }
      if (!what.empty()) {
        Report(rules::kLemmaTriple,
               "source token " + tok.id.ToString() + ": " + what);
      }
    }
  }

  void CheckCoverage() {
    std::set<TokenId> covered;
    for (const TargetToken& row : verse_.target) {
      if (config_.r7_exclude_pro && row.lemma.is_extractor() &&
          row.lemma.text == "pro") {
        continue;
      }
      for (const LinkRef& l : row.links.links) {
        if (!l.is_cross_verse()) covered.insert(l.target);
      }
    }
    for (const SourceToken& tok : verse_.source) {
      if (tok.lemma.strong && tok.lemma.strong->IsParticle()) continue;
      if (!covered.count(tok.id)) {
        Report(rules::kUnlinkedSource, "source token " + tok.id.ToString() +
                                           " '" + tok.surface +
                                           "' is not linked");
      }
    }
  }

  const VerseAlignment& verse_;
  const CorpusConfig& corpus_config_;
  const ValidatorConfig& config_;
  const std::string label_;
  std::vector<Diagnostic> diags_;
};

std::vector<Diagnostic> CorpusChecks(const Corpus& corpus,
                                     const ValidatorConfig& config) {
  std::vector<Diagnostic> out;
  auto report = [&](std::string_view rule, const VerseRef& ref,
                    std::string message) {
    if (auto sev = config.SeverityFor(rule)) {
      out.push_back(Diagnostic{*sev, std::string(rule), ref.ToString(), {}, 0,
                               std::move(message)});
    }
  };
  const BookOrder& books = corpus.config().book_order;
  const std::vector<std::size_t> order = corpus.CanonicalOrder();
  std::vector<std::size_t> rank(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;
  std::set<std::string> seen_refs;
  std::set<std::string> unknown_books;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const VerseAlignment* v = &corpus.at(i);
    if (!seen_refs.insert(v->ref.ToString()).second) {
      report(rules::kDuplicateVerse, v->ref, "verse block occurs more than once");
    }
    if (!books.Contains(v->ref.book) &&
        unknown_books.insert(v->ref.book).second) {
      report(rules::kBookOrder, v->ref,
             "book '" + v->ref.book + "' is not in the book order");
    }
    for (std::size_t pos = 0; pos < v->target.size(); ++pos) {
      for (const LinkRef& l : v->target[pos].links.links) {
        if (!l.is_cross_verse()) continue;
        const long k = static_cast<long>(rank[i]) + l.verse_offset;
        const VerseAlignment* other =
            k >= 0 && k < static_cast<long>(order.size())
                ? &corpus.at(order[static_cast<std::size_t>(k)])
                : nullptr;
        if (other == nullptr) {
          report(rules::kCrossVerseTarget, v->ref,
                 "target row " + std::to_string(pos + 1) + ": link " +
                     l.ToString() + " points outside the corpus");
        } else if (other->FindSource(l.target) == nullptr) {
          report(rules::kCrossVerseTarget, v->ref,
                 "target row " + std::to_string(pos + 1) + ": " +
                     other->ref.ToString() + " has no token " +
                     l.target.ToString());
        }
      }
    }
  }
  return out;
}

}  // namespace

const std::vector<Rule>& RuleCatalog() {
  using S = Severity;
  using R = RuleScope;
  static const std::vector<Rule> catalog = {
      {std::string(rules::kColumns), S::kError,
       "row does not have the expected number of columns", R::kFormat},
      {std::string(rules::kRowKind), S::kError,
       "row is neither a source nor a target row", R::kFormat},
      {std::string(rules::kVerseRef), S::kError,
       "malformed or inconsistent verse reference", R::kFormat},
      {std::string(rules::kTokenId), S::kError, "malformed token id",
       R::kFormat},
      {std::string(rules::kLinkField), S::kError, "malformed linked-ids field",
       R::kFormat},
      {std::string(rules::kTargetLemma), S::kError,
       "malformed target lemma or unknown extractor", R::kFormat},
      {std::string(rules::kMorphology), S::kError,
       "malformed morphology field", R::kFormat},
      {std::string(rules::kSurface), S::kError,
       "missing word form or misplaced transliteration", R::kFormat},
      {std::string(rules::kEmptyBlock), S::kError, "verse block has no rows",
       R::kFormat},
      {std::string(rules::kDanglingLink), S::kError,
       "link points to a source token that does not exist", R::kVerse},
      {std::string(rules::kSourceIds), S::kError,
       "source token ids are not a well-formed sequence", R::kVerse},
      {std::string(rules::kExtractorRow), S::kError,
       "extractor rows need a source link and word-less rows need an "
       "extractor lemma",
       R::kVerse},
      {std::string(rules::kNoSourceLemma), S::kWarning,
       "rows without source support should carry a parenthesized lemma",
       R::kVerse},
      {std::string(rules::kMorphInventory), S::kWarning,
       "morphology tag outside the configured inventory", R::kVerse},
      {std::string(rules::kLemmaTriple), S::kError,
       "invalid lemma/Strong/concordance triple", R::kVerse},
      {std::string(rules::kUnlinkedSource), S::kWarning,
       "source content token is not linked", R::kVerse},
      {std::string(rules::kDuplicateVerse), S::kError,
       "verse block occurs more than once", R::kCorpus},
      {std::string(rules::kBookOrder), S::kError,
       "book code missing from the book order", R::kCorpus},
      {std::string(rules::kCrossVerseTarget), S::kError,
       "cross-verse link does not resolve", R::kCorpus},
      {std::string(rules::kVerseOrder), S::kWarning,
       "verse blocks out of canonical order", R::kCorpus},
  };
  return catalog;
}

const Rule* FindRule(std::string_view id) {
  for (const Rule& r : RuleCatalog()) {
    if (r.id == id || ShortId(r.id) == id) return &r;
  }
  return nullptr;
}

std::optional<Severity> ValidatorConfig::SeverityFor(
    std::string_view rule) const {
  auto it = overrides_.find(std::string(rule));
  if (it != overrides_.end()) return it->second;
  const Rule* r = FindRule(rule);
  return r ? std::optional<Severity>(r->severity) : std::nullopt;
}

void ValidatorConfig::Set(std::string_view rule,
                          std::optional<Severity> severity) {
  const Rule* r = FindRule(rule);
  if (r == nullptr) {
    throw Error(ErrorCode::kConfig, "unknown rule '" + std::string(rule) + "'");
  }
  overrides_[r->id] = severity;
}

ValidatorConfig ValidatorConfig::Parse(std::string_view text) {
  ValidatorConfig config;
  for (const ConfigEntry& e : ParseKeyValues(text, "rules")) {
    if (e.key.rfind("rule.", 0) == 0) {
      config.Set(std::string_view(e.key).substr(5), ParseSeverity(e));
    } else if (e.key == "r7.exclude_pro") {
      config.r7_exclude_pro = ParseBool(e);
    } else {
      throw Error(ErrorCode::kConfig, "rules line " + std::to_string(e.line) +
                                          ": unknown key '" + e.key + "'");
    }
  }
  return config;
}

ValidatorConfig ValidatorConfig::Load(const std::string& path) {
  return Parse(ReadFile(path));
}

std::vector<Diagnostic> ValidateVerse(const VerseAlignment& verse,
                                      const CorpusConfig& corpus_config,
                                      const ValidatorConfig& config) {
  return VerseChecker(verse, corpus_config, config).Run();
}

std::vector<Diagnostic> ApplyRuleConfig(std::vector<Diagnostic> diagnostics,
                                        const ValidatorConfig& config) {
  std::vector<Diagnostic> out;
  out.reserve(diagnostics.size());
  for (Diagnostic& d : diagnostics) {
    // Format-level severities are chosen by the parser (lenient mode
    // downgrades some); only explicit overrides and "off" apply.
    const Rule* rule = FindRule(d.rule);
    std::optional<Severity> sev = config.SeverityFor(d.rule);
    if (!sev) continue;
    if (rule == nullptr || *sev != rule->severity) d.severity = *sev;
    out.push_back(std::move(d));
  }
  return out;
}

ValidationSummary ValidateCorpus(const Corpus& corpus,
                                 const ValidatorConfig& config,
                                 std::vector<Diagnostic> prior) {
  ValidationSummary summary;
  summary.diagnostics = ApplyRuleConfig(std::move(prior), config);
  for (const auto& v : corpus.verses()) {
    for (Diagnostic& d : ValidateVerse(*v, corpus.config(), config)) {
      summary.diagnostics.push_back(std::move(d));
    }
    summary.coverage += ComputeCoverage(*v);
  }
  for (Diagnostic& d : CorpusChecks(corpus, config)) {
    summary.diagnostics.push_back(std::move(d));
  }
  summary.verses = corpus.size();
  for (const Rule& r : RuleCatalog()) summary.counts[r.id];
  for (const Diagnostic& d : summary.diagnostics) {
    RuleCount& c = summary.counts[d.rule];
    (d.is_error() ? c.errors : c.warnings) += 1;
  }
  return summary;
}

std::string RenderDiagnosticsTsv(const std::vector<Diagnostic>& diagnostics) {
  std::string out = "severity\trule\tverse\tfile\tline\tmessage\n";
  for (const Diagnostic& d : diagnostics) {
    out += std::string(SeverityName(d.severity)) + "\t" + d.rule + "\t" +
           d.verse + "\t" + d.file + "\t" +
           (d.line ? std::to_string(d.line) : std::string()) + "\t" +
           d.message + "\n";
  }
  return out;
}

std::string RenderDiagnosticsText(const ValidationSummary& summary) {
  std::ostringstream out;
  for (const Diagnostic& d : summary.diagnostics) {
    if (!d.file.empty()) {
      out << d.file << ':';
      if (d.line) out << d.line << ':';
      out << ' ';
    }
    out << SeverityName(d.severity) << " [" << d.rule << "]";
    if (!d.verse.empty()) out << ' ' << d.verse;
    out << ": " << d.message << '\n';
  }
  std::size_t errors = summary.error_count();
  out << summary.verses << " verses, " << errors << " errors, "
      << summary.diagnostics.size() - errors << " warnings\n";
  for (const auto& [rule, count] : summary.counts) {
    if (count.errors || count.warnings) {
      out << "  " << rule << ": " << count.errors << " errors, "
          << count.warnings << " warnings\n";
    }
  }
  const CoverageStats& c = summary.coverage;
  out << "target rows: " << c.target_rows() << " (core " << c.core_linked
      << ", aux-only " << c.aux_only << ", no-source " << c.no_source
      << ", extractor " << c.extractor_rows << "); unlinked source tokens: "
      << c.unlinked_source << '\n';
  return out.str();
}

}  // namespace helfi
