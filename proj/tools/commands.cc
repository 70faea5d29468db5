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

#include "commands.h"

#include <signal.h>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <thread>

#include "helfi/alignment.h"
#include "helfi/concordance.h"
#include "helfi/config.h"
#include "helfi/edition_diff.h"
#include "helfi/error.h"
#include "helfi/format.h"
#include "helfi/http_api.h"
#include "helfi/service.h"
#include "helfi/tokenization.h"
#include "helfi/validator.h"

namespace helfi::cli {
namespace {

struct Settings {
  FormatProfile profile;
  std::shared_ptr<const CorpusConfig> config;
  ValidatorConfig rules;
};

Settings LoadSettings(const CommonOptions& c) {
  Settings s;
  if (!c.profile.empty()) s.profile = FormatProfile::Load(c.profile);
  auto config = std::make_shared<CorpusConfig>();
  if (!c.book_order.empty()) {
    config->book_order = BookOrder(LoadList(c.book_order));
  }
  if (!c.extractors.empty()) {
    config->extractors.clear();
    for (std::string e : LoadList(c.extractors)) {
      if (!e.empty() && e.front() == '%') e.erase(0, 1);
      config->extractors.push_back(std::move(e));
    }
  }
  if (!c.morph_tags.empty()) config->morph_tags = LoadList(c.morph_tags);
  s.config = std::move(config);
  if (!c.rules.empty()) s.rules = ValidatorConfig::Load(c.rules);
  return s;
}

std::string ReadInput(const std::string& path) {
  if (path != "-") return ReadFile(path);
  std::string data((std::istreambuf_iterator<char>(std::cin)),
                   std::istreambuf_iterator<char>());
  if (std::cin.bad()) throw Error(ErrorCode::kIo, "cannot read stdin");
  return data;
}

CorpusParse LoadCorpus(const std::vector<std::string>& inputs,
                       const Settings& s) {
  bool stdin_used = false;
  for (const std::string& p : inputs) stdin_used = stdin_used || p == "-";
  if (!stdin_used) return ParseCorpusFiles(inputs, s.profile, s.config);
  CorpusParse merged{Corpus(s.config), {}};
  for (const std::string& path : inputs) {
    CorpusParse part = ParseCorpusText(ReadInput(path), s.profile, s.config,
                                       path == "-" ? "<stdin>" : path);
    merged.corpus.Append(part.corpus);
    for (auto& d : part.diagnostics) merged.diagnostics.push_back(std::move(d));
  }
  return merged;
}

// Prints parse diagnostics to stderr; true if any was an error.
bool ReportParseErrors(const CorpusParse& parsed) {
  if (parsed.error_count() == 0) return false;
  ValidationSummary summary;
  for (const Diagnostic& d : parsed.diagnostics) {
    if (d.is_error()) summary.diagnostics.push_back(d);
  }
  std::cerr << RenderDiagnosticsText(summary) << "input has parse errors\n";
  return true;
}

void WriteOutput(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << data;
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
}

}  // namespace

int RunValidate(const CommonOptions& common, const ValidateOptions& options) {
  Settings s = LoadSettings(common);
  CorpusParse parsed = LoadCorpus(options.inputs, s);
  ValidationSummary summary =
      ValidateCorpus(parsed.corpus, s.rules, std::move(parsed.diagnostics));
  if (options.format == "tsv") {
    std::cout << RenderDiagnosticsTsv(summary.diagnostics);
  } else {
    std::cout << RenderDiagnosticsText(summary);
  }
  return summary.error_count() == 0 ? kExitOk : kExitFailure;
}

int RunConcord(const CommonOptions& common, const ConcordOptions& options) {
  Settings s = LoadSettings(common);
  CorpusParse parsed = LoadCorpus(options.inputs, s);
  if (ReportParseErrors(parsed)) return kExitFailure;
  ConcordanceIndexes indexes = BuildIndexes(parsed.corpus);
  ConcordanceIndex& index = options.periphery ? indexes.periphery : indexes.main;
  if (!options.headword.empty()) {
    auto it = index.find(options.headword);
    if (it == index.end()) {
      std::cerr << "no headword '" << options.headword << "'\n";
      return kExitFailure;
    }
    ConcordanceIndex one;
    one.insert(std::move(*it));
    index = std::move(one);
  }
  const Collation collation = options.collation == "caseless"
                                  ? Collation::kCaseInsensitive
                                  : Collation::kCodepoint;
  std::vector<HeadwordEntry> entries = HeadwordEntries(index, collation);
  KwicOptions kwic{options.kwic_width, options.open_marker,
                   options.close_marker};
  if (options.format == "json") {
    std::cout << RenderJson(entries, kwic);
  } else if (options.format == "tsv") {
    std::cout << RenderTsv(entries, kwic);
  } else {
    std::cout << RenderPrintable(entries, kwic);
  }
  return kExitOk;
}

int RunSync(const CommonOptions&, const SyncOptions& options) {
  PrefixInventory inventory;
  if (!options.prefixes.empty()) inventory.letters = LoadList(options.prefixes);
  const std::string text_a = ReadInput(options.input_a);
  const std::string text_b = ReadInput(options.input_b);
  SyncResult result = SynchronizeTokenization(
      ParseInterchange(text_a), ParseInterchange(text_b), inventory);
  WriteOutput(options.output, RenderInterchange(result.unified));
  const std::string report = RenderDiscrepancyTsv(result.discrepancies);
  if (options.report.empty()) {
    std::cerr << report;
  } else {
    WriteOutput(options.report, report);
  }
  return kExitOk;
}

int RunDiff(const CommonOptions& common, const DiffOptions& options) {
  Settings s = LoadSettings(common);
  CorpusParse a = LoadCorpus({options.edition_a}, s);
  CorpusParse b = LoadCorpus({options.edition_b}, s);
  if (ReportParseErrors(a) || ReportParseErrors(b)) return kExitFailure;
  std::vector<EditionDiffEntry> entries = EditionDiff(a.corpus, b.corpus);
  std::cout << RenderEditionDiff(entries);
  return entries.empty() ? kExitOk : kExitFailure;
}

int RunStats(const CommonOptions& common, const StatsOptions& options) {
  Settings s = LoadSettings(common);
  CorpusParse parsed = LoadCorpus(options.inputs, s);
  if (ReportParseErrors(parsed)) return kExitFailure;
  struct Row {
    std::size_t verses = 0;
    std::size_t source_tokens = 0;
    std::size_t core_links = 0;
    std::size_t aux_links = 0;
    CoverageStats coverage;
  };
  std::vector<std::pair<std::string, Row>> rows;
  Row total;
  const Corpus& corpus = parsed.corpus;
  for (std::size_t i : corpus.CanonicalOrder()) {
    const VerseAlignment& v = corpus.at(i);
    if (rows.empty() || rows.back().first != v.ref.book) {
      rows.emplace_back(v.ref.book, Row{});
    }
    for (Row* r : {&rows.back().second, &total}) {
      r->verses += 1;
      r->source_tokens += v.source.size();
      for (const TargetToken& t : v.target) {
        for (const LinkRef& l : t.links.links) {
          (l.kind == LinkKind::kCore ? r->core_links : r->aux_links) += 1;
        }
      }
      r->coverage += ComputeCoverage(v);
    }
  }
  const bool tsv = options.format == "tsv";
  std::ostringstream out;
  auto line = [&](const std::string& book, const Row& r) {
    const CoverageStats& c = r.coverage;
    const double linked =
        c.target_rows() == 0
            ? 0.0
            : 100.0 * static_cast<double>(c.core_linked + c.aux_only) /
                  static_cast<double>(c.target_rows());
    std::ostringstream pct;
    pct << std::fixed << std::setprecision(1) << linked;
    const std::vector<std::string> cells = {
        book,
        std::to_string(r.verses),
        std::to_string(r.source_tokens),
        std::to_string(c.target_rows()),
        std::to_string(r.core_links),
        std::to_string(r.aux_links),
        std::to_string(c.no_source),
        std::to_string(c.extractor_rows),
        std::to_string(c.unlinked_source),
        pct.str()};
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (tsv) {
        out << (k ? "\t" : "") << cells[k];
      } else if (k == 0) {
        out << std::left << std::setw(8) << cells[k];
      } else {
        out << std::right << std::setw(10) << cells[k];
      }
    }
    out << '\n';
  };
  const std::vector<std::string> header = {
      "book",      "verses",    "source", "target",    "core",
      "aux",       "no-source", "extract", "unlinked", "linked%"};
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (tsv) {
      out << (k ? "\t" : "") << header[k];
    } else if (k == 0) {
      out << std::left << std::setw(8) << header[k];
    } else {
      out << std::right << std::setw(10) << header[k];
    }
  }
  out << '\n';
  for (const auto& [book, row] : rows) line(book, row);
  if (!rows.empty()) line("total", total);
  std::cout << out.str();
  return kExitOk;
}

int RunServe(const CommonOptions& common, const ServeOptions& options) {
  Settings s = LoadSettings(common);
  CorpusParse parsed = LoadCorpus({options.input}, s);
  if (ReportParseErrors(parsed)) return kExitFailure;
  ServiceOptions service_options;
  service_options.profile = s.profile;
  service_options.rules = s.rules;
  service_options.path =
      options.save_path.empty() ? options.input : options.save_path;
  if (service_options.path == "-") service_options.path.clear();
  AlignService service(std::move(parsed.corpus), std::move(service_options));

  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  HttpServer server(service, {options.host, options.port, options.static_dir});
  int port = 0;
  try {
    port = server.Bind();
  } catch (const Error& e) {
    std::cerr << "helfi serve: " << e.what() << '\n';
    return kExitFailure;
  }
  std::cerr << "listening on http://" << options.host << ':' << port
            << std::endl;
  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.Stop();
  });
  server.Run();
  // Run() also returns if the listener fails; wake the waiter either way.
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  return kExitOk;
}

int RunConvert(const CommonOptions& common, const ConvertOptions& options) {
  Settings s = LoadSettings(common);
  CorpusParse parsed = LoadCorpus(options.inputs, s);
  if (ReportParseErrors(parsed)) return kExitFailure;
  for (const Diagnostic& d : parsed.diagnostics) {
    std::cerr << SeverityName(d.severity) << " [" << d.rule << "] " << d.file
              << ':' << d.line << ": " << d.message << '\n';
  }
  FormatProfile out_profile = options.output_profile.empty()
                                  ? FormatProfile::Strict()
                                  : FormatProfile::Load(options.output_profile);
  const Corpus corpus = options.canonicalize ? parsed.corpus.Canonicalized()
                                             : parsed.corpus;
  WriteOutput(options.output, Serialize(corpus, out_profile));
  return kExitOk;
}

}  // namespace helfi::cli
