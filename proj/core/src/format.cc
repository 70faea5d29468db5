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

#include "helfi/format.h"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>

#include "helfi/config.h"
#include "helfi/error.h"

namespace helfi {
namespace {

std::vector<std::string_view> SplitFields(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t end = line.find(sep, start);
    if (end == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, end - start));
    start = end + 1;
  }
}

bool IsHeaderLine(std::string_view line, char sep) {
  auto fields = SplitFields(line, sep);
  return !fields.empty() && fields[0] == "verse" && fields.size() > 1 &&
         fields[1] == "token ID";
}

class BlockParser {
 public:
  BlockParser(const FormatProfile& profile, const CorpusConfig& config,
              const std::string& file)
      : profile_(profile), config_(config), file_(file) {}

  BlockParse Run(std::span<const InputLine> lines) {
    BlockParse result;
    if (lines.empty()) {
      Report(Severity::kError, rules::kEmptyBlock, 0, "empty verse block");
      result.diagnostics = std::move(diags_);
      return result;
    }
    VerseAlignment verse;
    std::optional<std::string> ref_text;
    for (const InputLine& line : lines) {
      auto fields = SplitFields(line.text, profile_.separator);
      if (fields.size() != kColumnCount) {
        Report(Severity::kError, rules::kColumns, line.number,
               "expected " + std::to_string(kColumnCount) + " columns, got " +
                   std::to_string(fields.size()));
        continue;
      }
      if (!ref_text) {
        ref_text = std::string(fields[0]);
        verse_label_ = *ref_text;
        try {
          verse.ref = VerseRef::Parse(fields[0]);
        } catch (const Error& e) {
          Report(Severity::kError, rules::kVerseRef, line.number, e.what());
        }
      } else if (fields[0] != *ref_text) {
        Report(Severity::kError, rules::kVerseRef, line.number,
               "row belongs to verse '" + std::string(fields[0]) +
                   "' inside block of '" + *ref_text + "'");
        continue;
      }
      const bool has_id = !fields[1].empty();
      const bool has_links = !fields[2].empty();
      if (has_id == has_links) {
        Report(Severity::kError, rules::kRowKind, line.number,
               has_id ? "row has both a token id and linked ids"
                      : "row has neither a token id nor linked ids");
        continue;
      }
      if (has_id) {
        if (!verse.target.empty() && !interleave_reported_) {
          interleave_reported_ = true;
          Report(Severity::kWarning, rules::kRowKind, line.number,
                 "source row after target rows; layout will be canonicalized");
        }
        ParseSourceRow(fields, line.number, verse);
      } else {
        ParseTargetRow(fields, line.number, verse);
      }
    }
    result.diagnostics = std::move(diags_);
    if (CountErrors(result.diagnostics) == 0) result.verse = std::move(verse);
    return result;
  }

 private:
  void ParseSourceRow(const std::vector<std::string_view>& f, std::size_t line,
                      VerseAlignment& verse) {
    SourceToken tok;
    bool ok = true;
    try {
      tok.id = TokenId::Parse(f[1]);
    } catch (const Error& e) {
      Report(Severity::kError, rules::kTokenId, line, e.what());
      ok = false;
    }
    try {
      tok.lemma = SourceLemma::Parse(f[3]);
    } catch (const Error& e) {
      Report(Severity::kError, rules::kLemmaTriple, line, e.what());
      ok = false;
    }
    ok = ParseMorph(f[4], line, tok.morph) && ok;
    if (f[5].empty()) {
      Report(Severity::kError, rules::kSurface, line,
             "source row has an empty word form");
      ok = false;
    }
    tok.surface = std::string(f[5]);
    tok.translit = std::string(f[6]);
    if (ok) verse.source.push_back(std::move(tok));
  }

  void ParseTargetRow(const std::vector<std::string_view>& f, std::size_t line,
                      VerseAlignment& verse) {
    TargetToken row;
    bool ok = true;
    try {
      row.links = LinkField::Parse(f[2], profile_.lenient);
    } catch (const Error& e) {
      Report(Severity::kError, rules::kLinkField, line, e.what());
      ok = false;
    }
    try {
      row.lemma = TargetLemma::Parse(f[3]);
      if (row.lemma.is_extractor() && !config_.IsKnownExtractor(row.lemma.text)) {
        Report(profile_.lenient ? Severity::kWarning : Severity::kError,
               rules::kTargetLemma, line,
               "unknown extractor '%" + row.lemma.text + "'");
        ok = ok && profile_.lenient;
      }
    } catch (const Error& e) {
      Report(Severity::kError, rules::kTargetLemma, line, e.what());
      ok = false;
    }
    ok = ParseMorph(f[4], line, row.morph) && ok;
    std::string_view surface = f[5];
    const std::string& marker = profile_.trailing_marker;
    if (!marker.empty() && surface.size() >= marker.size() &&
        surface.substr(surface.size() - marker.size()) == marker) {
      surface.remove_suffix(marker.size());
      row.trailing_space = true;
    }
    row.surface = std::string(surface);
    if (!f[6].empty()) {
      Report(Severity::kError, rules::kSurface, line,
             "target rows carry no transliteration");
      ok = false;
    }
    if (ok) verse.target.push_back(std::move(row));
  }

  bool ParseMorph(std::string_view text, std::size_t line, MorphTags& out) {
    try {
      out = MorphTags::Parse(text);
      return true;
    } catch (const Error& e) {
      Report(Severity::kError, rules::kMorphology, line, e.what());
      return false;
    }
  }

  void Report(Severity sev, std::string_view rule, std::size_t line,
              std::string message) {
    diags_.push_back(Diagnostic{sev, std::string(rule), verse_label_, file_,
                                line, std::move(message)});
  }

  const FormatProfile& profile_;
  const CorpusConfig& config_;
  const std::string& file_;
  std::string verse_label_;
  bool interleave_reported_ = false;
  std::vector<Diagnostic> diags_;
};

void CheckField(std::string_view field, const FormatProfile& profile) {
  if (field.find(profile.separator) != std::string_view::npos ||
      field.find('\n') != std::string_view::npos) {
    throw Error(ErrorCode::kPrecondition,
                "field '" + std::string(field) +
                    "' contains the column separator or a newline");
  }
}

void AppendRow(std::string& out, const FormatProfile& profile,
               std::initializer_list<std::string_view> fields) {
  bool first = true;
  for (std::string_view f : fields) {
    CheckField(f, profile);
    if (!first) out += profile.separator;
    out += f;
    first = false;
  }
  out += '\n';
}

}  // namespace

// ---------------------------------------------------------------------------

FormatProfile FormatProfile::Parse(std::string_view text) {
  FormatProfile profile;
  for (const ConfigEntry& e : ParseKeyValues(text, "profile")) {
    const std::string& value = e.value;
    if (e.key == "separator") {
      if (value == "tab" || value == "\\t") {
        profile.separator = '\t';
      } else if (value == "comma") {
        profile.separator = ',';
      } else if (value.size() == 1) {
        profile.separator = value[0];
      } else {
        throw Error(ErrorCode::kConfig,
                    "separator must be a single character");
      }
    } else if (e.key == "marker") {
      profile.trailing_marker = value;
    } else if (e.key == "mode") {
      if (value != "strict" && value != "lenient") {
        throw Error(ErrorCode::kConfig, "mode must be strict or lenient");
      }
      profile.lenient = value == "lenient";
    } else {
      throw Error(ErrorCode::kConfig,
                  "unknown profile key '" + e.key + "'");
    }
  }
  return profile;
}

FormatProfile FormatProfile::Load(const std::string& path) {
  return Parse(ReadFile(path));
}

LinkField ParseLinkField(std::string_view text, const FormatProfile& profile) {
  return LinkField::Parse(text, profile.lenient);
}

SourceLemma ParseSourceLemma(std::string_view text) {
  return SourceLemma::Parse(text);
}

TargetLemma ParseTargetLemma(std::string_view text,
                             const CorpusConfig& config) {
  TargetLemma lemma = TargetLemma::Parse(text);
  if (lemma.is_extractor() && !config.IsKnownExtractor(lemma.text)) {
    throw Error(ErrorCode::kUnknownExtractor,
                "unknown extractor '%" + lemma.text + "'");
  }
  return lemma;
}

BlockParse ParseVerseBlock(std::span<const InputLine> lines,
                           const FormatProfile& profile,
                           const CorpusConfig& config,
                           const std::string& file) {
  return BlockParser(profile, config, file).Run(lines);
}

CorpusParse ParseCorpusText(std::string_view text,
                            const FormatProfile& profile,
                            std::shared_ptr<const CorpusConfig> config,
                            const std::string& file) {
  CorpusParse out{Corpus(config), {}};
  const CorpusConfig& cfg = out.corpus.config();
  VerseOrder less{&cfg.book_order};
  std::optional<VerseRef> previous;

  std::vector<InputLine> block;
  std::string block_key;
  auto flush = [&]() {
    if (block.empty()) return;
    BlockParse parsed = ParseVerseBlock(block, profile, cfg, file);
    for (auto& d : parsed.diagnostics) out.diagnostics.push_back(std::move(d));
    if (parsed.verse) {
      if (previous && less(parsed.verse->ref, *previous)) {
        out.diagnostics.push_back(Diagnostic{
            Severity::kWarning, std::string(rules::kVerseOrder),
            parsed.verse->ref.ToString(), file, block.front().number,
            "verse out of canonical order (after " + previous->ToString() +
                ")"});
      }
      previous = parsed.verse->ref;
      out.corpus.Add(std::move(*parsed.verse));
    }
    block.clear();
  };

  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (line.empty()) continue;
    if (line.front() == '#' || IsHeaderLine(line, profile.separator)) {
      if (!profile.lenient) {
        out.diagnostics.push_back(Diagnostic{
            Severity::kError, std::string(rules::kRowKind), {}, file, number,
            "comment or header line not allowed by a strict profile"});
      }
      continue;
    }
    std::string_view key = line.substr(0, line.find(profile.separator));
    if (!block.empty() && key != block_key) flush();
    if (block.empty()) block_key = std::string(key);
    block.push_back(InputLine{number, std::string(line)});
  }
  flush();
  SortDiagnostics(out.diagnostics);
  return out;
}

CorpusParse ParseCorpus(std::istream& in, const FormatProfile& profile,
                        std::shared_ptr<const CorpusConfig> config,
                        const std::string& file) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "read failed: " + file);
  return ParseCorpusText(buffer.str(), profile, std::move(config), file);
}

CorpusParse ParseCorpusFiles(const std::vector<std::string>& paths,
                             const FormatProfile& profile,
                             std::shared_ptr<const CorpusConfig> config) {
  if (!config) config = std::make_shared<const CorpusConfig>();
  std::vector<std::future<CorpusParse>> jobs;
  jobs.reserve(paths.size());
  for (const std::string& path : paths) {
    jobs.push_back(std::async(std::launch::async, [&, path]() {
      return ParseCorpusText(ReadFile(path), profile, config, path);
    }));
  }
  CorpusParse merged{Corpus(config), {}};
  for (auto& job : jobs) {
    CorpusParse part = job.get();
    merged.corpus.Append(part.corpus);
    for (auto& d : part.diagnostics) merged.diagnostics.push_back(std::move(d));
  }
  SortDiagnostics(merged.diagnostics);
  return merged;
}

std::string Serialize(const VerseAlignment& verse,
                      const FormatProfile& profile) {
  std::string out;
  const std::string ref = verse.ref.ToString();
  for (const SourceToken& tok : verse.source) {
    AppendRow(out, profile,
              {ref, tok.id.ToString(), "", tok.lemma.ToString(),
               tok.morph.ToString(), tok.surface, tok.translit});
  }
  for (const TargetToken& row : verse.target) {
    if (!profile.lenient && row.links.HasCrossVerse()) {
      throw Error(ErrorCode::kCrossVerseNotAllowed,
                  ref + ": cross-verse link not allowed by a strict profile");
    }
    std::string surface = row.surface;
    if (row.trailing_space) surface += profile.trailing_marker;
    AppendRow(out, profile,
              {ref, "", row.links.ToString(), row.lemma.ToString(),
               row.morph.ToString(), surface, ""});
  }
  return out;
}

std::string Serialize(const Corpus& corpus, const FormatProfile& profile) {
  std::string out;
  for (const auto& verse : corpus.verses()) out += Serialize(*verse, profile);
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "read failed: '" + path + "'");
  return buffer.str();
}

}  // namespace helfi
