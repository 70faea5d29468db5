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

// Reader and writer for the seven-column alignment format:
//
//   verse  token-ID  linked-IDs  lemma  morphology  word-form  transliteration
//
// Source rows populate the token-ID column, target rows the linked-IDs
// column. Target word forms followed by a space carry the trailing marker
// (" _␣" by default).

#ifndef HELFI_FORMAT_H_
#define HELFI_FORMAT_H_

#include <cstddef>
#include <istream>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "helfi/diagnostic.h"
#include "helfi/model.h"

namespace helfi {

inline constexpr std::size_t kColumnCount = 7;

struct FormatProfile {
  char separator = '\t';
  std::string trailing_marker = " _␣";
  // Lenient mode accepts cross-verse link syntax, unknown extractors (as
  // warnings), '#' comment lines and a column header line.
  bool lenient = false;

  static FormatProfile Strict() { return {}; }
  static FormatProfile Lenient() {
    FormatProfile p;
    p.lenient = true;
    return p;
  }

  // key=value text: separator=tab|comma|<char>, marker="<literal>",
  // mode=strict|lenient. '#' starts a comment line.
  static FormatProfile Parse(std::string_view text);
  static FormatProfile Load(const std::string& path);
};

struct InputLine {
  std::size_t number = 0;
  std::string text;
};

LinkField ParseLinkField(std::string_view text, const FormatProfile& profile);
SourceLemma ParseSourceLemma(std::string_view text);
// Throws Error(kUnknownExtractor) for extractors outside the inventory.
TargetLemma ParseTargetLemma(std::string_view text,
                             const CorpusConfig& config);

struct BlockParse {
  std::optional<VerseAlignment> verse;  // empty if any error was reported
  std::vector<Diagnostic> diagnostics;
};

// Parses the rows of one verse. Rows are classified structurally, so source
// and target rows may be interleaved; output keeps each side's row order.
BlockParse ParseVerseBlock(std::span<const InputLine> lines,
                           const FormatProfile& profile,
                           const CorpusConfig& config,
                           const std::string& file = {});

struct CorpusParse {
  Corpus corpus;
  std::vector<Diagnostic> diagnostics;

  std::size_t error_count() const { return CountErrors(diagnostics); }
};

// Never throws on malformed content; a bad verse is dropped and reported.
CorpusParse ParseCorpus(std::istream& in, const FormatProfile& profile,
                        std::shared_ptr<const CorpusConfig> config,
                        const std::string& file = {});
CorpusParse ParseCorpusText(std::string_view text,
                            const FormatProfile& profile,
                            std::shared_ptr<const CorpusConfig> config,
                            const std::string& file = {});
// Parses files concurrently and merges them in argument order. Throws
// Error(kIo) if a file cannot be read.
CorpusParse ParseCorpusFiles(const std::vector<std::string>& paths,
                             const FormatProfile& profile,
                             std::shared_ptr<const CorpusConfig> config);

// Source rows first, then target rows. Throws Error(kCrossVerseNotAllowed)
// for cross-verse links under a strict profile and Error(kPrecondition) for
// fields containing the separator or a newline.
std::string Serialize(const VerseAlignment& verse,
                      const FormatProfile& profile);
std::string Serialize(const Corpus& corpus, const FormatProfile& profile);

std::string ReadFile(const std::string& path);

}  // namespace helfi

#endif  // HELFI_FORMAT_H_
