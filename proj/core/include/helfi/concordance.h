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

#ifndef HELFI_CONCORDANCE_H_
#define HELFI_CONCORDANCE_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "helfi/model.h"

namespace helfi {

struct SourceLink {
  std::optional<StrongCode> strong;
  LinkKind kind = LinkKind::kCore;
  std::optional<int> concord;
  std::optional<std::string> lemma;
  TokenId token;
};

struct Occurrence {
  VerseRef verse;
  std::size_t target_position = 0;
  std::string headword;
  std::string surface;
  std::vector<SourceLink> sources;  // in link order
  std::string context;              // detokenized verse text
  std::size_t keyword_offset = 0;   // byte offset of `surface` in `context`

  // First core-linked Strong code; the grouping key.
  std::optional<StrongCode> PrimaryStrong() const;
};

// Headword -> occurrences in canonical verse order. Keys compare bytewise,
// which is codepoint order for UTF-8.
using ConcordanceIndex = std::map<std::string, std::vector<Occurrence>>;

struct ConcordanceIndexes {
  ConcordanceIndex main;       // Plain lemmas
  ConcordanceIndex periphery;  // multiword Periphery lemmas
};

// Throws Error(kDanglingLink) if a link does not resolve.
ConcordanceIndexes BuildIndexes(const Corpus& corpus);
ConcordanceIndex BuildIndex(const Corpus& corpus);

struct KwicOptions {
  std::size_t width = 60;  // codepoints, markers included
  std::string open_marker = "[";
  std::string close_marker = "]";
};

// "<ref> <window>", the keyword's first character on column (width-1)/2
// of the window unless that would push the keyword past the right edge.
std::string KwicLine(const Occurrence& occ, const KwicOptions& options = {});

struct StrongGroup {
  std::optional<StrongCode> strong;
  std::vector<Occurrence> occurrences;
};

struct HeadwordEntry {
  std::string headword;
  std::vector<StrongGroup> groups;
  std::size_t total() const;
};

enum class Collation { kCodepoint, kCaseInsensitive };

std::vector<HeadwordEntry> HeadwordEntries(
    const ConcordanceIndex& index, Collation collation = Collation::kCodepoint);

std::string RenderPrintable(const std::vector<HeadwordEntry>& entries,
                            const KwicOptions& options = {});
std::string RenderTsv(const std::vector<HeadwordEntry>& entries,
                      const KwicOptions& options = {});
std::string RenderJson(const std::vector<HeadwordEntry>& entries,
                       const KwicOptions& options = {});

}  // namespace helfi

#endif  // HELFI_CONCORDANCE_H_
