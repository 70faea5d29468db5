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

// Harmonization of divergent Hebrew word segmentations.
//
// Segmented forms use the notation of the interchange files:
//
//   '+'  prefix boundary (conjunction, article, preposition)
//   '='  suffix boundary; the suffix is not a subtoken
//   '/'  unclassified split, as in morphologies that do not distinguish
//        prefix from suffix boundaries
//   ' '  token boundary
//   '־'  maqef; the character itself ends a segment
//
// Harmonization runs three layers: a token boundary after every maqef,
// prefix splits kept as lettered subtokens, suffix splits merged back into
// their host while remembering the boundary position.

#ifndef HELFI_TOKENIZATION_H_
#define HELFI_TOKENIZATION_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "helfi/model.h"

namespace helfi {

inline constexpr char32_t kMaqef = 0x05BE;

enum class Boundary { kNone, kMaqef, kPrefix, kSuffix, kSplit, kSpace };

struct Segment {
  std::string text;
  Boundary after = Boundary::kNone;
  // Byte offsets inside `text` of merged suffix boundaries.
  std::vector<std::size_t> suffix_offsets;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct SegmentedWord {
  std::vector<Segment> segments;

  // Concatenated segment texts.
  std::string Text() const;
  std::string ToString() const;
  // Throws Error(kMalformedSegmentation) on empty segments or stray markers.
  static SegmentedWord Parse(std::string_view form);

  friend bool operator==(const SegmentedWord&, const SegmentedWord&) = default;
};

// Letters that may form a prefix subtoken on their own. Compared on the
// consonant skeleton, so pointed variants match.
struct PrefixInventory {
  std::vector<std::string> letters = {"ו", "ה", "ב", "כ", "ל", "מ", "ש"};

  bool IsPrefix(std::string_view segment_text) const;
};

// Removes Hebrew points and cantillation marks, keeping letters, maqef and
// anything outside the Hebrew block.
std::string ConsonantSkeleton(std::string_view text);

SegmentedWord InsertMaqefSpace(const SegmentedWord& word);

// '/' boundaries become kPrefix when every segment since the token start is
// in the inventory, otherwise kSuffix.
SegmentedWord ClassifySplit(const SegmentedWord& word,
                            const PrefixInventory& inventory = {});

// Joins segments across suffix boundaries (explicit '=' and '/' splits that
// classify as suffixal). Prefix boundaries are left alone.
SegmentedWord MergeSuffixes(const SegmentedWord& word,
                            const PrefixInventory& inventory = {});

// MergeSuffixes(ClassifySplit(InsertMaqefSpace(word))).
SegmentedWord Normalize(const SegmentedWord& word,
                        const PrefixInventory& inventory = {});

// One bare id for a single segment, else ids word+'a', word+'b', ...
// Throws Error(kTooManySubtokens) past 'z' and Error(kPrecondition) for an
// empty word.
std::vector<std::pair<TokenId, std::string>> LetterSubtokens(
    const SegmentedWord& word, int word_index);

enum class DiscrepancyKind {
  kMaqefSpace,
  kPrefixMarker,
  kMissingPrefixSplit,
  kSuffixSplit,
  kSuffixMarker,
  kInconsistentMorphology,
};

std::string_view DiscrepancyKindName(DiscrepancyKind kind);

struct WordLocation {
  std::string verse;
  int word = 0;

  friend bool operator==(const WordLocation&, const WordLocation&) = default;
};

struct Discrepancy {
  int layer = 0;
  WordLocation location;
  DiscrepancyKind kind = DiscrepancyKind::kMaqefSpace;
  std::string description;
};

struct Harmonized {
  SegmentedWord unified;
  std::vector<Discrepancy> discrepancies;
};

// Throws Error(kTextMismatch) when the inputs differ in their consonant
// skeletons. Symmetric in (a, b) except for which side descriptions name.
Harmonized Harmonize(const SegmentedWord& a, const SegmentedWord& b,
                     const WordLocation& location,
                     const PrefixInventory& inventory = {});

// Reports a lemma/gloss count that does not match the raw segment count.
std::optional<Discrepancy> CheckMorphologyCount(
    const SegmentedWord& word, std::size_t lemma_count,
    const WordLocation& location, const PrefixInventory& inventory = {});

// Interchange rows: verse<TAB>word_index<TAB>segmented form[<TAB>lemmas],
// where the optional lemma column lists one '/'-separated entry per raw
// segment.
struct InterchangeRow {
  std::string verse;
  int word = 0;
  SegmentedWord form;
  std::optional<std::size_t> lemma_count;
  std::size_t line = 0;
};

std::vector<InterchangeRow> ParseInterchange(std::string_view text);
std::string RenderInterchange(const std::vector<InterchangeRow>& rows);
std::string RenderDiscrepancyTsv(const std::vector<Discrepancy>& discrepancies);

struct SyncResult {
  std::vector<InterchangeRow> unified;
  std::vector<Discrepancy> discrepancies;
};

// Pairs rows by (verse, word). A row present on one side only is a
// TextMismatch.
SyncResult SynchronizeTokenization(const std::vector<InterchangeRow>& a,
                                   const std::vector<InterchangeRow>& b,
                                   const PrefixInventory& inventory = {});

}  // namespace helfi

#endif  // HELFI_TOKENIZATION_H_
