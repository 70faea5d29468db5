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

#include "helfi/tokenization.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "helfi/error.h"
#include "helfi/utf8.h"

namespace helfi {
namespace {

bool IsHebrewMark(char32_t cp) {
  return (cp >= 0x0591 && cp <= 0x05BD) || cp == 0x05BF || cp == 0x05C1 ||
         cp == 0x05C2 || cp == 0x05C4 || cp == 0x05C5 || cp == 0x05C7;
}

std::size_t SkeletonLength(std::string_view text) {
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (!IsHebrewMark(utf8::Next(text, pos))) ++n;
  }
  return n;
}

std::string_view MarkerFor(Boundary b) {
  switch (b) {
    case Boundary::kNone: return "";
    case Boundary::kMaqef: return "";
    case Boundary::kPrefix: return "+";
    case Boundary::kSuffix: return "=";
    case Boundary::kSplit: return "/";
    case Boundary::kSpace: return " ";
  }
  return "";
}

bool IsTokenBreak(Boundary b) {
  return b == Boundary::kSpace || b == Boundary::kMaqef;
}

// Boundary classes compared between two segmentations of one word.
enum class Cls { kMaqefOnly, kSpace, kPrefix, kSuffixMarked, kSuffixSplit };

std::string_view ClsName(Cls c) {
  switch (c) {
    case Cls::kMaqefOnly: return "maqef without space";
    case Cls::kSpace: return "space";
    case Cls::kPrefix: return "prefix boundary";
    case Cls::kSuffixMarked: return "suffix marker '='";
    case Cls::kSuffixSplit: return "suffix split '/'";
  }
  return "";
}

bool IsSuffix(Cls c) { return c == Cls::kSuffixMarked || c == Cls::kSuffixSplit; }

// Boundary classes keyed by skeleton position (letters before the boundary).
std::map<std::size_t, Cls> BoundaryClasses(const SegmentedWord& word,
                                           const PrefixInventory& inventory) {
  const SegmentedWord classified = ClassifySplit(word, inventory);
  std::map<std::size_t, Cls> out;
  std::size_t skel = 0;
  for (std::size_t i = 0; i < word.segments.size(); ++i) {
    const Segment& seg = word.segments[i];
    for (std::size_t off : seg.suffix_offsets) {
      out[skel + SkeletonLength(std::string_view(seg.text).substr(0, off))] =
          Cls::kSuffixMarked;
    }
    skel += SkeletonLength(seg.text);
    if (i + 1 == word.segments.size()) break;
    switch (seg.after) {
      case Boundary::kNone: break;
      case Boundary::kMaqef: out[skel] = Cls::kMaqefOnly; break;
      case Boundary::kSpace: out[skel] = Cls::kSpace; break;
      case Boundary::kPrefix: out[skel] = Cls::kPrefix; break;
      case Boundary::kSuffix: out[skel] = Cls::kSuffixMarked; break;
      case Boundary::kSplit:
        out[skel] = classified.segments[i].after == Boundary::kPrefix
                        ? Cls::kPrefix
                        : Cls::kSuffixSplit;
        break;
    }
  }
  return out;
}

// Byte offset in `text` where skeleton position `p` begins: just before the
// p-th letter, after all marks attached to letter p-1.
std::vector<std::size_t> SkeletonCuts(std::string_view text) {
  std::vector<std::size_t> cuts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t start = pos;
    if (!IsHebrewMark(utf8::Next(text, pos))) cuts.push_back(start);
  }
  cuts.push_back(text.size());
  return cuts;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string SegmentedWord::Text() const {
  std::string out;
  for (const Segment& s : segments) out += s.text;
  return out;
}

std::string SegmentedWord::ToString() const {
  std::string out;
  for (const Segment& s : segments) {
    std::size_t prev = 0;
    for (std::size_t off : s.suffix_offsets) {
      out.append(s.text, prev, off - prev);
      out += '=';
      prev = off;
    }
    out.append(s.text, prev, std::string::npos);
    out += MarkerFor(s.after);
  }
  return out;
}

SegmentedWord SegmentedWord::Parse(std::string_view form) {
  auto fail = [&](const std::string& why) -> SegmentedWord {
    throw Error(ErrorCode::kMalformedSegmentation,
                "malformed segmentation '" + std::string(form) + "': " + why);
  };
  SegmentedWord word;
  std::string current;
  std::size_t pos = 0;
  while (pos < form.size()) {
    std::size_t start = pos;
    char32_t cp = utf8::Next(form, pos);
    Boundary b = Boundary::kNone;
    switch (cp) {
      case U'+': b = Boundary::kPrefix; break;
      case U'=': b = Boundary::kSuffix; break;
      case U'/': b = Boundary::kSplit; break;
      case U' ': b = Boundary::kSpace; break;
      default: break;
    }
    if (b == Boundary::kNone) {
      current.append(form.substr(start, pos - start));
      if (cp == kMaqef) {
        word.segments.push_back({std::move(current), Boundary::kMaqef, {}});
        current.clear();
      }
      continue;
    }
    if (current.empty()) {
      // A marker right after a maqef is absorbed; a space makes it a token
      // boundary.
      if (word.segments.empty() ||
          word.segments.back().after != Boundary::kMaqef) {
        return fail("empty segment");
      }
      if (b == Boundary::kSpace) word.segments.back().after = Boundary::kSpace;
      continue;
    }
    word.segments.push_back({std::move(current), b, {}});
    current.clear();
  }
  if (!current.empty()) {
    word.segments.push_back({std::move(current), Boundary::kNone, {}});
  } else if (word.segments.empty()) {
    return fail("empty form");
  } else {
    Boundary& last = word.segments.back().after;
    if (last != Boundary::kMaqef && last != Boundary::kSpace) {
      return fail("trailing marker");
    }
    last = Boundary::kNone;
  }
  return word;
}

bool PrefixInventory::IsPrefix(std::string_view segment_text) const {
  const std::string skel = ConsonantSkeleton(segment_text);
  return std::any_of(letters.begin(), letters.end(),
                     [&](const std::string& l) {
                       return ConsonantSkeleton(l) == skel;
                     });
}

std::string ConsonantSkeleton(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t start = pos;
    if (!IsHebrewMark(utf8::Next(text, pos))) {
      out.append(text.substr(start, pos - start));
    }
  }
  return out;
}

SegmentedWord InsertMaqefSpace(const SegmentedWord& word) {
  SegmentedWord out = word;
  for (std::size_t i = 0; i + 1 < out.segments.size(); ++i) {
    if (out.segments[i].after == Boundary::kMaqef) {
      out.segments[i].after = Boundary::kSpace;
    }
  }
  return out;
}

SegmentedWord ClassifySplit(const SegmentedWord& word,
                            const PrefixInventory& inventory) {
  SegmentedWord out = word;
  bool all_prefix = true;
  for (Segment& seg : out.segments) {
    all_prefix = all_prefix && seg.suffix_offsets.empty() &&
                 inventory.IsPrefix(seg.text);
    if (seg.after == Boundary::kSplit) {
      seg.after = all_prefix ? Boundary::kPrefix : Boundary::kSuffix;
    }
    if (seg.after == Boundary::kSuffix) all_prefix = false;
    if (IsTokenBreak(seg.after)) all_prefix = true;
  }
  return out;
}

SegmentedWord MergeSuffixes(const SegmentedWord& word,
                            const PrefixInventory& inventory) {
  const SegmentedWord classified = ClassifySplit(word, inventory);
  SegmentedWord out;
  bool join = false;
  for (std::size_t i = 0; i < word.segments.size(); ++i) {
    Segment seg = word.segments[i];
    const bool suffixal = classified.segments[i].after == Boundary::kSuffix;
    if (join) {
      Segment& host = out.segments.back();
      const std::size_t base = host.text.size();
      host.suffix_offsets.push_back(base);
      for (std::size_t off : seg.suffix_offsets) {
        host.suffix_offsets.push_back(base + off);
      }
      host.text += seg.text;
      host.after = seg.after;
    } else {
      out.segments.push_back(std::move(seg));
    }
    join = suffixal;
    if (join) out.segments.back().after = Boundary::kNone;
  }
  return out;
}

SegmentedWord Normalize(const SegmentedWord& word,
                        const PrefixInventory& inventory) {
  return MergeSuffixes(ClassifySplit(InsertMaqefSpace(word), inventory),
                       inventory);
}

std::vector<std::pair<TokenId, std::string>> LetterSubtokens(
    const SegmentedWord& word, int word_index) {
  if (word.segments.empty()) {
    throw Error(ErrorCode::kPrecondition, "word has no segments");
  }
  if (word.segments.size() > 26) {
    throw Error(ErrorCode::kTooManySubtokens,
                "word " + std::to_string(word_index) + " has " +
                    std::to_string(word.segments.size()) + " subtokens");
  }
  std::vector<std::pair<TokenId, std::string>> out;
  if (word.segments.size() == 1) {
    out.emplace_back(TokenId{word_index, 0}, word.segments[0].text);
    return out;
  }
  for (std::size_t i = 0; i < word.segments.size(); ++i) {
    out.emplace_back(TokenId{word_index, static_cast<char>('a' + i)},
                     word.segments[i].text);
  }
  return out;
}

std::string_view DiscrepancyKindName(DiscrepancyKind kind) {
  switch (kind) {
    case DiscrepancyKind::kMaqefSpace: return "maqef-space";
    case DiscrepancyKind::kPrefixMarker: return "prefix-marker";
    case DiscrepancyKind::kMissingPrefixSplit: return "missing-prefix-split";
    case DiscrepancyKind::kSuffixSplit: return "suffix-split";
    case DiscrepancyKind::kSuffixMarker: return "suffix-marker";
    case DiscrepancyKind::kInconsistentMorphology:
      return "inconsistent-morphology";
  }
  return "";
}

Harmonized Harmonize(const SegmentedWord& a, const SegmentedWord& b,
                     const WordLocation& location,
                     const PrefixInventory& inventory) {
  const std::string text_a = a.Text();
  const std::string text_b = b.Text();
  const std::string skeleton = ConsonantSkeleton(text_a);
  if (skeleton != ConsonantSkeleton(text_b)) {
    throw Error(ErrorCode::kTextMismatch,
                location.verse + " word " + std::to_string(location.word) +
                    ": '" + text_a + "' and '" + text_b +
                    "' are different texts");
  }
  const std::vector<char32_t> letters = utf8::Decode(skeleton);
  const std::string& text = text_a == text_b ? text_a : std::min(text_a, text_b);
  const std::vector<std::size_t> cuts = SkeletonCuts(text);

  const auto classes_a = BoundaryClasses(a, inventory);
  const auto classes_b = BoundaryClasses(b, inventory);
  std::map<std::size_t, std::pair<std::optional<Cls>, std::optional<Cls>>> all;
  for (auto [p, c] : classes_a) all[p].first = c;
  for (auto [p, c] : classes_b) all[p].second = c;

  Harmonized result;
  SegmentedWord raw;
  std::size_t seg_start = 0;        // skeleton position of current segment
  std::size_t token_start = 0;
  std::vector<std::size_t> prefix_cuts;  // since token_start
  bool suffix_in_token = false;
  std::size_t prev_pos = 0;

  auto letters_between = [&](std::size_t from, std::size_t to) {
    return utf8::Encode(std::vector<char32_t>(letters.begin() + from,
                                              letters.begin() + to));
  };
  auto pieces_are_prefixes = [&](std::size_t p) {
    if (suffix_in_token) return false;
    std::size_t from = token_start;
    for (std::size_t cut : prefix_cuts) {
      if (!inventory.IsPrefix(letters_between(from, cut))) return false;
      from = cut;
    }
    return inventory.IsPrefix(letters_between(from, p));
  };

  for (const auto& [p, pair] : all) {
    const auto& [ca, cb] = pair;
    auto has = [&](Cls c) { return ca == c || cb == c; };

    if (ca != cb) {
      Discrepancy d;
      d.location = location;
      if (has(Cls::kSpace) || has(Cls::kMaqefOnly)) {
        d.layer = 1;
        d.kind = DiscrepancyKind::kMaqefSpace;
      } else if (ca && cb) {
        if (has(Cls::kPrefix)) {
          d.layer = 2;
          d.kind = DiscrepancyKind::kPrefixMarker;
        } else {
          d.layer = 3;
          d.kind = DiscrepancyKind::kSuffixSplit;
        }
      } else if ((ca ? *ca : *cb) == Cls::kPrefix) {
        d.layer = 2;
        d.kind = DiscrepancyKind::kMissingPrefixSplit;
      } else {
        d.layer = 3;
        d.kind = DiscrepancyKind::kSuffixMarker;
      }
      auto describe = [](const std::optional<Cls>& c) {
        return c ? std::string(ClsName(*c)) : std::string("no boundary");
      };
      d.description = "after '" + letters_between(prev_pos, p) +
                      "': A has " + describe(ca) + ", B has " + describe(cb);
      result.discrepancies.push_back(std::move(d));
    }
    prev_pos = p;

    Boundary unified;
    if (has(Cls::kSpace) || has(Cls::kMaqefOnly)) {
      unified = Boundary::kSpace;
    } else if ((!ca || IsSuffix(*ca)) && (!cb || IsSuffix(*cb))) {
      unified = Boundary::kSuffix;
    } else if ((!ca || *ca == Cls::kPrefix) && (!cb || *cb == Cls::kPrefix)) {
      unified = Boundary::kPrefix;
    } else {
      unified = pieces_are_prefixes(p) ? Boundary::kPrefix : Boundary::kSuffix;
    }

    raw.segments.push_back(
        {text.substr(cuts[seg_start], cuts[p] - cuts[seg_start]), unified, {}});
    seg_start = p;
    if (unified == Boundary::kSpace) {
      token_start = p;
      prefix_cuts.clear();
      suffix_in_token = false;
    } else if (unified == Boundary::kPrefix) {
      prefix_cuts.push_back(p);
    } else {
      suffix_in_token = true;
    }
  }
  raw.segments.push_back({text.substr(cuts[seg_start]), Boundary::kNone, {}});
  result.unified = Normalize(raw, inventory);
  return result;
}

std::optional<Discrepancy> CheckMorphologyCount(
    const SegmentedWord& word, std::size_t lemma_count,
    const WordLocation& location, const PrefixInventory& inventory) {
  std::size_t raw_segments = 0;
  bool has_suffix = false;
  const SegmentedWord classified = ClassifySplit(word, inventory);
  for (const Segment& s : classified.segments) {
    raw_segments += 1 + s.suffix_offsets.size();
    has_suffix = has_suffix || !s.suffix_offsets.empty() ||
                 s.after == Boundary::kSuffix;
  }
  if (raw_segments == lemma_count) return std::nullopt;
  return Discrepancy{
      has_suffix ? 3 : 2, location, DiscrepancyKind::kInconsistentMorphology,
      "'" + word.ToString() + "' has " + std::to_string(raw_segments) +
          " segments but " + std::to_string(lemma_count) + " lemmas"};
}

std::vector<InterchangeRow> ParseInterchange(std::string_view text) {
  std::vector<InterchangeRow> rows;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string_view> f;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      f.push_back(line.substr(start, tab == std::string_view::npos
                                         ? std::string_view::npos
                                         : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    auto fail = [&](const std::string& why) {
      throw Error(ErrorCode::kMalformedSegmentation,
                  "line " + std::to_string(number) + ": " + why);
    };
    if (f.size() != 3 && f.size() != 4) fail("expected 3 or 4 columns");
    InterchangeRow row;
    row.line = number;
    row.verse = std::string(f[0]);
    auto [ptr, ec] =
        std::from_chars(f[1].data(), f[1].data() + f[1].size(), row.word);
    if (ec != std::errc() || ptr != f[1].data() + f[1].size() || row.word <= 0) {
      fail("bad word index '" + std::string(f[1]) + "'");
    }
    try {
      row.form = SegmentedWord::Parse(f[2]);
    } catch (const Error& e) {
      fail(e.what());
    }
    if (f.size() == 4 && !f[3].empty()) {
      row.lemma_count =
          static_cast<std::size_t>(std::count(f[3].begin(), f[3].end(), '/')) + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string RenderInterchange(const std::vector<InterchangeRow>& rows) {
  std::string out;
  for (const InterchangeRow& r : rows) {
    out += r.verse + "\t" + std::to_string(r.word) + "\t" + r.form.ToString() +
           "\n";
  }
  return out;
}

std::string RenderDiscrepancyTsv(
    const std::vector<Discrepancy>& discrepancies) {
  std::string out;
  for (const Discrepancy& d : discrepancies) {
    out += std::to_string(d.layer) + "\t" + d.location.verse + "\t" +
           std::to_string(d.location.word) + "\t" +
           std::string(DiscrepancyKindName(d.kind)) + "\t" + d.description +
           "\n";
  }
  return out;
}

SyncResult SynchronizeTokenization(const std::vector<InterchangeRow>& a,
                                   const std::vector<InterchangeRow>& b,
                                   const PrefixInventory& inventory) {
  std::map<std::pair<std::string, int>, const InterchangeRow*> by_key;
  for (const InterchangeRow& r : b) by_key[{r.verse, r.word}] = &r;
  SyncResult result;
  for (const InterchangeRow& ra : a) {
    auto it = by_key.find({ra.verse, ra.word});
    if (it == by_key.end()) {
      throw Error(ErrorCode::kTextMismatch,
                  ra.verse + " word " + std::to_string(ra.word) +
                      " is missing from the second input");
    }
    const InterchangeRow& rb = *it->second;
    by_key.erase(it);
    WordLocation loc{ra.verse, ra.word};
    Harmonized h = Harmonize(ra.form, rb.form, loc, inventory);
    for (auto& d : h.discrepancies) result.discrepancies.push_back(std::move(d));
    for (const InterchangeRow* r : {&ra, &rb}) {
      if (!r->lemma_count) continue;
      if (auto d = CheckMorphologyCount(r->form, *r->lemma_count, loc, inventory)) {
        result.discrepancies.push_back(std::move(*d));
      }
    }
    result.unified.push_back(InterchangeRow{ra.verse, ra.word,
                                            std::move(h.unified), std::nullopt,
                                            ra.line});
  }
  if (!by_key.empty()) {
    const InterchangeRow& extra = *by_key.begin()->second;
    throw Error(ErrorCode::kTextMismatch,
                extra.verse + " word " + std::to_string(extra.word) +
                    " is missing from the first input");
  }
  return result;
}

}  // namespace helfi
