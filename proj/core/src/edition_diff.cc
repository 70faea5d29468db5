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

#include "helfi/edition_diff.h"

#include <algorithm>

#include "helfi/alignment.h"

namespace helfi {
namespace {

std::string SourceText(const VerseAlignment& verse) {
  std::string out;
  for (const SourceToken& t : verse.source) {
    if (!out.empty()) out += ' ';
    out += t.surface;
  }
  return out;
}

// First differing word, for the report detail.
std::string FirstDifference(std::string_view a, std::string_view b) {
  auto split = [](std::string_view s) {
    std::vector<std::string_view> words;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t end = s.find(' ', pos);
      if (end == std::string_view::npos) end = s.size();
      if (end > pos) words.push_back(s.substr(pos, end - pos));
      pos = end + 1;
    }
    return words;
  };
  const auto wa = split(a);
  const auto wb = split(b);
  for (std::size_t i = 0; i < std::max(wa.size(), wb.size()); ++i) {
    std::string_view x = i < wa.size() ? wa[i] : std::string_view("<none>");
    std::string_view y = i < wb.size() ? wb[i] : std::string_view("<none>");
    if (x != y) {
      return "word " + std::to_string(i + 1) + ": '" + std::string(x) +
             "' vs '" + std::string(y) + "'";
    }
  }
  return "whitespace differs";
}

}  // namespace

std::string_view EditionDiffKindName(EditionDiffKind kind) {
  switch (kind) {
    case EditionDiffKind::kMissingInA: return "missing-in-A";
    case EditionDiffKind::kMissingInB: return "missing-in-B";
    case EditionDiffKind::kSurfaceDiffers: return "surface-differs";
  }
  return "";
}

std::vector<EditionDiffEntry> EditionDiff(const Corpus& a, const Corpus& b) {
  std::vector<EditionDiffEntry> out;
  for (const auto& va : a.verses()) {
    const VerseAlignment* vb = b.Find(va->ref);
    if (vb == nullptr) {
      out.push_back({va->ref, EditionDiffKind::kMissingInB, {}});
      continue;
    }
    const std::string sa = SourceText(*va);
    const std::string sb = SourceText(*vb);
    if (sa != sb) {
      out.push_back({va->ref, EditionDiffKind::kSurfaceDiffers,
                     "source " + FirstDifference(sa, sb)});
      continue;
    }
    const std::string ta = DetokenizeTarget(*va);
    const std::string tb = DetokenizeTarget(*vb);
    if (ta != tb) {
      out.push_back({va->ref, EditionDiffKind::kSurfaceDiffers,
                     "target " + FirstDifference(ta, tb)});
    }
  }
  for (const auto& vb : b.verses()) {
    if (a.Find(vb->ref) == nullptr) {
      out.push_back({vb->ref, EditionDiffKind::kMissingInA, {}});
    }
  }
  VerseOrder order{&a.config().book_order};
  std::stable_sort(out.begin(), out.end(),
                   [&](const EditionDiffEntry& x, const EditionDiffEntry& y) {
                     return order(x.ref, y.ref);
                   });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string RenderEditionDiff(const std::vector<EditionDiffEntry>& entries) {
  std::string out;
  for (const EditionDiffEntry& e : entries) {
    out += e.ref.ToString() + "\t" + std::string(EditionDiffKindName(e.kind)) +
           "\t" + e.detail + "\n";
  }
  return out;
}

}  // namespace helfi
