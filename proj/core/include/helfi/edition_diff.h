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

#ifndef HELFI_EDITION_DIFF_H_
#define HELFI_EDITION_DIFF_H_

#include <string>
#include <string_view>
#include <vector>

#include "helfi/model.h"

namespace helfi {

enum class EditionDiffKind { kMissingInA, kMissingInB, kSurfaceDiffers };

std::string_view EditionDiffKindName(EditionDiffKind kind);

struct EditionDiffEntry {
  VerseRef ref;
  EditionDiffKind kind = EditionDiffKind::kSurfaceDiffers;
  std::string detail;
  friend bool operator==(const EditionDiffEntry&, const EditionDiffEntry&) =
      default;
};

// Compares source and target surface text verse by verse. Entries come out
// in canonical verse order of `a`'s book order.
std::vector<EditionDiffEntry> EditionDiff(const Corpus& a, const Corpus& b);

std::string RenderEditionDiff(const std::vector<EditionDiffEntry>& entries);

}  // namespace helfi

#endif  // HELFI_EDITION_DIFF_H_
