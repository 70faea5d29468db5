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

#ifndef HELFI_ALIGNMENT_H_
#define HELFI_ALIGNMENT_H_

#include <cstddef>
#include <string>
#include <vector>

#include "helfi/model.h"

namespace helfi {

// A link with its source token looked up. `source` points into the verse
// passed to ResolveLinks and lives as long as that verse.
struct ResolvedLink {
  std::size_t target_position = 0;
  const SourceToken* source = nullptr;
  LinkKind kind = LinkKind::kCore;
};

// One entry per verse-local LinkRef, in target-row order. Cross-verse links
// are skipped; they resolve at corpus level. Throws Error(kDanglingLink).
std::vector<ResolvedLink> ResolveLinks(const VerseAlignment& verse);

// Connected components over core links, ordered by smallest source id.
std::vector<AlignmentGroup> AlignmentGroups(const VerseAlignment& verse);

struct CoverageStats {
  std::size_t core_linked = 0;
  std::size_t aux_only = 0;
  std::size_t no_source = 0;
  std::size_t extractor_rows = 0;
  std::size_t unlinked_source = 0;

  std::size_t target_rows() const {
    return core_linked + aux_only + no_source + extractor_rows;
  }
  CoverageStats& operator+=(const CoverageStats& other);
  friend bool operator==(const CoverageStats&, const CoverageStats&) = default;
};

CoverageStats ComputeCoverage(const VerseAlignment& verse);

// Running target text. Extractor rows contribute nothing; a single space
// follows each token with trailing_space set. If `offsets` is given it
// receives, per target row, the byte offset of its surface in the result
// (std::string::npos for extractor rows).
std::string DetokenizeTarget(const VerseAlignment& verse,
                             std::vector<std::size_t>* offsets = nullptr);

}  // namespace helfi

#endif  // HELFI_ALIGNMENT_H_
