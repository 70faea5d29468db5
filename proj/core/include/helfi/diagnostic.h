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

#ifndef HELFI_DIAGNOSTIC_H_
#define HELFI_DIAGNOSTIC_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace helfi {

enum class Severity { kError, kWarning };

std::string_view SeverityName(Severity s);

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string rule;     // id from the rule catalog, e.g. "R1-dangling-link"
  std::string verse;    // rendered VerseRef, empty for file-level problems
  std::string file;
  std::size_t line = 0;  // 1-based; 0 when not tied to an input line
  std::string message;

  bool is_error() const { return severity == Severity::kError; }
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// Orders by (file, line) and keeps insertion order among equals.
void SortDiagnostics(std::vector<Diagnostic>& diags);
std::size_t CountErrors(const std::vector<Diagnostic>& diags);

// Rule ids. Format rules (F*) come from the parser, R* from verse-scope
// validation, C* from corpus-scope checks.
namespace rules {
inline constexpr std::string_view kColumns = "F1-columns";
inline constexpr std::string_view kRowKind = "F2-row-kind";
inline constexpr std::string_view kVerseRef = "F3-verse-ref";
inline constexpr std::string_view kTokenId = "F4-token-id";
inline constexpr std::string_view kLinkField = "F5-link-field";
inline constexpr std::string_view kTargetLemma = "F6-target-lemma";
inline constexpr std::string_view kMorphology = "F7-morphology";
inline constexpr std::string_view kSurface = "F8-surface";
inline constexpr std::string_view kEmptyBlock = "F9-empty-block";

inline constexpr std::string_view kDanglingLink = "R1-dangling-link";
inline constexpr std::string_view kSourceIds = "R2-source-ids";
inline constexpr std::string_view kExtractorRow = "R3-extractor-row";
inline constexpr std::string_view kNoSourceLemma = "R4-no-source-lemma";
inline constexpr std::string_view kMorphInventory = "R5-morph-inventory";
inline constexpr std::string_view kLemmaTriple = "R6-lemma-triple";
inline constexpr std::string_view kUnlinkedSource = "R7-unlinked-source";

inline constexpr std::string_view kDuplicateVerse = "C1-duplicate-verse";
inline constexpr std::string_view kBookOrder = "C2-book-order";
inline constexpr std::string_view kCrossVerseTarget = "C3-cross-verse-target";
inline constexpr std::string_view kVerseOrder = "C4-verse-order";
}  // namespace rules

}  // namespace helfi

#endif  // HELFI_DIAGNOSTIC_H_
