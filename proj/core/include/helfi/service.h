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

#ifndef HELFI_SERVICE_H_
#define HELFI_SERVICE_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "helfi/concordance.h"
#include "helfi/diagnostic.h"
#include "helfi/error.h"
#include "helfi/format.h"
#include "helfi/model.h"
#include "helfi/validator.h"

namespace helfi {

// An Error that carries the diagnostics that caused it.
class DiagnosticError : public Error {
 public:
  DiagnosticError(ErrorCode code, const std::string& message,
                  std::vector<Diagnostic> diagnostics)
      : Error(code, message), diagnostics_(std::move(diagnostics)) {}
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

namespace edits {

struct AddLink {
  std::size_t position = 0;
  TokenId id;
  LinkKind kind = LinkKind::kCore;
  int verse_offset = 0;
  std::optional<std::size_t> index;  // insertion point; default appends
};
struct RemoveLink {
  std::size_t position = 0;
  TokenId id;
  int verse_offset = 0;
};
struct SetLinkKind {
  std::size_t position = 0;
  TokenId id;
  LinkKind kind = LinkKind::kCore;
  int verse_offset = 0;
};
struct SetTargetLemma {
  std::size_t position = 0;
  TargetLemma lemma;
};
struct SetNoSource {
  std::size_t position = 0;
};
struct SetLinks {
  std::size_t position = 0;
  LinkField links;
};

}  // namespace edits

using Edit = std::variant<edits::AddLink, edits::RemoveLink, edits::SetLinkKind,
                          edits::SetTargetLemma, edits::SetNoSource,
                          edits::SetLinks>;

// Applies `edit` to `verse` in place and returns its inverse against the
// pre-state. Throws Error(kInvalidEdit) without modifying `verse`.
Edit ApplyEdit(VerseAlignment& verse, const Edit& edit,
               bool allow_cross_verse);

enum class Direction { kNext, kPrev };

enum class SearchType { kLemma, kSurface, kStrong };
SearchType ParseSearchType(std::string_view name);

struct SearchHit {
  VerseRef verse;
  bool source = true;  // source token or target row
  std::size_t position = 0;
  std::optional<TokenId> token;  // set for source hits
};

struct ServiceOptions {
  FormatProfile profile;
  ValidatorConfig rules;
  std::string path;  // default save target
  // Writes `data` to `tmp_path`; replaceable to inject failures.
  std::function<void(const std::string& tmp_path, std::string_view data)>
      write_file;
};

class AlignService {
 public:
  AlignService(Corpus corpus, ServiceOptions options);

  struct VerseView {
    std::shared_ptr<const VerseAlignment> verse;
    std::uint64_t revision = 0;
  };

  std::uint64_t revision() const;
  std::shared_ptr<const Corpus> corpus() const;
  const ServiceOptions& options() const { return options_; }

  // Throws Error(kUnknownVerse).
  VerseView GetVerse(const VerseRef& ref) const;

  // Adjacent verse in canonical order, clamped at the ends.
  VerseRef Navigate(const VerseRef& ref, Direction direction) const;

  // All-or-nothing. Throws kRevisionConflict, kInvalidEdit, or a
  // DiagnosticError(kInvariantViolation) naming the rule that broke.
  std::uint64_t ApplyEdits(const std::string& session, const VerseRef& ref,
                           std::uint64_t base_revision,
                           const std::vector<Edit>& batch);
  std::uint64_t Undo(const std::string& session);
  std::uint64_t Redo(const std::string& session);

  // Whole corpus when `scope` is empty.
  ValidationSummary Validate(const std::optional<VerseRef>& scope = {}) const;

  std::vector<SearchHit> Search(std::string_view query, SearchType type) const;

  std::optional<HeadwordEntry> Concordance(const std::string& headword) const;

  // Validates, then writes through a temporary file and rename. Throws
  // DiagnosticError(kValidationFailed) unless `force`, Error(kIo) on write
  // failure; the target keeps its old content in both cases.
  void Save(const std::string& path, bool force = false) const;
  void Save(bool force = false) const { Save(options_.path, force); }

 private:
  struct Step {
    VerseRef ref;
    std::vector<Edit> forward;
    std::vector<Edit> inverse;  // in application order
  };
  struct Session {
    std::vector<Step> undo;
    std::vector<Step> redo;
  };

  // Applies `batch` to the verse at `ref` and publishes a new snapshot;
  // returns the inverses. Caller holds mutex_.
  std::vector<Edit> Commit(const VerseRef& ref, const std::vector<Edit>& batch,
                           bool check_invariants);

  ServiceOptions options_;
  mutable std::mutex mutex_;
  std::shared_ptr<const Corpus> corpus_;
  std::uint64_t revision_ = 0;
  std::map<std::string, Session> sessions_;
};

}  // namespace helfi

#endif  // HELFI_SERVICE_H_
