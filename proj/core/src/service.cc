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

#include "helfi/service.h"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <charconv>
#include <cstring>
#include <filesystem>

#include "helfi/alignment.h"

namespace helfi {
namespace {

[[noreturn]] void Invalid(const std::string& message) {
  throw Error(ErrorCode::kInvalidEdit, message);
}

TargetToken& RowAt(VerseAlignment& verse, std::size_t position) {
  if (position >= verse.target.size()) {
    Invalid(verse.ref.ToString() + " has no target row " +
            std::to_string(position));
  }
  return verse.target[position];
}

std::vector<LinkRef>::iterator FindLink(TargetToken& row, const TokenId& id,
                                        int offset) {
  return std::find_if(row.links.links.begin(), row.links.links.end(),
                      [&](const LinkRef& l) {
                        return l.target == id && l.verse_offset == offset;
                      });
}

void CheckCrossVerse(int offset, bool allow) {
  if (offset != 0 && !allow) {
    Invalid("cross-verse links need a lenient profile");
  }
}

std::string LinkName(const TokenId& id, int offset) {
  return LinkRef{id, LinkKind::kCore, offset}.ToString();
}

struct EditApplier {
  VerseAlignment& verse;
  bool allow_cross_verse;

  Edit operator()(const edits::AddLink& e) {
    TargetToken& row = RowAt(verse, e.position);
    CheckCrossVerse(e.verse_offset, allow_cross_verse);
    if (FindLink(row, e.id, e.verse_offset) != row.links.links.end()) {
      Invalid("row " + std::to_string(e.position) + " already links " +
              LinkName(e.id, e.verse_offset));
    }
    const std::size_t index = e.index.value_or(row.links.links.size());
    if (index > row.links.links.size()) Invalid("link index out of range");
    row.links.links.insert(row.links.links.begin() + index,
                           LinkRef{e.id, e.kind, e.verse_offset});
    return edits::RemoveLink{e.position, e.id, e.verse_offset};
  }

  Edit operator()(const edits::RemoveLink& e) {
    TargetToken& row = RowAt(verse, e.position);
    auto it = FindLink(row, e.id, e.verse_offset);
    if (it == row.links.links.end()) {
      Invalid("row " + std::to_string(e.position) + " does not link " +
              LinkName(e.id, e.verse_offset));
    }
    edits::AddLink inverse{
        e.position, e.id, it->kind, e.verse_offset,
        static_cast<std::size_t>(it - row.links.links.begin())};
    row.links.links.erase(it);
    return inverse;
  }

  Edit operator()(const edits::SetLinkKind& e) {
    TargetToken& row = RowAt(verse, e.position);
    auto it = FindLink(row, e.id, e.verse_offset);
    if (it == row.links.links.end()) {
      Invalid("row " + std::to_string(e.position) + " does not link " +
              LinkName(e.id, e.verse_offset));
    }
    edits::SetLinkKind inverse{e.position, e.id, it->kind, e.verse_offset};
    it->kind = e.kind;
    return inverse;
  }

  Edit operator()(const edits::SetTargetLemma& e) {
    TargetToken& row = RowAt(verse, e.position);
    edits::SetTargetLemma inverse{e.position, row.lemma};
    row.lemma = e.lemma;
    return inverse;
  }

  Edit operator()(const edits::SetNoSource& e) {
    TargetToken& row = RowAt(verse, e.position);
    edits::SetLinks inverse{e.position, row.links};
    row.links.links.clear();
    return inverse;
  }

  Edit operator()(const edits::SetLinks& e) {
    TargetToken& row = RowAt(verse, e.position);
    for (std::size_t i = 0; i < e.links.links.size(); ++i) {
      const LinkRef& l = e.links.links[i];
      CheckCrossVerse(l.verse_offset, allow_cross_verse);
      for (std::size_t j = 0; j < i; ++j) {
        if (e.links.links[j].target == l.target &&
            e.links.links[j].verse_offset == l.verse_offset) {
          Invalid("duplicate link " + l.ToString());
        }
      }
    }
    edits::SetLinks inverse{e.position, row.links};
    row.links = e.links;
    return inverse;
  }
};

// Error diagnostics an edit could introduce: verse rules plus resolution of
// this verse's cross-verse links.
std::vector<Diagnostic> EditChecks(const VerseAlignment& verse,
                                   const Corpus& corpus,
                                   const ValidatorConfig& rules) {
  std::vector<Diagnostic> out;
  for (Diagnostic& d : ValidateVerse(verse, corpus.config(), rules)) {
    if (d.is_error()) out.push_back(std::move(d));
  }
  auto sev = rules.SeverityFor(rules::kCrossVerseTarget);
  if (sev != Severity::kError) return out;
  for (std::size_t pos = 0; pos < verse.target.size(); ++pos) {
    for (const LinkRef& l : verse.target[pos].links.links) {
      if (!l.is_cross_verse()) continue;
      const VerseAlignment* other = corpus.Offset(verse.ref, l.verse_offset);
      if (other == nullptr || other->FindSource(l.target) == nullptr) {
        out.push_back(Diagnostic{Severity::kError,
                                 std::string(rules::kCrossVerseTarget),
                                 verse.ref.ToString(), {}, 0,
                                 "target row " + std::to_string(pos + 1) +
                                     ": link " + l.ToString() +
                                     " does not resolve"});
      }
    }
  }
  return out;
}

void WriteFileDurably(const std::string& path, std::string_view data) {
  int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
  if (fd < 0) {
    throw Error(ErrorCode::kIo, "cannot create " + path + ": " +
                                    std::strerror(errno));
  }
  std::size_t done = 0;
  while (done < data.size()) {
    ssize_t n = ::write(fd, data.data() + done, data.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      const int err = errno;
      ::close(fd);
      throw Error(ErrorCode::kIo, "write to " + path + " failed: " +
                                      std::strerror(err));
    }
    done += static_cast<std::size_t>(n);
  }
  if (::fsync(fd) != 0 || ::close(fd) != 0) {
    throw Error(ErrorCode::kIo, "cannot flush " + path);
  }
}

}  // namespace

Edit ApplyEdit(VerseAlignment& verse, const Edit& edit,
               bool allow_cross_verse) {
  VerseAlignment scratch = verse;
  Edit inverse = std::visit(EditApplier{scratch, allow_cross_verse}, edit);
  verse = std::move(scratch);
  return inverse;
}

SearchType ParseSearchType(std::string_view name) {
  if (name == "lemma") return SearchType::kLemma;
  if (name == "surface") return SearchType::kSurface;
  if (name == "strong") return SearchType::kStrong;
  throw Error(ErrorCode::kPrecondition,
              "search type must be lemma, surface or strong");
}

AlignService::AlignService(Corpus corpus, ServiceOptions options)
    : options_(std::move(options)),
      corpus_(std::make_shared<const Corpus>(std::move(corpus))) {
  if (!options_.write_file) options_.write_file = WriteFileDurably;
}

std::uint64_t AlignService::revision() const {
  std::lock_guard lock(mutex_);
  return revision_;
}

std::shared_ptr<const Corpus> AlignService::corpus() const {
  std::lock_guard lock(mutex_);
  return corpus_;
}

AlignService::VerseView AlignService::GetVerse(const VerseRef& ref) const {
  std::shared_ptr<const Corpus> corpus;
  std::uint64_t revision;
  {
    std::lock_guard lock(mutex_);
    corpus = corpus_;
    revision = revision_;
  }
  std::optional<std::size_t> index = corpus->IndexOf(ref);
  if (!index) {
    throw Error(ErrorCode::kUnknownVerse, "unknown verse " + ref.ToString());
  }
  return {corpus->verses()[*index], revision};
}

VerseRef AlignService::Navigate(const VerseRef& ref,
                                Direction direction) const {
  std::shared_ptr<const Corpus> corpus = this->corpus();
  const std::vector<std::size_t> order = corpus->CanonicalOrder();
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (corpus->at(order[k]).ref != ref) continue;
    if (direction == Direction::kNext && k + 1 < order.size()) ++k;
    if (direction == Direction::kPrev && k > 0) --k;
    return corpus->at(order[k]).ref;
  }
  throw Error(ErrorCode::kUnknownVerse, "unknown verse " + ref.ToString());
}

std::vector<Edit> AlignService::Commit(const VerseRef& ref,
                                       const std::vector<Edit>& batch,
                                       bool check_invariants) {
  std::optional<std::size_t> index = corpus_->IndexOf(ref);
  if (!index) {
    throw Error(ErrorCode::kUnknownVerse, "unknown verse " + ref.ToString());
  }
  const VerseAlignment& before = corpus_->at(*index);
  VerseAlignment after = before;
  std::vector<Edit> inverses;
  inverses.reserve(batch.size());
  const bool lenient = options_.profile.lenient;
  for (const Edit& edit : batch) {
    if (const auto* e = std::get_if<edits::SetTargetLemma>(&edit)) {
      if (e->lemma.is_extractor() && !lenient &&
          !corpus_->config().IsKnownExtractor(e->lemma.text)) {
        Invalid("unknown extractor '%" + e->lemma.text + "'");
      }
    }
    inverses.push_back(ApplyEdit(after, edit, lenient));
  }
  Corpus next = corpus_->WithVerse(*index, std::move(after));
  if (check_invariants) {
    std::map<std::string, int> delta;
    for (const Diagnostic& d : EditChecks(before, *corpus_, options_.rules)) {
      --delta[d.rule];
    }
    std::vector<Diagnostic> now =
        EditChecks(next.at(*index), next, options_.rules);
    for (const Diagnostic& d : now) ++delta[d.rule];
    for (const auto& [rule, n] : delta) {
      if (n <= 0) continue;
      std::vector<Diagnostic> culprits;
      for (const Diagnostic& d : now) {
        if (d.rule == rule) culprits.push_back(d);
      }
      throw DiagnosticError(ErrorCode::kInvariantViolation,
                            "edit would introduce " + rule + " errors",
                            std::move(culprits));
    }
  }
  corpus_ = std::make_shared<const Corpus>(std::move(next));
  ++revision_;
  return inverses;
}

std::uint64_t AlignService::ApplyEdits(const std::string& session,
                                       const VerseRef& ref,
                                       std::uint64_t base_revision,
                                       const std::vector<Edit>& batch) {
  std::lock_guard lock(mutex_);
  if (base_revision != revision_) {
    throw Error(ErrorCode::kRevisionConflict,
                "base revision " + std::to_string(base_revision) +
                    " is stale; current revision is " +
                    std::to_string(revision_));
  }
  if (batch.empty()) Invalid("empty edit batch");
  std::vector<Edit> inverse = Commit(ref, batch, true);
  Session& s = sessions_[session];
  s.undo.push_back(Step{ref, batch, std::move(inverse)});
  s.redo.clear();
  return revision_;
}

std::uint64_t AlignService::Undo(const std::string& session) {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(session);
  if (it == sessions_.end() || it->second.undo.empty()) {
    throw Error(ErrorCode::kNothingToUndo, "nothing to undo");
  }
  Session& s = it->second;
  Step step = s.undo.back();
  std::vector<Edit> reversed(step.inverse.rbegin(), step.inverse.rend());
  Commit(step.ref, reversed, false);
  s.undo.pop_back();
  s.redo.push_back(std::move(step));
  return revision_;
}

std::uint64_t AlignService::Redo(const std::string& session) {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(session);
  if (it == sessions_.end() || it->second.redo.empty()) {
    throw Error(ErrorCode::kNothingToRedo, "nothing to redo");
  }
  Session& s = it->second;
  Step step = s.redo.back();
  step.inverse = Commit(step.ref, step.forward, false);
  s.redo.pop_back();
  s.undo.push_back(std::move(step));
  return revision_;
}

ValidationSummary AlignService::Validate(
    const std::optional<VerseRef>& scope) const {
  std::shared_ptr<const Corpus> corpus = this->corpus();
  if (!scope) return ValidateCorpus(*corpus, options_.rules);
  const VerseAlignment* verse = corpus->Find(*scope);
  if (verse == nullptr) {
    throw Error(ErrorCode::kUnknownVerse, "unknown verse " + scope->ToString());
  }
  ValidationSummary summary;
  summary.diagnostics = ValidateVerse(*verse, corpus->config(), options_.rules);
  summary.coverage = ComputeCoverage(*verse);
  summary.verses = 1;
  for (const Rule& r : RuleCatalog()) summary.counts[r.id];
  for (const Diagnostic& d : summary.diagnostics) {
    RuleCount& c = summary.counts[d.rule];
    (d.is_error() ? c.errors : c.warnings) += 1;
  }
  return summary;
}

std::vector<SearchHit> AlignService::Search(std::string_view query,
                                            SearchType type) const {
  std::shared_ptr<const Corpus> corpus = this->corpus();
  std::optional<int> number;
  std::optional<StrongCode> code;
  if (type == SearchType::kStrong) {
    int n = 0;
    auto [ptr, ec] = std::from_chars(query.data(), query.data() + query.size(), n);
    if (ec == std::errc() && ptr == query.data() + query.size()) {
      number = n;
    } else {
      try {
        code = StrongCode::Parse(query);
      } catch (const Error&) {
        return {};
      }
    }
  }
  std::vector<SearchHit> hits;
  for (std::size_t i : corpus->CanonicalOrder()) {
    const VerseAlignment& v = corpus->at(i);
    for (std::size_t k = 0; k < v.source.size(); ++k) {
      const SourceToken& t = v.source[k];
      bool match = false;
      switch (type) {
        case SearchType::kLemma:
          match = t.lemma.lemma && *t.lemma.lemma == query;
          break;
        case SearchType::kSurface:
          match = t.surface == query;
          break;
        case SearchType::kStrong:
          match = t.lemma.strong && (number ? t.lemma.strong->HasNumber(*number)
                                            : *t.lemma.strong == *code);
          break;
      }
      if (match) hits.push_back({v.ref, true, k, t.id});
    }
    if (type == SearchType::kStrong) continue;
    for (std::size_t k = 0; k < v.target.size(); ++k) {
      const TargetToken& row = v.target[k];
      const bool match = type == SearchType::kLemma
                             ? !row.lemma.is_none() && row.lemma.text == query
                             : row.surface == query;
      if (match) hits.push_back({v.ref, false, k, std::nullopt});
    }
  }
  return hits;
}

std::optional<HeadwordEntry> AlignService::Concordance(
    const std::string& headword) const {
  std::shared_ptr<const Corpus> corpus = this->corpus();
  ConcordanceIndex index = BuildIndex(*corpus);
  auto it = index.find(headword);
  if (it == index.end()) return std::nullopt;
  ConcordanceIndex one;
  one.insert(*it);
  return HeadwordEntries(one).front();
}

void AlignService::Save(const std::string& path, bool force) const {
  if (path.empty()) {
    throw Error(ErrorCode::kPrecondition, "no save path configured");
  }
  std::shared_ptr<const Corpus> corpus = this->corpus();
  ValidationSummary summary = ValidateCorpus(*corpus, options_.rules);
  if (summary.error_count() > 0 && !force) {
    std::vector<Diagnostic> errors;
    for (const Diagnostic& d : summary.diagnostics) {
      if (d.is_error()) errors.push_back(d);
    }
    throw DiagnosticError(ErrorCode::kValidationFailed,
                          std::to_string(errors.size()) +
                              " validation errors; not saved",
                          std::move(errors));
  }
  const std::string data = Serialize(*corpus, options_.profile);

  static std::atomic<unsigned> counter{0};
  const std::string tmp = path + ".tmp-" + std::to_string(::getpid()) + "-" +
                          std::to_string(counter++);
  try {
    options_.write_file(tmp, data);
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error(ErrorCode::kIo, "cannot replace " + path + ": " + ec.message());
  } catch (...) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    try {
      throw;
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kIo, "saving " + path + " failed: " + e.what());
    }
  }
}

}  // namespace helfi
