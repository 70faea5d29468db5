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

// In-memory model of a morpheme-aligned bitext: one VerseAlignment per verse
// holding the source subtokens and the target rows that link to them.

#ifndef HELFI_MODEL_H_
#define HELFI_MODEL_H_

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace helfi {

// Ordered list of book codes. The position of a code defines canonical
// verse order.
class BookOrder {
 public:
  // The conventional 39-book Hebrew Bible order followed by the 27 books of
  // the Greek New Testament.
  BookOrder();
  explicit BookOrder(std::vector<std::string> codes);

  std::optional<std::size_t> Position(std::string_view book) const;
  bool Contains(std::string_view book) const {
    return Position(book).has_value();
  }
  const std::vector<std::string>& codes() const { return codes_; }

  static const std::vector<std::string>& HebrewBibleCodes();
  static const std::vector<std::string>& NewTestamentCodes();

 private:
  std::vector<std::string> codes_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Book/chapter/verse address rendered as "ps001:001".
struct VerseRef {
  std::string book;
  int chapter = 0;
  int verse = 0;

  std::string ToString() const;
  static VerseRef Parse(std::string_view text);

  friend bool operator==(const VerseRef&, const VerseRef&) = default;
};

// Canonical ordering: book position, chapter, verse. Books missing from the
// order sort after all known books, by code.
struct VerseOrder {
  const BookOrder* books;
  bool operator()(const VerseRef& a, const VerseRef& b) const;
};

// Source subtoken address: word index plus optional subtoken letter ("6b").
// Absent letter (0) sorts before 'a'.
struct TokenId {
  int word = 0;
  char sub = 0;

  bool has_sub() const { return sub != 0; }
  std::string ToString() const;
  static TokenId Parse(std::string_view text);

  friend auto operator<=>(const TokenId&, const TokenId&) = default;
};

// Enhanced Strong number: "834a", particle "b", or Greek compound
// "2980&5660" (lemma number & parsing number).
struct StrongCode {
  struct Numeric {
    int number = 0;
    char suffix = 0;
    friend auto operator<=>(const Numeric&, const Numeric&) = default;
  };
  struct Particle {
    char letter = 0;
    friend auto operator<=>(const Particle&, const Particle&) = default;
  };
  struct Compound {
    int lemma = 0;
    int parsing = 0;
    friend auto operator<=>(const Compound&, const Compound&) = default;
  };

  std::variant<Numeric, Particle, Compound> value;

  bool IsParticle() const { return std::holds_alternative<Particle>(value); }
  // True if any numeric slot equals n.
  bool HasNumber(int n) const;
  std::string ToString() const;
  static StrongCode Parse(std::string_view text);

  friend bool operator==(const StrongCode&, const StrongCode&) = default;
  friend bool operator<(const StrongCode& a, const StrongCode& b) {
    return a.value < b.value;
  }
};

// The source lemma triple "lemma/strong/concordance-entry"; "-" marks an
// absent slot.
struct SourceLemma {
  std::optional<std::string> lemma;
  std::optional<StrongCode> strong;
  std::optional<int> concord;

  std::string ToString() const;
  static SourceLemma Parse(std::string_view text);

  friend bool operator==(const SourceLemma&, const SourceLemma&) = default;
};

struct TargetLemma {
  enum class Kind { kPlain, kPeriphery, kExtractor, kNone };

  Kind kind = Kind::kNone;
  // Lemma for kPlain/kPeriphery (multiword joined by '_'), extractor name
  // without '%' for kExtractor, empty for kNone.
  std::string text;

  static TargetLemma Plain(std::string s) { return {Kind::kPlain, std::move(s)}; }
  static TargetLemma Periphery(std::string s) {
    return {Kind::kPeriphery, std::move(s)};
  }
  static TargetLemma Extractor(std::string s) {
    return {Kind::kExtractor, std::move(s)};
  }
  static TargetLemma None() { return {Kind::kNone, {}}; }

  bool is_plain() const { return kind == Kind::kPlain; }
  bool is_periphery() const { return kind == Kind::kPeriphery; }
  bool is_extractor() const { return kind == Kind::kExtractor; }
  bool is_none() const { return kind == Kind::kNone; }

  std::string ToString() const;
  // Syntax only; extractor names are not checked against an inventory.
  static TargetLemma Parse(std::string_view text);

  friend bool operator==(const TargetLemma&, const TargetLemma&) = default;
};

enum class LinkKind { kCore, kAux };

std::string_view LinkKindName(LinkKind kind);
LinkKind ParseLinkKind(std::string_view name);

struct LinkRef {
  TokenId target;
  LinkKind kind = LinkKind::kCore;
  // Non-zero for links into another verse, counted in canonical corpus order.
  int verse_offset = 0;

  bool is_cross_verse() const { return verse_offset != 0; }
  std::string ToString() const;

  friend bool operator==(const LinkRef&, const LinkRef&) = default;
};

// Per-row link set. An empty list is the no-source marker "-".
struct LinkField {
  std::vector<LinkRef> links;

  bool IsNoSource() const { return links.empty(); }
  const LinkRef* Find(const TokenId& id, int verse_offset = 0) const;
  bool HasCrossVerse() const;

  std::string ToString() const;
  static LinkField Parse(std::string_view text, bool allow_cross_verse = false);

  friend bool operator==(const LinkField&, const LinkField&) = default;
};

// Leipzig-style gloss atoms joined by '.'.
struct MorphTags {
  std::vector<std::string> atoms;

  std::string ToString() const;
  static MorphTags Parse(std::string_view text);

  friend bool operator==(const MorphTags&, const MorphTags&) = default;
};

struct SourceToken {
  TokenId id;
  SourceLemma lemma;
  MorphTags morph;
  std::string surface;
  std::string translit;

  friend bool operator==(const SourceToken&, const SourceToken&) = default;
};

// One target row. Its position is its index in VerseAlignment::target.
struct TargetToken {
  LinkField links;
  TargetLemma lemma;
  MorphTags morph;
  std::string surface;
  bool trailing_space = false;

  friend bool operator==(const TargetToken&, const TargetToken&) = default;
};

struct VerseAlignment {
  VerseRef ref;
  std::vector<SourceToken> source;
  std::vector<TargetToken> target;

  const SourceToken* FindSource(const TokenId& id) const;

  friend bool operator==(const VerseAlignment&, const VerseAlignment&) =
      default;
};

// Connected component of the core-link bipartite graph.
struct AlignmentGroup {
  std::vector<TokenId> source_ids;              // ascending
  std::vector<std::size_t> target_positions;    // ascending

  friend bool operator==(const AlignmentGroup&, const AlignmentGroup&) =
      default;
};

struct CorpusConfig {
  BookOrder book_order;
  std::vector<std::string> extractors = DefaultExtractors();
  // Empty inventory disables morph-atom checks.
  std::vector<std::string> morph_tags;

  bool IsKnownExtractor(std::string_view kind) const;
  bool IsKnownMorphTag(std::string_view atom) const;

  static std::vector<std::string> DefaultExtractors();
};

// Immutable-after-build collection of verses in input order. Verses are
// shared between copies, so replacing one verse is cheap and never mutates
// a snapshot another reader holds.
class Corpus {
 public:
  Corpus();
  explicit Corpus(std::shared_ptr<const CorpusConfig> config,
                  std::string label = {});

  const CorpusConfig& config() const { return *config_; }
  const std::shared_ptr<const CorpusConfig>& config_ptr() const {
    return config_;
  }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  void Add(VerseAlignment verse);
  // Appends the verses of `other`, sharing them.
  void Append(const Corpus& other);

  std::size_t size() const { return verses_.size(); }
  bool empty() const { return verses_.empty(); }
  const VerseAlignment& at(std::size_t i) const { return *verses_.at(i); }
  const std::vector<std::shared_ptr<const VerseAlignment>>& verses() const {
    return verses_;
  }

  // First verse with this reference, or nullptr.
  const VerseAlignment* Find(const VerseRef& ref) const;
  std::optional<std::size_t> IndexOf(const VerseRef& ref) const;

  // Copy of this corpus with verses_[index] replaced.
  Corpus WithVerse(std::size_t index, VerseAlignment verse) const;

  // Indices of verses in canonical order (stable for duplicates).
  std::vector<std::size_t> CanonicalOrder() const;
  Corpus Canonicalized() const;

  // Distinct book codes in canonical order.
  std::vector<std::string> Books() const;

  // Verse reached by following a cross-verse offset from `from`, in
  // canonical order.
  const VerseAlignment* Offset(const VerseRef& from, int offset) const;

 private:
  std::shared_ptr<const CorpusConfig> config_;
  std::string label_;
  std::vector<std::shared_ptr<const VerseAlignment>> verses_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace helfi

#endif  // HELFI_MODEL_H_
