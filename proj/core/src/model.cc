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

#include "helfi/model.h"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <tuple>

#include "helfi/error.h"

namespace helfi {
namespace {

bool IsDigit(char c) { return c >= '0' && c <= '9'; }
bool IsLower(char c) { return c >= 'a' && c <= 'z'; }

// Parses a positive decimal integer without sign or leading zeros.
std::optional<int> ParsePositive(std::string_view s) {
  if (s.empty() || s.size() > 9 || s[0] == '0') return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

bool HasSpace(std::string_view s) {
  return s.find_first_of(" \t\r\n") != std::string_view::npos;
}

std::string Pad3(int n) {
  std::string digits = std::to_string(n);
  if (digits.size() < 3) digits.insert(0, 3 - digits.size(), '0');
  return digits;
}

std::vector<std::string_view> SplitOn(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t end = s.find(sep, start);
    if (end == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, end - start));
    start = end + 1;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// BookOrder

const std::vector<std::string>& BookOrder::HebrewBibleCodes() {
  static const std::vector<std::string> kCodes = {
      "gen",  "exo",  "lev", "num", "deu", "jos", "jdg", "rut",
      "sama", "samb", "kina", "kinb", "chra", "chrb", "ezr", "neh",
      "est",  "job",  "ps",  "pro", "ecc", "sng", "isa", "jer",
      "lam",  "eze",  "dan", "hos", "joe", "amo", "oba", "jon",
      "mic",  "nah",  "hab", "zep", "hag", "zec", "mal"};
  return kCodes;
}

const std::vector<std::string>& BookOrder::NewTestamentCodes() {
  static const std::vector<std::string> kCodes = {
      "mt",   "mk",   "lk",   "jn",   "act",  "rom",  "kora", "korb", "gal",
      "eph",  "fil",  "kol",  "tesa", "tesb", "tima", "timb", "tit",  "flm",
      "hb",   "jak",  "pta",  "ptb",  "joha", "johb", "johc", "jud",  "ilm"};
  return kCodes;
}

BookOrder::BookOrder() {
  std::vector<std::string> codes = HebrewBibleCodes();
  const auto& nt = NewTestamentCodes();
  codes.insert(codes.end(), nt.begin(), nt.end());
  *this = BookOrder(std::move(codes));
}

BookOrder::BookOrder(std::vector<std::string> codes) : codes_(std::move(codes)) {
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    index_.emplace(codes_[i], i);
  }
}

std::optional<std::size_t> BookOrder::Position(std::string_view book) const {
  auto it = index_.find(std::string(book));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// VerseRef

std::string VerseRef::ToString() const {
  return book + Pad3(chapter) + ":" + Pad3(verse);
}

VerseRef VerseRef::Parse(std::string_view text) {
  auto fail = [&]() -> VerseRef {
    throw Error(ErrorCode::kMalformedVerseRef,
                "malformed verse reference '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  while (i < text.size() && IsLower(text[i])) ++i;
  if (i < 2 || i > 5) return fail();
  std::size_t colon = text.find(':', i);
  if (colon == std::string_view::npos) return fail();
  std::string_view ch = text.substr(i, colon - i);
  std::string_view vs = text.substr(colon + 1);
  auto all_digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), IsDigit);
  };
  if (!all_digits(ch) || !all_digits(vs)) return fail();
  int c = 0, v = 0;
  std::from_chars(ch.data(), ch.data() + ch.size(), c);
  std::from_chars(vs.data(), vs.data() + vs.size(), v);
  if (c <= 0 || v <= 0 || ch.size() > 6 || vs.size() > 6) return fail();
  return VerseRef{std::string(text.substr(0, i)), c, v};
}

bool VerseOrder::operator()(const VerseRef& a, const VerseRef& b) const {
  auto pa = books ? books->Position(a.book) : std::nullopt;
  auto pb = books ? books->Position(b.book) : std::nullopt;
  // Known books first, by position; unknown books after, by code.
  auto key = [](const std::optional<std::size_t>& p) {
    return p.has_value() ? *p : static_cast<std::size_t>(-1);
  };
  const std::size_t ka = key(pa);
  const std::size_t kb = key(pb);
  return std::tie(ka, a.book, a.chapter, a.verse) <
         std::tie(kb, b.book, b.chapter, b.verse);
}

// ---------------------------------------------------------------------------
// TokenId

std::string TokenId::ToString() const {
  std::string out = std::to_string(word);
  if (sub) out.push_back(sub);
  return out;
}

TokenId TokenId::Parse(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && IsDigit(text[i])) ++i;
  std::optional<int> word = ParsePositive(text.substr(0, i));
  bool ok = word.has_value() &&
            (i == text.size() || (i + 1 == text.size() && IsLower(text[i])));
  if (!ok) {
    throw Error(ErrorCode::kMalformedTokenId,
                "malformed token id '" + std::string(text) + "'");
  }
  return TokenId{*word, i < text.size() ? text[i] : char{0}};
}

// ---------------------------------------------------------------------------
// StrongCode

bool StrongCode::HasNumber(int n) const {
  if (auto* num = std::get_if<Numeric>(&value)) return num->number == n;
  if (auto* cmp = std::get_if<Compound>(&value)) {
    return cmp->lemma == n || cmp->parsing == n;
  }
  return false;
}

std::string StrongCode::ToString() const {
  if (auto* num = std::get_if<Numeric>(&value)) {
    std::string out = std::to_string(num->number);
    if (num->suffix) out.push_back(num->suffix);
    return out;
  }
  if (auto* p = std::get_if<Particle>(&value)) return std::string(1, p->letter);
  const auto& c = std::get<Compound>(value);
  return std::to_string(c.lemma) + "&" + std::to_string(c.parsing);
}

StrongCode StrongCode::Parse(std::string_view text) {
  auto fail = [&]() -> StrongCode {
    throw Error(ErrorCode::kMalformedStrongCode,
                "malformed Strong number '" + std::string(text) + "'");
  };
  if (text.size() == 1 && IsLower(text[0])) {
    return StrongCode{Particle{text[0]}};
  }
  if (auto amp = text.find('&'); amp != std::string_view::npos) {
    auto lemma = ParsePositive(text.substr(0, amp));
    auto parsing = ParsePositive(text.substr(amp + 1));
    if (!lemma || !parsing) return fail();
    return StrongCode{Compound{*lemma, *parsing}};
  }
  std::string_view digits = text;
  char suffix = 0;
  if (!text.empty() && IsLower(text.back())) {
    suffix = text.back();
    digits = text.substr(0, text.size() - 1);
  }
  auto number = ParsePositive(digits);
  if (!number) return fail();
  return StrongCode{Numeric{*number, suffix}};
}

// ---------------------------------------------------------------------------
// SourceLemma

std::string SourceLemma::ToString() const {
  std::string out = lemma.value_or("-");
  out += '/';
  out += strong ? strong->ToString() : "-";
  out += '/';
  out += concord ? std::to_string(*concord) : "-";
  return out;
}

SourceLemma SourceLemma::Parse(std::string_view text) {
  auto fail = [&](const std::string& why) -> SourceLemma {
    throw Error(ErrorCode::kMalformedLemmaTriple,
                "malformed lemma triple '" + std::string(text) + "': " + why);
  };
  auto parts = SplitOn(text, '/');
  if (parts.size() != 3) return fail("expected three '/'-separated slots");
  SourceLemma out;
  if (parts[0].empty() || HasSpace(parts[0])) return fail("bad lemma slot");
  if (parts[0] != "-") out.lemma = std::string(parts[0]);
  if (parts[1] != "-") {
    try {
      out.strong = StrongCode::Parse(parts[1]);
    } catch (const Error& e) {
      return fail(e.what());
    }
  }
  if (parts[2] != "-") {
    out.concord = ParsePositive(parts[2]);
    if (!out.concord) return fail("bad concordance entry number");
  }
  if (!out.lemma && !out.strong && !out.concord) return fail("all slots empty");
  return out;
}

// ---------------------------------------------------------------------------
// TargetLemma

std::string TargetLemma::ToString() const {
  switch (kind) {
    case Kind::kPlain: return text;
    case Kind::kPeriphery: return "(" + text + ")";
    case Kind::kExtractor: return "%" + text;
    case Kind::kNone: return "-";
  }
  return "-";
}

TargetLemma TargetLemma::Parse(std::string_view text) {
  auto fail = [&]() -> TargetLemma {
    throw Error(ErrorCode::kMalformedTargetLemma,
                "malformed target lemma '" + std::string(text) + "'");
  };
  if (text.empty() || HasSpace(text)) return fail();
  if (text == "-") return None();
  if (text.front() == '%') {
    if (text.size() == 1) return fail();
    return Extractor(std::string(text.substr(1)));
  }
  if (text.front() == '(' || text.back() == ')') {
    if (text.size() < 3 || text.front() != '(' || text.back() != ')') {
      return fail();
    }
    return Periphery(std::string(text.substr(1, text.size() - 2)));
  }
  return Plain(std::string(text));
}

// ---------------------------------------------------------------------------
// Links

std::string_view LinkKindName(LinkKind kind) {
  return kind == LinkKind::kCore ? "core" : "aux";
}

LinkKind ParseLinkKind(std::string_view name) {
  if (name == "core") return LinkKind::kCore;
  if (name == "aux") return LinkKind::kAux;
  throw Error(ErrorCode::kInvalidEdit,
              "unknown link kind '" + std::string(name) + "'");
}

std::string LinkRef::ToString() const {
  std::string id = target.ToString();
  if (verse_offset != 0) {
    id = (verse_offset > 0 ? "+" : "-") +
         std::to_string(verse_offset > 0 ? verse_offset : -verse_offset) +
         ":" + id;
  }
  return kind == LinkKind::kAux ? "(" + id + ")" : id;
}

const LinkRef* LinkField::Find(const TokenId& id, int verse_offset) const {
  for (const auto& l : links) {
    if (l.target == id && l.verse_offset == verse_offset) return &l;
  }
  return nullptr;
}

bool LinkField::HasCrossVerse() const {
  return std::any_of(links.begin(), links.end(),
                     [](const LinkRef& l) { return l.is_cross_verse(); });
}

std::string LinkField::ToString() const {
  if (links.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (i) out += ' ';
    out += links[i].ToString();
  }
  return out;
}

LinkField LinkField::Parse(std::string_view text, bool allow_cross_verse) {
  auto fail = [&](const std::string& why) -> LinkField {
    throw Error(ErrorCode::kMalformedLinkField,
                "malformed link field '" + std::string(text) + "': " + why);
  };
  std::vector<std::string_view> items;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ') ++i;
    if (i > start) items.push_back(text.substr(start, i - start));
  }
  if (items.empty()) return fail("empty");
  LinkField field;
  bool dash = false;
  for (std::string_view item : items) {
    if (item == "-") {
      dash = true;
      continue;
    }
    LinkRef ref;
    bool open = item.front() == '(';
    bool close = item.back() == ')';
    if (open != close) return fail("unbalanced parentheses");
    if (open) {
      if (item.size() < 3) return fail("empty parentheses");
      item = item.substr(1, item.size() - 2);
      ref.kind = LinkKind::kAux;
    }
    if (item.find_first_of("()") != std::string_view::npos) {
      return fail("nested parentheses");
    }
    if (!item.empty() && (item[0] == '+' || item[0] == '-')) {
      std::size_t colon = item.find(':');
      if (colon == std::string_view::npos) return fail("bad cross-verse link");
      auto offset = ParsePositive(item.substr(1, colon - 1));
      if (!offset) return fail("bad cross-verse offset");
      if (!allow_cross_verse) {
        throw Error(ErrorCode::kCrossVerseNotAllowed,
                    "cross-verse link '" + std::string(item) +
                        "' not allowed by a strict profile");
      }
      ref.verse_offset = item[0] == '+' ? *offset : -*offset;
      item = item.substr(colon + 1);
    }
    try {
      ref.target = TokenId::Parse(item);
    } catch (const Error& e) {
      return fail(e.what());
    }
    if (field.Find(ref.target, ref.verse_offset)) return fail("duplicate id");
    field.links.push_back(ref);
  }
  if (dash && !field.links.empty()) return fail("'-' mixed with ids");
  return field;
}

// ---------------------------------------------------------------------------
// MorphTags

std::string MorphTags::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += '.';
    out += atoms[i];
  }
  return out;
}

MorphTags MorphTags::Parse(std::string_view text) {
  MorphTags tags;
  for (std::string_view atom : SplitOn(text, '.')) {
    if (atom.empty() || HasSpace(atom) ||
        atom.find_first_of("-=") != std::string_view::npos) {
      throw Error(ErrorCode::kMalformedMorphTags,
                  "malformed morphology '" + std::string(text) + "'");
    }
    tags.atoms.emplace_back(atom);
  }
  return tags;
}

// ---------------------------------------------------------------------------
// VerseAlignment / CorpusConfig / Corpus

const SourceToken* VerseAlignment::FindSource(const TokenId& id) const {
  for (const auto& tok : source) {
    if (tok.id == id) return &tok;
  }
  return nullptr;
}

std::vector<std::string> CorpusConfig::DefaultExtractors() {
  return {"pers", "modus", "tasp", "case", "pro"};
}

bool CorpusConfig::IsKnownExtractor(std::string_view kind) const {
  return std::find(extractors.begin(), extractors.end(), kind) !=
         extractors.end();
}

bool CorpusConfig::IsKnownMorphTag(std::string_view atom) const {
  return morph_tags.empty() ||
         std::find(morph_tags.begin(), morph_tags.end(), atom) !=
             morph_tags.end();
}

Corpus::Corpus() : config_(std::make_shared<const CorpusConfig>()) {}

Corpus::Corpus(std::shared_ptr<const CorpusConfig> config, std::string label)
    : config_(config ? std::move(config)
                     : std::make_shared<const CorpusConfig>()),
      label_(std::move(label)) {}

void Corpus::Add(VerseAlignment verse) {
  index_.emplace(verse.ref.ToString(), verses_.size());
  verses_.push_back(std::make_shared<const VerseAlignment>(std::move(verse)));
}

void Corpus::Append(const Corpus& other) {
  for (const auto& v : other.verses_) {
    index_.emplace(v->ref.ToString(), verses_.size());
    verses_.push_back(v);
  }
}

const VerseAlignment* Corpus::Find(const VerseRef& ref) const {
  auto idx = IndexOf(ref);
  return idx ? verses_[*idx].get() : nullptr;
}

std::optional<std::size_t> Corpus::IndexOf(const VerseRef& ref) const {
  auto it = index_.find(ref.ToString());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Corpus Corpus::WithVerse(std::size_t index, VerseAlignment verse) const {
  Corpus copy = *this;
  copy.verses_.at(index) =
      std::make_shared<const VerseAlignment>(std::move(verse));
  return copy;
}

std::vector<std::size_t> Corpus::CanonicalOrder() const {
  std::vector<std::size_t> order(verses_.size());
  std::iota(order.begin(), order.end(), 0);
  VerseOrder less{&config_->book_order};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return less(verses_[a]->ref, verses_[b]->ref);
                   });
  return order;
}

Corpus Corpus::Canonicalized() const {
  Corpus out(config_, label_);
  for (std::size_t i : CanonicalOrder()) {
    out.index_.emplace(verses_[i]->ref.ToString(), out.verses_.size());
    out.verses_.push_back(verses_[i]);
  }
  return out;
}

std::vector<std::string> Corpus::Books() const {
  std::vector<std::string> books;
  for (std::size_t i : CanonicalOrder()) {
    const std::string& b = verses_[i]->ref.book;
    if (books.empty() || books.back() != b) books.push_back(b);
  }
  return books;
}

const VerseAlignment* Corpus::Offset(const VerseRef& from, int offset) const {
  std::vector<std::size_t> order = CanonicalOrder();
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (verses_[order[k]]->ref == from) {
      long target = static_cast<long>(k) + offset;
      if (target < 0 || target >= static_cast<long>(order.size())) {
        return nullptr;
      }
      return verses_[order[target]].get();
    }
  }
  return nullptr;
}

}  // namespace helfi
