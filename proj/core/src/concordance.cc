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

#include "helfi/concordance.h"

#include <algorithm>
#include <future>

#include "helfi/alignment.h"
#include "helfi/utf8.h"
#include "json_codec.h"

namespace helfi {
namespace {

bool IsMultiword(const std::string& lemma) {
  return lemma.find_first_of("_ ") != std::string::npos;
}

void IndexVerse(const VerseAlignment& verse, ConcordanceIndexes& out) {
  std::vector<std::size_t> offsets;
  const std::string context = DetokenizeTarget(verse, &offsets);
  std::vector<ResolvedLink> links = ResolveLinks(verse);
  for (std::size_t pos = 0; pos < verse.target.size(); ++pos) {
    const TargetToken& row = verse.target[pos];
    ConcordanceIndex* index = nullptr;
    if (row.lemma.is_plain()) {
      index = &out.main;
    } else if (row.lemma.is_periphery() && IsMultiword(row.lemma.text)) {
      index = &out.periphery;
    } else {
      continue;
    }
    Occurrence occ;
    occ.verse = verse.ref;
    occ.target_position = pos;
    occ.headword = row.lemma.text;
    occ.surface = row.surface;
    occ.context = context;
    occ.keyword_offset = offsets[pos];
    for (const ResolvedLink& l : links) {
      if (l.target_position != pos) continue;
      occ.sources.push_back(SourceLink{l.source->lemma.strong, l.kind,
                                       l.source->lemma.concord,
                                       l.source->lemma.lemma, l.source->id});
    }
    (*index)[row.lemma.text].push_back(std::move(occ));
  }
}

void Merge(ConcordanceIndex& into, ConcordanceIndex&& from) {
  for (auto& [headword, occs] : from) {
    auto& dst = into[headword];
    dst.insert(dst.end(), std::make_move_iterator(occs.begin()),
               std::make_move_iterator(occs.end()));
  }
}

char32_t FoldCase(char32_t cp) {
  if ((cp >= 'A' && cp <= 'Z') || (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7)) {
    return cp + 0x20;
  }
  return cp;
}

bool CaseInsensitiveLess(const std::string& a, const std::string& b) {
  std::vector<char32_t> x = utf8::Decode(a);
  std::vector<char32_t> y = utf8::Decode(b);
  std::transform(x.begin(), x.end(), x.begin(), FoldCase);
  std::transform(y.begin(), y.end(), y.begin(), FoldCase);
  if (x != y) return x < y;
  return a < b;
}

std::string PadLeft(std::size_t n) { return std::string(n, ' '); }

}  // namespace

std::optional<StrongCode> Occurrence::PrimaryStrong() const {
  for (const SourceLink& s : sources) {
    if (s.kind == LinkKind::kCore && s.strong) return s.strong;
  }
  return std::nullopt;
}

ConcordanceIndexes BuildIndexes(const Corpus& corpus) {
  // Split canonical order into per-book runs, index each run concurrently
  // and merge in order.
  std::vector<std::vector<std::size_t>> runs;
  for (std::size_t i : corpus.CanonicalOrder()) {
    if (runs.empty() ||
        corpus.at(runs.back().front()).ref.book != corpus.at(i).ref.book) {
      runs.emplace_back();
    }
    runs.back().push_back(i);
  }
  auto index_run = [&corpus](const std::vector<std::size_t>& run) {
    ConcordanceIndexes part;
    for (std::size_t i : run) IndexVerse(corpus.at(i), part);
    return part;
  };
  std::vector<std::future<ConcordanceIndexes>> parts;
  parts.reserve(runs.size());
  for (const auto& run : runs) {
    parts.push_back(std::async(runs.size() > 1 ? std::launch::async
                                               : std::launch::deferred,
                               index_run, std::cref(run)));
  }
  ConcordanceIndexes out;
  for (auto& f : parts) {
    ConcordanceIndexes part = f.get();
    Merge(out.main, std::move(part.main));
    Merge(out.periphery, std::move(part.periphery));
  }
  return out;
}

ConcordanceIndex BuildIndex(const Corpus& corpus) {
  return BuildIndexes(corpus).main;
}

std::string KwicLine(const Occurrence& occ, const KwicOptions& options) {
  const std::size_t open = utf8::Length(options.open_marker);
  const std::size_t close = utf8::Length(options.close_marker);
  const std::size_t kw = utf8::Length(occ.surface);
  const std::size_t width = std::max(options.width, kw + open + close);

  std::size_t start = (width - 1) / 2;
  start = std::max(start, open);
  if (start + kw + close > width) start = width - kw - close;

  std::vector<char32_t> left;
  std::vector<char32_t> right;
  if (occ.keyword_offset != std::string::npos &&
      occ.keyword_offset <= occ.context.size()) {
    left = utf8::Decode(std::string_view(occ.context).substr(0, occ.keyword_offset));
    std::size_t after = std::min(occ.context.size(),
                                 occ.keyword_offset + occ.surface.size());
    right = utf8::Decode(std::string_view(occ.context).substr(after));
  }
  for (char32_t& c : left) if (c == '\t' || c == '\n') c = ' ';
  for (char32_t& c : right) if (c == '\t' || c == '\n') c = ' ';

  const std::size_t left_room = start - open;
  const std::size_t right_room = width - (start + kw + close);
  std::string line = occ.verse.ToString() + " ";
  if (left.size() < left_room) {
    line += PadLeft(left_room - left.size());
    line += utf8::Encode(left);
  } else {
    line += utf8::Encode(
        std::vector<char32_t>(left.end() - left_room, left.end()));
  }
  line += options.open_marker + occ.surface + options.close_marker;
  if (right.size() > right_room) right.resize(right_room);
  line += utf8::Encode(right);
  while (!line.empty() && line.back() == ' ') line.pop_back();
  return line;
}

std::size_t HeadwordEntry::total() const {
  std::size_t n = 0;
  for (const StrongGroup& g : groups) n += g.occurrences.size();
  return n;
}

std::vector<HeadwordEntry> HeadwordEntries(const ConcordanceIndex& index,
                                           Collation collation) {
  std::vector<HeadwordEntry> entries;
  entries.reserve(index.size());
  for (const auto& [headword, occs] : index) {
    HeadwordEntry entry{headword, {}};
    for (const Occurrence& occ : occs) {
      std::optional<StrongCode> key = occ.PrimaryStrong();
      auto it = std::find_if(entry.groups.begin(), entry.groups.end(),
                             [&](const StrongGroup& g) { return g.strong == key; });
      if (it == entry.groups.end()) {
        entry.groups.push_back({key, {}});
        it = entry.groups.end() - 1;
      }
      it->occurrences.push_back(occ);
    }
    std::sort(entry.groups.begin(), entry.groups.end(),
              [](const StrongGroup& a, const StrongGroup& b) {
                if (a.occurrences.size() != b.occurrences.size()) {
                  return a.occurrences.size() > b.occurrences.size();
                }
                if (a.strong.has_value() != b.strong.has_value()) {
                  return a.strong.has_value();
                }
                return a.strong && *a.strong < *b.strong;
              });
    entries.push_back(std::move(entry));
  }
  if (collation == Collation::kCaseInsensitive) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const HeadwordEntry& a, const HeadwordEntry& b) {
                       return CaseInsensitiveLess(a.headword, b.headword);
                     });
  }
  return entries;
}

std::string RenderPrintable(const std::vector<HeadwordEntry>& entries,
                            const KwicOptions& options) {
  std::string out;
  for (const HeadwordEntry& entry : entries) {
    out += entry.headword + "\n";
    for (const StrongGroup& g : entry.groups) {
      out += "  " + (g.strong ? g.strong->ToString() : std::string("-")) +
             " (" + std::to_string(g.occurrences.size()) + ")\n";
      for (const Occurrence& occ : g.occurrences) {
        out += "    " + KwicLine(occ, options);
        std::string aux;
        for (const SourceLink& s : occ.sources) {
          if (s.kind != LinkKind::kAux || !s.strong) continue;
          aux += (aux.empty() ? "" : ",") + s.strong->ToString();
        }
        if (!aux.empty()) out += "  +aux " + aux;
        out += "\n";
      }
    }
  }
  return out;
}

std::string RenderTsv(const std::vector<HeadwordEntry>& entries,
                      const KwicOptions& options) {
  std::string out = "headword\tstrong\tverse\tkwic\n";
  for (const HeadwordEntry& entry : entries) {
    for (const StrongGroup& g : entry.groups) {
      const std::string strong = g.strong ? g.strong->ToString() : "-";
      for (const Occurrence& occ : g.occurrences) {
        out += entry.headword + "\t" + strong + "\t" + occ.verse.ToString() +
               "\t" + KwicLine(occ, options) + "\n";
      }
    }
  }
  return out;
}

std::string RenderJson(const std::vector<HeadwordEntry>& entries,
                       const KwicOptions& options) {
  nlohmann::json out = nlohmann::json::array();
  for (const HeadwordEntry& e : entries) out.push_back(codec::ToJson(e, options));
  return out.dump(2) + "\n";
}

}  // namespace helfi
