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

#include "helfi/alignment.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "helfi/error.h"

namespace helfi {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Union(std::size_t a, std::size_t b) { parent_[Find(a)] = Find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<ResolvedLink> ResolveLinks(const VerseAlignment& verse) {
  std::vector<ResolvedLink> out;
  for (std::size_t pos = 0; pos < verse.target.size(); ++pos) {
    for (const LinkRef& link : verse.target[pos].links.links) {
      if (link.is_cross_verse()) continue;
      const SourceToken* tok = verse.FindSource(link.target);
      if (tok == nullptr) {
        throw Error(ErrorCode::kDanglingLink,
                    verse.ref.ToString() + ": target row " +
                        std::to_string(pos) + " links to missing token " +
                        link.target.ToString());
      }
      out.push_back({pos, tok, link.kind});
    }
  }
  return out;
}

std::vector<AlignmentGroup> AlignmentGroups(const VerseAlignment& verse) {
  const std::vector<ResolvedLink> links = ResolveLinks(verse);
  const std::size_t n_src = verse.source.size();
  // Nodes: source tokens [0, n_src), then target rows.
  DisjointSets sets(n_src + verse.target.size());
  std::vector<bool> linked(n_src + verse.target.size(), false);
  for (const ResolvedLink& l : links) {
    if (l.kind != LinkKind::kCore) continue;
    std::size_t s = static_cast<std::size_t>(l.source - verse.source.data());
    std::size_t t = n_src + l.target_position;
    sets.Union(s, t);
    linked[s] = linked[t] = true;
  }
  std::map<std::size_t, AlignmentGroup> by_root;
  for (std::size_t node = 0; node < linked.size(); ++node) {
    if (!linked[node]) continue;
    AlignmentGroup& g = by_root[sets.Find(node)];
    if (node < n_src) {
      g.source_ids.push_back(verse.source[node].id);
    } else {
      g.target_positions.push_back(node - n_src);
    }
  }
  std::vector<AlignmentGroup> groups;
  groups.reserve(by_root.size());
  for (auto& [root, g] : by_root) {
    std::sort(g.source_ids.begin(), g.source_ids.end());
    groups.push_back(std::move(g));
  }
  std::sort(groups.begin(), groups.end(),
            [](const AlignmentGroup& a, const AlignmentGroup& b) {
              return a.source_ids.front() < b.source_ids.front();
            });
  return groups;
}

CoverageStats& CoverageStats::operator+=(const CoverageStats& other) {
  core_linked += other.core_linked;
  aux_only += other.aux_only;
  no_source += other.no_source;
  extractor_rows += other.extractor_rows;
  unlinked_source += other.unlinked_source;
  return *this;
}

CoverageStats ComputeCoverage(const VerseAlignment& verse) {
  CoverageStats stats;
  std::set<TokenId> referenced;
  for (const TargetToken& row : verse.target) {
    for (const LinkRef& l : row.links.links) {
      if (!l.is_cross_verse()) referenced.insert(l.target);
    }
    if (row.lemma.is_extractor()) {
      ++stats.extractor_rows;
    } else if (row.links.IsNoSource()) {
      ++stats.no_source;
    } else if (std::any_of(row.links.links.begin(), row.links.links.end(),
                           [](const LinkRef& l) {
                             return l.kind == LinkKind::kCore;
                           })) {
      ++stats.core_linked;
    } else {
      ++stats.aux_only;
    }
  }
  for (const SourceToken& tok : verse.source) {
    if (!referenced.count(tok.id)) ++stats.unlinked_source;
  }
  return stats;
}

std::string DetokenizeTarget(const VerseAlignment& verse,
                             std::vector<std::size_t>* offsets) {
  std::string text;
  if (offsets) offsets->assign(verse.target.size(), std::string::npos);
  for (std::size_t pos = 0; pos < verse.target.size(); ++pos) {
    const TargetToken& row = verse.target[pos];
    if (row.lemma.is_extractor()) continue;
    if (offsets) (*offsets)[pos] = text.size();
    text += row.surface;
    if (row.trailing_space) text += ' ';
  }
  return text;
}

}  // namespace helfi
