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

#include "json_codec.h"

#include "helfi/alignment.h"
#include "helfi/concordance.h"

namespace helfi::codec {
namespace {

json Optional(const std::optional<std::string>& s) {
  return s ? json(*s) : json(nullptr);
}

std::string_view TargetLemmaKindName(TargetLemma::Kind kind) {
  switch (kind) {
    case TargetLemma::Kind::kPlain: return "plain";
    case TargetLemma::Kind::kPeriphery: return "periphery";
    case TargetLemma::Kind::kExtractor: return "extractor";
    case TargetLemma::Kind::kNone: return "none";
  }
  return "";
}

json ToJson(const LinkRef& l) {
  return {{"target", l.target.ToString()},
          {"kind", LinkKindName(l.kind)},
          {"verse_offset", l.verse_offset}};
}

json ToJson(const TargetLemma& lemma) {
  return {{"kind", TargetLemmaKindName(lemma.kind)},
          {"text", lemma.text},
          {"field", lemma.ToString()}};
}

template <typename T>
T Field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw Error(ErrorCode::kInvalidEdit,
                std::string("edit is missing '") + name + "'");
  }
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::kInvalidEdit,
                std::string("edit field '") + name + "' has the wrong type");
  }
}

template <typename T>
T FieldOr(const json& j, const char* name, T fallback) {
  return j.contains(name) ? Field<T>(j, name) : fallback;
}

TokenId IdField(const json& j) {
  try {
    return TokenId::Parse(Field<std::string>(j, "id"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidEdit) throw;
    throw Error(ErrorCode::kInvalidEdit, e.what());
  }
}

}  // namespace

json ToJson(const VerseAlignment& verse) {
  json source = json::array();
  for (const SourceToken& t : verse.source) {
    source.push_back(
        {{"id", t.id.ToString()},
         {"lemma",
          {{"lemma", Optional(t.lemma.lemma)},
           {"strong", t.lemma.strong ? json(t.lemma.strong->ToString())
                                     : json(nullptr)},
           {"concord", t.lemma.concord ? json(*t.lemma.concord)
                                       : json(nullptr)},
           {"field", t.lemma.ToString()}}},
         {"morph", t.morph.ToString()},
         {"surface", t.surface},
         {"translit", t.translit}});
  }
  json target = json::array();
  for (std::size_t pos = 0; pos < verse.target.size(); ++pos) {
    const TargetToken& row = verse.target[pos];
    json links = json::array();
    for (const LinkRef& l : row.links.links) links.push_back(ToJson(l));
    target.push_back({{"position", pos},
                      {"links", links},
                      {"links_field", row.links.ToString()},
                      {"lemma", ToJson(row.lemma)},
                      {"morph", row.morph.ToString()},
                      {"surface", row.surface},
                      {"trailing_space", row.trailing_space}});
  }
  json out = {{"ref", verse.ref.ToString()},
              {"source", source},
              {"target", target}};
  try {
    json groups = json::array();
    for (const AlignmentGroup& g : AlignmentGroups(verse)) {
      json ids = json::array();
      for (const TokenId& id : g.source_ids) ids.push_back(id.ToString());
      groups.push_back(
          {{"source_ids", ids}, {"target_positions", g.target_positions}});
    }
    out["groups"] = groups;
  } catch (const Error&) {
    out["groups"] = nullptr;  // dangling links
  }
  return out;
}

json ToJson(const Diagnostic& d) {
  return {{"severity", SeverityName(d.severity)},
          {"rule", d.rule},
          {"verse", d.verse},
          {"file", d.file},
          {"line", d.line},
          {"message", d.message}};
}

json ToJson(const std::vector<Diagnostic>& diagnostics) {
  json out = json::array();
  for (const Diagnostic& d : diagnostics) out.push_back(ToJson(d));
  return out;
}

json ToJson(const ValidationSummary& summary) {
  json counts = json::object();
  for (const auto& [rule, c] : summary.counts) {
    counts[rule] = {{"errors", c.errors}, {"warnings", c.warnings}};
  }
  const CoverageStats& c = summary.coverage;
  return {{"diagnostics", ToJson(summary.diagnostics)},
          {"error_count", summary.error_count()},
          {"verses", summary.verses},
          {"counts", counts},
          {"coverage",
           {{"core_linked", c.core_linked},
            {"aux_only", c.aux_only},
            {"no_source", c.no_source},
            {"extractor_rows", c.extractor_rows},
            {"unlinked_source", c.unlinked_source}}}};
}

json ToJson(const SearchHit& hit) {
  json out = {{"verse", hit.verse.ToString()},
              {"side", hit.source ? "source" : "target"},
              {"position", hit.position}};
  if (hit.token) out["token"] = hit.token->ToString();
  return out;
}

json ToJson(const Occurrence& occ, const KwicOptions& options) {
  json sources = json::array();
  for (const SourceLink& s : occ.sources) {
    sources.push_back(
        {{"token", s.token.ToString()},
         {"strong", s.strong ? json(s.strong->ToString()) : json(nullptr)},
         {"kind", LinkKindName(s.kind)},
         {"concord", s.concord ? json(*s.concord) : json(nullptr)},
         {"lemma", Optional(s.lemma)}});
  }
  return {{"verse", occ.verse.ToString()},
          {"target_position", occ.target_position},
          {"surface", occ.surface},
          {"sources", sources},
          {"kwic", KwicLine(occ, options)}};
}

json ToJson(const HeadwordEntry& entry, const KwicOptions& options) {
  json groups = json::array();
  for (const StrongGroup& g : entry.groups) {
    json occs = json::array();
    for (const Occurrence& o : g.occurrences) occs.push_back(ToJson(o, options));
    groups.push_back(
        {{"strong", g.strong ? json(g.strong->ToString()) : json(nullptr)},
         {"count", g.occurrences.size()},
         {"occurrences", occs}});
  }
  return {{"headword", entry.headword},
          {"total", entry.total()},
          {"groups", groups}};
}

json ToJson(const Edit& edit) {
  return std::visit(
      [](const auto& e) -> json {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, edits::AddLink>) {
          json j = {{"op", "add_link"},
                    {"position", e.position},
                    {"id", e.id.ToString()},
                    {"kind", LinkKindName(e.kind)},
                    {"verse_offset", e.verse_offset}};
          if (e.index) j["index"] = *e.index;
          return j;
        } else if constexpr (std::is_same_v<T, edits::RemoveLink>) {
          return {{"op", "remove_link"},
                  {"position", e.position},
                  {"id", e.id.ToString()},
                  {"verse_offset", e.verse_offset}};
        } else if constexpr (std::is_same_v<T, edits::SetLinkKind>) {
          return {{"op", "set_link_kind"},
                  {"position", e.position},
                  {"id", e.id.ToString()},
                  {"kind", LinkKindName(e.kind)},
                  {"verse_offset", e.verse_offset}};
        } else if constexpr (std::is_same_v<T, edits::SetTargetLemma>) {
          return {{"op", "set_target_lemma"},
                  {"position", e.position},
                  {"lemma", e.lemma.ToString()}};
        } else if constexpr (std::is_same_v<T, edits::SetNoSource>) {
          return {{"op", "set_no_source"}, {"position", e.position}};
        } else {
          return {{"op", "set_links"},
                  {"position", e.position},
                  {"links", e.links.ToString()}};
        }
      },
      edit);
}

json ToJson(const Error& error) {
  json body = {{"code", ErrorCodeName(error.code())},
               {"message", error.what()},
               {"diagnostics", json::array()}};
  if (const auto* d = dynamic_cast<const DiagnosticError*>(&error)) {
    body["diagnostics"] = ToJson(d->diagnostics());
  }
  return {{"error", body}};
}

Edit EditFromJson(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kInvalidEdit, "edit must be an object");
  const std::string op = Field<std::string>(j, "op");
  const auto position = Field<std::size_t>(j, "position");
  const int offset = FieldOr<int>(j, "verse_offset", 0);
  auto kind = [&]() {
    return ParseLinkKind(FieldOr<std::string>(j, "kind", "core"));
  };
  try {
    if (op == "add_link") {
      std::optional<std::size_t> index;
      if (j.contains("index")) index = Field<std::size_t>(j, "index");
      return edits::AddLink{position, IdField(j), kind(), offset, index};
    }
    if (op == "remove_link") {
      return edits::RemoveLink{position, IdField(j), offset};
    }
    if (op == "set_link_kind") {
      return edits::SetLinkKind{position, IdField(j), kind(), offset};
    }
    if (op == "set_target_lemma") {
      return edits::SetTargetLemma{
          position, TargetLemma::Parse(Field<std::string>(j, "lemma"))};
    }
    if (op == "set_no_source") return edits::SetNoSource{position};
    if (op == "set_links") {
      return edits::SetLinks{
          position, LinkField::Parse(Field<std::string>(j, "links"), true)};
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidEdit) throw;
    throw Error(ErrorCode::kInvalidEdit, e.what());
  }
  throw Error(ErrorCode::kInvalidEdit, "unknown edit op '" + op + "'");
}

}  // namespace helfi::codec
