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

#ifndef HELFI_SRC_JSON_CODEC_H_
#define HELFI_SRC_JSON_CODEC_H_

#include <nlohmann/json.hpp>

#include "helfi/concordance.h"
#include "helfi/service.h"
#include "helfi/validator.h"

namespace helfi::codec {

using nlohmann::json;

json ToJson(const VerseAlignment& verse);
json ToJson(const Diagnostic& d);
json ToJson(const std::vector<Diagnostic>& diagnostics);
json ToJson(const ValidationSummary& summary);
json ToJson(const SearchHit& hit);
json ToJson(const Occurrence& occ, const KwicOptions& options);
json ToJson(const HeadwordEntry& entry, const KwicOptions& options);
json ToJson(const Edit& edit);
json ToJson(const Error& error);

// Throws Error(kInvalidEdit) on a malformed object.
Edit EditFromJson(const json& j);

}  // namespace helfi::codec

#endif  // HELFI_SRC_JSON_CODEC_H_
