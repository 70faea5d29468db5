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

// Reference implementations shared by the unit and acceptance tests.

#ifndef HELFI_TESTS_SUPPORT_ORACLES_H_
#define HELFI_TESTS_SUPPORT_ORACLES_H_

#include <cstddef>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "helfi/model.h"
#include "helfi/service.h"

namespace helfi::testing {

// (sorted source ids, sorted target positions) per group.
using GroupSet =
    std::set<std::pair<std::vector<TokenId>, std::vector<std::size_t>>>;

// Warshall closure over the core-link adjacency matrix; nodes are source
// tokens followed by target rows.
GroupSet ClosureGroups(const VerseAlignment& v);

// Random edit against `v`; may be invalid or break an invariant.
Edit RandomEdit(std::mt19937& rng, const VerseAlignment& v);

struct TableRow {
  const char* verse;
  int layer;
};

// Layer column of the discrepancy table, in fixture row order.
inline constexpr TableRow kTableLayers[] = {
    {"Mal.3:12", 1}, {"Mal.3:12", 2}, {"Gen.1:5", 2},  {"Ezra.2:61", 2},
    {"Mal.3:2", 2},  {"2Kgs.5:8", 2}, {"Isa.22:18", 2}, {"2Chr.26:8", 2},
    {"Eccl.4:10", 3}, {"Mal.3:12", 3},
};

}  // namespace helfi::testing

#endif  // HELFI_TESTS_SUPPORT_ORACLES_H_
