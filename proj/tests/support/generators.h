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

#ifndef HELFI_TESTS_SUPPORT_GENERATORS_H_
#define HELFI_TESTS_SUPPORT_GENERATORS_H_

#include <random>
#include <string>
#include <vector>

#include "helfi/model.h"
#include "helfi/tokenization.h"

namespace helfi::testing {

std::string FixturePath(const std::string& name);
std::string ReadFixture(const std::string& name);

struct RandomVerseOptions {
  int max_words = 8;
  int max_target_rows = 12;
  // Links only to existing tokens and every content token is linked, so the
  // verse validates without diagnostics.
  bool clean = true;
};

VerseAlignment RandomVerse(std::mt19937& rng, const VerseRef& ref,
                           const RandomVerseOptions& options = {});

// `verses` verses spread over the first books of the default order, in
// canonical order.
Corpus RandomCorpus(std::mt19937& rng, int verses,
                    const RandomVerseOptions& options = {});

// Morphology atoms RandomVerse draws from; usable as an inventory.
const std::vector<std::string>& RandomMorphAtoms();

struct RandomWordOptions {
  int max_segments = 5;
  bool allow_split = true;   // '/' boundaries
  bool allow_maqef = true;
  bool allow_suffix = true;  // '=' boundaries
};

// A pointed Hebrew word with random boundary markers; every segment is
// non-empty.
SegmentedWord RandomWord(std::mt19937& rng, const RandomWordOptions& options = {});

}  // namespace helfi::testing

#endif  // HELFI_TESTS_SUPPORT_GENERATORS_H_
