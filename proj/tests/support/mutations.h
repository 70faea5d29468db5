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

// Single-fault edits of the fixture verses, one per verse-scope rule.

#ifndef HELFI_TESTS_SUPPORT_MUTATIONS_H_
#define HELFI_TESTS_SUPPORT_MUTATIONS_H_

#include <string>
#include <utility>
#include <vector>

#include "helfi/validator.h"

namespace helfi::testing {

struct TextMutation {
  std::string rule;  // rule id the edit must trigger
  std::string fixture;
  // Each `first` occurs exactly once in the fixture.
  std::vector<std::pair<std::string, std::string>> edits;
  bool with_morph_inventory = false;
};

const std::vector<TextMutation>& SingleFaultMutations();

// Throws std::runtime_error if an edit does not match exactly once.
std::string ApplyMutation(std::string text, const TextMutation& mutation);

// Strict parse plus full validation, parser diagnostics included.
ValidationSummary ParseAndValidate(const std::string& text,
                                   bool with_morph_inventory = false);

}  // namespace helfi::testing

#endif  // HELFI_TESTS_SUPPORT_MUTATIONS_H_
