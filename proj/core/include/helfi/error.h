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

#ifndef HELFI_ERROR_H_
#define HELFI_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace helfi {

enum class ErrorCode {
  kMalformedVerseRef,
  kMalformedTokenId,
  kMalformedStrongCode,
  kMalformedLinkField,
  kMalformedLemmaTriple,
  kMalformedTargetLemma,
  kMalformedMorphTags,
  kMalformedSegmentation,
  kUnknownExtractor,
  kEmptyBlock,
  kCrossVerseNotAllowed,
  kDanglingLink,
  kTextMismatch,
  kTooManySubtokens,
  kPrecondition,
  kUnknownVerse,
  kInvalidEdit,
  kInvariantViolation,
  kRevisionConflict,
  kNothingToUndo,
  kNothingToRedo,
  kValidationFailed,
  kIo,
  kConfig,
};

// Stable machine-readable name, e.g. "MalformedTokenId".
std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace helfi

#endif  // HELFI_ERROR_H_
