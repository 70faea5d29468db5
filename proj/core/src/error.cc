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

#include "helfi/error.h"

namespace helfi {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedVerseRef: return "MalformedVerseRef";
    case ErrorCode::kMalformedTokenId: return "MalformedTokenId";
    case ErrorCode::kMalformedStrongCode: return "MalformedStrongCode";
    case ErrorCode::kMalformedLinkField: return "MalformedLinkField";
    case ErrorCode::kMalformedLemmaTriple: return "MalformedLemmaTriple";
    case ErrorCode::kMalformedTargetLemma: return "MalformedTargetLemma";
    case ErrorCode::kMalformedMorphTags: return "MalformedMorphTags";
    case ErrorCode::kMalformedSegmentation: return "MalformedSegmentation";
    case ErrorCode::kUnknownExtractor: return "UnknownExtractor";
    case ErrorCode::kEmptyBlock: return "EmptyBlock";
    case ErrorCode::kCrossVerseNotAllowed: return "CrossVerseNotAllowed";
    case ErrorCode::kDanglingLink: return "DanglingLink";
    case ErrorCode::kTextMismatch: return "TextMismatch";
    case ErrorCode::kTooManySubtokens: return "TooManySubtokens";
    case ErrorCode::kPrecondition: return "PreconditionViolation";
    case ErrorCode::kUnknownVerse: return "UnknownVerse";
    case ErrorCode::kInvalidEdit: return "InvalidEdit";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kRevisionConflict: return "RevisionConflict";
    case ErrorCode::kNothingToUndo: return "NothingToUndo";
    case ErrorCode::kNothingToRedo: return "NothingToRedo";
    case ErrorCode::kValidationFailed: return "ValidationFailed";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kConfig: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace helfi
