// Copyright 2026 The vgrade Authors.
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

#include "vgrade/error.hpp"

namespace vgrade {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kBadMagic: return "BadMagic";
    case ErrorCode::kVersionUnsupported: return "VersionUnsupported";
    case ErrorCode::kTruncatedPayload: return "TruncatedPayload";
    case ErrorCode::kNonFiniteValue: return "NonFiniteValue";
    case ErrorCode::kSchemaViolation: return "SchemaViolation";
    case ErrorCode::kBboxOutOfBounds: return "BboxOutOfBounds";
    case ErrorCode::kFrameCountMismatch: return "FrameCountMismatch";
    case ErrorCode::kMissingFrame: return "MissingFrame";
    case ErrorCode::kDecodeError: return "DecodeError";
    case ErrorCode::kInconsistentResolution: return "InconsistentResolution";
    case ErrorCode::kUnknownDimension: return "UnknownDimension";
    case ErrorCode::kMissingLabel: return "MissingLabel";
    case ErrorCode::kDuplicatePromptId: return "DuplicatePromptId";
    case ErrorCode::kMissingCategory: return "MissingCategory";
    case ErrorCode::kUnknownCategory: return "UnknownCategory";
    case ErrorCode::kTooFewFrames: return "TooFewFrames";
    case ErrorCode::kCountMismatch: return "CountMismatch";
    case ErrorCode::kEmptyFlow: return "EmptyFlow";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kTooFewTargets: return "TooFewTargets";
    case ErrorCode::kMissingCaptions: return "MissingCaptions";
    case ErrorCode::kPoolTooSmall: return "PoolTooSmall";
    case ErrorCode::kTooFewModels: return "TooFewModels";
    case ErrorCode::kDuplicateAnnotation: return "DuplicateAnnotation";
    case ErrorCode::kCoverageMismatch: return "CoverageMismatch";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kUnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::kMissingArtifact: return "MissingArtifact";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace vgrade
