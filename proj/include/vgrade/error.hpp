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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vgrade {

// Every failure the engine reports carries one of these codes. The names are
// part of the CLI contract: violation lists print code_name() verbatim.
enum class ErrorCode {
  kZeroVector,
  kDimensionMismatch,
  kShapeMismatch,
  kBadMagic,
  kVersionUnsupported,
  kTruncatedPayload,
  kNonFiniteValue,
  kSchemaViolation,
  kBboxOutOfBounds,
  kFrameCountMismatch,
  kMissingFrame,
  kDecodeError,
  kInconsistentResolution,
  kUnknownDimension,
  kMissingLabel,
  kDuplicatePromptId,
  kMissingCategory,
  kUnknownCategory,
  kTooFewFrames,
  kCountMismatch,
  kEmptyFlow,
  kEmptyInput,
  kOutOfRange,
  kTooFewTargets,
  kMissingCaptions,
  kPoolTooSmall,
  kTooFewModels,
  kDuplicateAnnotation,
  kCoverageMismatch,
  kLengthMismatch,
  kDegenerateInput,
  kUnsupportedFormat,
  kMissingArtifact,
  kIoError,
  kConfigError,
};

std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(code_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vgrade
