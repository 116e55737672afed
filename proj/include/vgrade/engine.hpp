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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vgrade/interchange.hpp"
#include "vgrade/reporting.hpp"
#include "vgrade/semantics.hpp"
#include "vgrade/suite.hpp"

namespace vgrade::engine {

inline constexpr std::string_view kEngineVersion = "1.0.0";

struct ScoringOptions {
  double tau_dynamic = 1.0;
  std::optional<double> tau_static;
  double tau_iou = semantics::kDefaultTauIou;
  semantics::ColorVocabulary colors;
};

// A per-video score, or the reason the video does not enter the mean.
struct Outcome {
  std::optional<double> score;
  std::string excluded;
};

using Scorer = std::function<Outcome(const interchange::Bundle&, const suite::PromptRecord&,
                                     const ScoringOptions&)>;

// Every dimension maps to exactly one scorer.
const Scorer& scorer_for(Dimension d);

struct VideoResult {
  std::string video_id;
  std::string model_id;
  std::string prompt_id;
  std::uint32_t group_index = 0;
  std::string dimension_tag;
  std::optional<std::string> category;  // set for per-category jobs
  Outcome outcome;
};

struct CorpusResult {
  std::vector<VideoResult> videos;  // sorted, independent of worker count
  std::vector<interchange::Violation> violations;
  std::vector<reporting::ModelReport> reports;
};

// Runs fn(i) for i in [0, n) on `workers` threads. The first exception is
// rethrown after every worker has joined.
void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& fn);

// validate_bundle on every bundle plus suite cross-checks (known prompt,
// matching dimension, labels present).
std::vector<interchange::Violation> validate_corpus(const std::vector<interchange::Bundle>& bundles,
                                                    const std::vector<suite::PromptRecord>& prompts,
                                                    std::size_t workers);

// Bundles are scored on their manifest dimension when it is selected. Bundles
// whose prompt has a category are also scored on every selected
// category-eligible dimension whose artifacts they carry.
CorpusResult score_corpus(const std::vector<interchange::Bundle>& bundles,
                          const std::vector<suite::PromptRecord>& prompts,
                          const std::vector<Dimension>& selected, const ScoringOptions& options,
                          std::size_t workers);

// Canonical per-video listing.
std::string per_video_json(const std::vector<VideoResult>& videos);

// (model, dimension) -> (prompt, group) -> score, as written by per_video_json.
struct PerVideoScores {
  std::map<std::string, std::map<std::string, std::map<std::pair<std::string, std::uint32_t>, double>>>
      by_dimension;  // dimension -> model -> slot -> score
};
PerVideoScores parse_per_video_json(const std::string& text);

}  // namespace vgrade::engine
