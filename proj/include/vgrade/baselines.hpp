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
#include <span>
#include <string>
#include <vector>

#include "vgrade/core.hpp"
#include "vgrade/dimensions.hpp"

// Reference rows bracketing real model scores: the best and worst
// achievable values per dimension and the average of real training videos.

namespace vgrade::baselines {

enum class BaselineKind { kEmpiricalMax, kEmpiricalMin, kWebvidAvg };
enum class Provenance { kRetrievedMax, kRetrievedAvg, kTheoretical, kNoiseClip, kComposedVideo };

std::string_view baseline_kind_name(BaselineKind kind);
std::string_view provenance_name(Provenance p);

struct BaselineRow {
  BaselineKind kind = BaselineKind::kEmpiricalMax;
  std::map<std::string, double> scores;
  std::map<std::string, Provenance> provenance;
};

inline constexpr std::size_t kDefaultRepetitions = 1000;
inline constexpr double kNoiseMean = 127.5;
inline constexpr double kNoiseSigma = 64.0;

// How each dimension's bound is obtained.
Provenance max_provenance(Dimension d);
Provenance min_provenance(Dimension d);

// 1.0 for dimensions with a theoretical maximum, else the best retrieved score.
double empirical_max(std::span<const double> per_video_scores, Dimension d);

// Lowest score; 0.0 for dimensions with a theoretical minimum.
double empirical_min(std::span<const double> per_video_scores, Dimension d);

double webvid_avg(std::span<const double> per_video_scores);

// One frame source: a video id plus its frames (or any per-frame payload).
struct FrameSource {
  std::string video_id;
  std::vector<Image> frames;
};

// Sampling plan of a composed video: (source index, frame index) per output
// frame. Adjacent frames never share a source, no (source, frame) repeats.
std::vector<std::pair<std::size_t, std::size_t>> composed_plan(
    std::span<const std::size_t> source_lengths, std::size_t frame_count, std::uint64_t seed);

FrameSequence make_composed_video(std::span<const FrameSource> pool, std::size_t frame_count,
                                  std::uint64_t seed);

// Same sampling over per-frame feature tracks (one track per source video).
FeatureTrack make_composed_features(std::span<const FeatureTrack> pool, std::size_t frame_count,
                                    std::uint64_t seed);

// Minimum of `score` over `repetitions` composed videos, seeds derived from
// base_seed. Evaluation order does not affect the result.
double composed_video_min(std::span<const FeatureTrack> pool, std::size_t frame_count,
                          std::size_t repetitions, std::uint64_t base_seed,
                          const std::function<double(const FeatureTrack&)>& score);

// I.i.d. Gaussian pixels (mean 127.5, sigma 64) rounded and clamped to [0,255].
FrameSequence make_noise_clip(std::uint32_t height, std::uint32_t width, std::size_t frame_count,
                              std::uint64_t seed);

// Checks min <= avg <= max for every dimension present in all three rows.
std::vector<std::string> ordering_violations(const BaselineRow& min, const BaselineRow& avg,
                                             const BaselineRow& max);

}  // namespace vgrade::baselines
