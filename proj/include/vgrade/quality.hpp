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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vgrade/core.hpp"

// Video-quality scorers. Each maps one video's artifacts to a score in [0, 1].

namespace vgrade::quality {

// Default threshold on the top-5% mean flow magnitude (px/frame) at the
// 256x256 reference resolution.
inline constexpr double kDefaultTauDynamic = 1.0;
inline constexpr double kReferenceWidth = 256.0;
inline constexpr double kReferenceHeight = 256.0;

// tau rescaled by frame diagonal relative to the 256x256 reference.
double resolution_scaled_tau(double tau, std::uint32_t width, std::uint32_t height);

// Mean over t >= 2 of 0.5 * (<x_1, x_t> + <x_{t-1}, x_t>) on unit-normalized
// rows; each cosine floored at 0. Used for subject (DINO) and background
// (CLIP) consistency.
double cross_frame_consistency(const FeatureTrack& features);

// (255 - mean consecutive-frame MAE) / 255.
double temporal_flickering(const FrameSequence& video);
double temporal_flickering(std::span<const Image> frames);

// Indices of the frames dropped before interpolation: odd i with i <= T-2.
std::vector<std::size_t> dropped_frame_indices(std::size_t frame_count);

// `originals` are the dropped frames of the source video, `reconstructed` the
// interpolator's estimates at the same indices.
double motion_smoothness(std::span<const Image> originals, std::span<const Image> reconstructed);

// Convenience: selects the dropped frames of `video` before scoring.
double motion_smoothness_for(const FrameSequence& video, std::span<const Image> reconstructed);

// Mean over frame pairs of the mean of the largest ceil(5% * N) magnitudes.
double dynamic_statistic(const FlowTrack& flow);

bool static_filter(const FlowTrack& flow, double tau_static);

struct DimensionScore {
  std::string dimension_tag;
  std::map<std::string, double> per_video;
  double model_score = 0.0;
};

// Arithmetic mean of per-video scores, accumulated in video_id order.
double aggregate_mean(const std::map<std::string, double>& per_video);

// Flags each video dynamic (1) iff its statistic >= tau_dynamic.
DimensionScore dynamic_degree(std::span<const FlowTrack> videos, double tau_dynamic);

// aesthetic_raw: mean/10, imaging_raw: mean/100. Throws OutOfRange.
double framewise_quality(const ScalarTrack& track);

}  // namespace vgrade::quality
