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

#include "vgrade/quality.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "vgrade/error.hpp"
#include "vgrade/simd.hpp"

namespace vgrade::quality {
namespace {

double normalize_mae(double mean_abs_error) {
  return std::clamp((255.0 - mean_abs_error) / 255.0, 0.0, 1.0);
}

}  // namespace

double resolution_scaled_tau(double tau, std::uint32_t width, std::uint32_t height) {
  return tau * std::hypot(static_cast<double>(width), static_cast<double>(height)) /
         std::hypot(kReferenceWidth, kReferenceHeight);
}

double cross_frame_consistency(const FeatureTrack& features) {
  const std::size_t t = features.rows();
  if (t < 2) throw Error(ErrorCode::kTooFewFrames, "consistency needs at least 2 frames");
  const FeatureTrack unit = features.normalized();
  const auto first = unit.row(0);
  double total = 0.0;
  for (std::size_t i = 1; i < t; ++i) {
    const auto cur = unit.row(i);
    const double to_first = std::max(0.0, cosine(first, cur));
    const double to_prev = std::max(0.0, cosine(unit.row(i - 1), cur));
    total += 0.5 * (to_first + to_prev);
  }
  return std::clamp(total / static_cast<double>(t - 1), 0.0, 1.0);
}

double temporal_flickering(std::span<const Image> frames) {
  if (frames.size() < 2) throw Error(ErrorCode::kTooFewFrames, "flicker needs at least 2 frames");
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < frames.size(); ++i) total += mae(frames[i], frames[i + 1]);
  return normalize_mae(total / static_cast<double>(frames.size() - 1));
}

double temporal_flickering(const FrameSequence& video) { return temporal_flickering(video.frames); }

std::vector<std::size_t> dropped_frame_indices(std::size_t frame_count) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 2 <= frame_count; i += 2) out.push_back(i);
  return out;
}

double motion_smoothness(std::span<const Image> originals, std::span<const Image> reconstructed) {
  if (originals.size() != reconstructed.size()) {
    throw Error(ErrorCode::kCountMismatch, std::to_string(reconstructed.size()) +
                                               " reconstructed frames for " +
                                               std::to_string(originals.size()) + " dropped");
  }
  if (originals.empty()) throw Error(ErrorCode::kTooFewFrames, "no dropped frames to compare");
  double total = 0.0;
  for (std::size_t i = 0; i < originals.size(); ++i) total += mae(reconstructed[i], originals[i]);
  return normalize_mae(total / static_cast<double>(originals.size()));
}

double motion_smoothness_for(const FrameSequence& video, std::span<const Image> reconstructed) {
  std::vector<Image> dropped;
  for (std::size_t i : dropped_frame_indices(video.frame_count())) dropped.push_back(video.frames[i]);
  return motion_smoothness(dropped, reconstructed);
}

double dynamic_statistic(const FlowTrack& flow) {
  if (flow.grids.empty()) throw Error(ErrorCode::kEmptyFlow, "flow has no frame pairs");
  double total = 0.0;
  std::vector<double> scratch;
  for (const auto& grid : flow.grids) {
    if (grid.empty()) throw Error(ErrorCode::kEmptyFlow, "empty flow grid");
    // ceil(0.05 * N) in exact integer arithmetic.
    const std::size_t k = (grid.size() * 5 + 99) / 100;
    scratch.assign(grid.begin(), grid.end());
    std::nth_element(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(k - 1),
                     scratch.end(), std::greater<>());
    std::sort(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(k), std::greater<>());
    total += simd::sum({scratch.data(), k}) / static_cast<double>(k);
  }
  return total / static_cast<double>(flow.grids.size());
}

bool static_filter(const FlowTrack& flow, double tau_static) {
  return dynamic_statistic(flow) < tau_static;
}

double aggregate_mean(const std::map<std::string, double>& per_video) {
  if (per_video.empty()) throw Error(ErrorCode::kEmptyInput, "no per-video scores");
  double total = 0.0;
  for (const auto& [id, v] : per_video) total += v;
  return total / static_cast<double>(per_video.size());
}

DimensionScore dynamic_degree(std::span<const FlowTrack> videos, double tau_dynamic) {
  if (videos.empty()) throw Error(ErrorCode::kEmptyInput, "dynamic degree needs >= 1 video");
  DimensionScore out;
  out.dimension_tag = "dynamic_degree";
  for (const auto& flow : videos) {
    out.per_video[flow.video_id] = dynamic_statistic(flow) >= tau_dynamic ? 1.0 : 0.0;
  }
  out.model_score = aggregate_mean(out.per_video);
  return out;
}

double framewise_quality(const ScalarTrack& track) {
  if (track.values.empty()) throw Error(ErrorCode::kEmptyInput, "no per-frame values");
  const double hi = scalar_metric_max(track.metric);
  double total = 0.0;
  for (double v : track.values) {
    if (!(v >= 0.0 && v <= hi)) {
      throw Error(ErrorCode::kOutOfRange, std::string(scalar_metric_name(track.metric)) +
                                              " value " + std::to_string(v));
    }
    total += v;
  }
  return std::clamp(total / static_cast<double>(track.values.size()) / hi, 0.0, 1.0);
}

}  // namespace vgrade::quality
