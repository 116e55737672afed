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

#include "vgrade/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "vgrade/error.hpp"

namespace vgrade::baselines {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in (0, 1], independent of the standard library's distributions.
double uniform_open0(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  // Rejection sampling keeps the draw unbiased and portable.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % n);
}

// Whether `slots` more frames can be drawn with no two adjacent from the same
// source, the first differing from `previous`.
bool feasible(const std::vector<std::size_t>& remaining, std::size_t previous, std::size_t slots) {
  std::size_t capacity = 0;
  for (std::size_t s = 0; s < remaining.size(); ++s) {
    const std::size_t cap = s == previous ? slots / 2 : (slots + 1) / 2;
    capacity += std::min(remaining[s], cap);
  }
  return capacity >= slots;
}

}  // namespace

std::string_view baseline_kind_name(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::kEmpiricalMax: return "empirical_max";
    case BaselineKind::kEmpiricalMin: return "empirical_min";
    case BaselineKind::kWebvidAvg: return "webvid_avg";
  }
  return "empirical_max";
}

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kRetrievedMax: return "retrieved_max";
    case Provenance::kRetrievedAvg: return "retrieved_avg";
    case Provenance::kTheoretical: return "theoretical";
    case Provenance::kNoiseClip: return "noise_clip";
    case Provenance::kComposedVideo: return "composed_video";
  }
  return "theoretical";
}

Provenance max_provenance(Dimension d) {
  switch (d) {
    case Dimension::kMotionSmoothness:
    case Dimension::kScene:
    case Dimension::kAppearanceStyle:
    case Dimension::kTemporalStyle:
    case Dimension::kOverallConsistency:
      return Provenance::kRetrievedMax;
    default:
      return Provenance::kTheoretical;
  }
}

Provenance min_provenance(Dimension d) {
  switch (d) {
    case Dimension::kAppearanceStyle:
    case Dimension::kTemporalStyle:
    case Dimension::kOverallConsistency:
    case Dimension::kTemporalFlickering:
    case Dimension::kMotionSmoothness:
    case Dimension::kHumanAction:
      return Provenance::kNoiseClip;
    case Dimension::kSubjectConsistency:
    case Dimension::kBackgroundConsistency:
      return Provenance::kComposedVideo;
    default:
      return Provenance::kTheoretical;
  }
}

double empirical_max(std::span<const double> per_video_scores, Dimension d) {
  if (max_provenance(d) == Provenance::kTheoretical) return 1.0;
  if (per_video_scores.empty()) {
    throw Error(ErrorCode::kEmptyInput, std::string(tag_of(d)) + " needs retrieved scores");
  }
  return *std::max_element(per_video_scores.begin(), per_video_scores.end());
}

double empirical_min(std::span<const double> per_video_scores, Dimension d) {
  if (min_provenance(d) == Provenance::kTheoretical) return 0.0;
  if (per_video_scores.empty()) {
    throw Error(ErrorCode::kEmptyInput, std::string(tag_of(d)) + " needs degenerate-video scores");
  }
  return *std::min_element(per_video_scores.begin(), per_video_scores.end());
}

double webvid_avg(std::span<const double> per_video_scores) {
  if (per_video_scores.empty()) throw Error(ErrorCode::kEmptyInput, "webvid_avg needs scores");
  double total = 0.0;
  for (double v : per_video_scores) total += v;
  return total / static_cast<double>(per_video_scores.size());
}

std::vector<std::pair<std::size_t, std::size_t>> composed_plan(
    std::span<const std::size_t> source_lengths, std::size_t frame_count, std::uint64_t seed) {
  const std::size_t sources = std::count_if(source_lengths.begin(), source_lengths.end(),
                                            [](std::size_t n) { return n > 0; });
  std::size_t total = 0;
  for (std::size_t n : source_lengths) total += n;
  if (sources < 2 || total < frame_count) {
    throw Error(ErrorCode::kPoolTooSmall, "composed videos need >= " + std::to_string(frame_count) +
                                              " frames from >= 2 sources");
  }
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> remaining(source_lengths.begin(), source_lengths.end());
  if (!feasible(remaining, kNone, frame_count)) {
    throw Error(ErrorCode::kPoolTooSmall, "pool cannot avoid adjacent frames from one source");
  }
  std::vector<std::vector<std::size_t>> unused(source_lengths.size());
  for (std::size_t s = 0; s < source_lengths.size(); ++s) {
    for (std::size_t f = 0; f < source_lengths[s]; ++f) unused[s].push_back(f);
  }
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::size_t, std::size_t>> plan;
  std::size_t previous = kNone;
  for (std::size_t slot = 0; slot < frame_count; ++slot) {
    std::vector<std::size_t> candidates;
    for (std::size_t s = 0; s < remaining.size(); ++s) {
      if (s == previous || remaining[s] == 0) continue;
      --remaining[s];
      if (feasible(remaining, s, frame_count - slot - 1)) candidates.push_back(s);
      ++remaining[s];
    }
    if (candidates.empty()) throw Error(ErrorCode::kPoolTooSmall, "no admissible source");
    const std::size_t s = candidates[uniform_index(rng, candidates.size())];
    auto& frames = unused[s];
    const std::size_t pick = uniform_index(rng, frames.size());
    plan.emplace_back(s, frames[pick]);
    frames.erase(frames.begin() + static_cast<std::ptrdiff_t>(pick));
    --remaining[s];
    previous = s;
  }
  return plan;
}

FrameSequence make_composed_video(std::span<const FrameSource> pool, std::size_t frame_count,
                                  std::uint64_t seed) {
  std::vector<std::size_t> lengths;
  for (const auto& src : pool) lengths.push_back(src.frames.size());
  FrameSequence out;
  out.video_id = "composed_" + std::to_string(seed);
  for (const auto& [s, f] : composed_plan(lengths, frame_count, seed)) {
    out.frames.push_back(pool[s].frames[f]);
    if (!out.frames.back().same_shape(out.frames.front())) {
      throw Error(ErrorCode::kInconsistentResolution, "frame pool mixes resolutions");
    }
  }
  return out;
}

FeatureTrack make_composed_features(std::span<const FeatureTrack> pool, std::size_t frame_count,
                                    std::uint64_t seed) {
  std::vector<std::size_t> lengths;
  for (const auto& track : pool) lengths.push_back(track.rows());
  const std::size_t dim = pool.empty() ? 0 : pool.front().dim();
  std::vector<double> values;
  for (const auto& [s, f] : composed_plan(lengths, frame_count, seed)) {
    if (pool[s].dim() != dim) throw Error(ErrorCode::kDimensionMismatch, "feature pool dims differ");
    const auto row = pool[s].row(f);
    values.insert(values.end(), row.begin(), row.end());
  }
  return FeatureTrack("composed_" + std::to_string(seed), pool.front().kind(), frame_count, dim,
                      std::move(values));
}

double composed_video_min(std::span<const FeatureTrack> pool, std::size_t frame_count,
                          std::size_t repetitions, std::uint64_t base_seed,
                          const std::function<double(const FeatureTrack&)>& score) {
  if (repetitions == 0) throw Error(ErrorCode::kEmptyInput, "repetitions must be >= 1");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < repetitions; ++i) {
    best = std::min(best, score(make_composed_features(pool, frame_count, splitmix64(base_seed + i))));
  }
  return best;
}

FrameSequence make_noise_clip(std::uint32_t height, std::uint32_t width, std::size_t frame_count,
                              std::uint64_t seed) {
  if (height == 0 || width == 0 || frame_count == 0) {
    throw Error(ErrorCode::kShapeMismatch, "noise clip dimensions must be positive");
  }
  std::mt19937_64 rng(seed);
  FrameSequence clip;
  clip.video_id = "noise_" + std::to_string(seed);
  clip.frames.reserve(frame_count);
  for (std::size_t t = 0; t < frame_count; ++t) {
    Image img(width, height);
    for (std::size_t i = 0; i < img.rgb.size(); i += 2) {
      // Box-Muller yields two independent normals per pair of uniforms.
      const double r = std::sqrt(-2.0 * std::log(uniform_open0(rng)));
      const double theta = 2.0 * std::numbers::pi * uniform_open0(rng);
      const double z[2] = {r * std::cos(theta), r * std::sin(theta)};
      for (std::size_t k = 0; k < 2 && i + k < img.rgb.size(); ++k) {
        const double v = std::round(kNoiseMean + kNoiseSigma * z[k]);
        img.rgb[i + k] = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
      }
    }
    clip.frames.push_back(std::move(img));
  }
  return clip;
}

std::vector<std::string> ordering_violations(const BaselineRow& min, const BaselineRow& avg,
                                             const BaselineRow& max) {
  std::vector<std::string> out;
  for (const auto& [dim, lo] : min.scores) {
    const auto a = avg.scores.find(dim);
    const auto h = max.scores.find(dim);
    if (a == avg.scores.end() || h == max.scores.end()) continue;
    if (!(lo <= a->second && a->second <= h->second)) out.push_back(dim);
  }
  return out;
}

}  // namespace vgrade::baselines
