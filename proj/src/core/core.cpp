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

#include "vgrade/core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "vgrade/error.hpp"
#include "vgrade/simd.hpp"

namespace vgrade {

std::string_view feature_kind_name(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::kDino: return "dino";
    case FeatureKind::kClipImage: return "clip_image";
    case FeatureKind::kViclipVideo: return "viclip_video";
    case FeatureKind::kText: return "text";
  }
  return "dino";
}

std::string_view scalar_metric_name(ScalarMetric metric) {
  return metric == ScalarMetric::kAestheticRaw ? "aesthetic_raw" : "imaging_raw";
}

double scalar_metric_max(ScalarMetric metric) {
  return metric == ScalarMetric::kAestheticRaw ? 10.0 : 100.0;
}

FeatureTrack::FeatureTrack(std::string video_id, FeatureKind kind, std::size_t rows,
                           std::size_t dim, std::vector<double> values)
    : video_id_(std::move(video_id)),
      kind_(kind),
      rows_(rows),
      dim_(dim),
      values_(std::move(values)) {
  if (dim_ == 0) throw Error(ErrorCode::kShapeMismatch, "feature dimension must be >= 1");
  if (values_.size() != rows_ * dim_) {
    throw Error(ErrorCode::kShapeMismatch, "feature payload does not match T x D");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kNonFiniteValue, "feature value");
  }
}

FeatureTrack FeatureTrack::normalized() const {
  std::vector<double> out;
  out.reserve(values_.size());
  for (std::size_t t = 0; t < rows_; ++t) {
    const auto unit = unit_normalize(row(t));
    out.insert(out.end(), unit.begin(), unit.end());
  }
  return FeatureTrack(video_id_, kind_, rows_, dim_, std::move(out));
}

std::vector<double> unit_normalize(std::span<const double> v) {
  const double norm = std::sqrt(simd::dot(v, v));
  if (!(norm >= 1e-12)) throw Error(ErrorCode::kZeroVector, "cannot normalize a zero vector");
  std::vector<double> out(v.begin(), v.end());
  for (double& x : out) x /= norm;
  return out;
}

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  return std::clamp(simd::dot(a, b), -1.0, 1.0);
}

double mae(const Image& a, const Image& b) {
  if (!a.same_shape(b) || a.rgb.size() != b.rgb.size()) {
    throw Error(ErrorCode::kShapeMismatch, "frames differ in shape");
  }
  if (a.rgb.empty()) throw Error(ErrorCode::kShapeMismatch, "empty frame");
  const std::uint64_t total = simd::sum_abs_diff(a.samples(), b.samples());
  return static_cast<double>(total) / static_cast<double>(a.rgb.size());
}

std::string canonical_label(std::string_view label) {
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  std::size_t begin = 0;
  std::size_t end = label.size();
  while (begin < end && is_space(static_cast<unsigned char>(label[begin]))) ++begin;
  while (end > begin && is_space(static_cast<unsigned char>(label[end - 1]))) --end;
  std::string out(label.substr(begin, end - begin));
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string> word_tokens(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  for (char c : text) {
    const auto uc = static_cast<unsigned char>(c);
    if (std::isalnum(uc)) {
      current.push_back(static_cast<char>(std::tolower(uc)));
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

}  // namespace vgrade
