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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vgrade {

struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

// Interleaved 8-bit RGB image, row-major.
struct Image {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::uint8_t> rgb;

  Image() = default;
  Image(std::uint32_t w, std::uint32_t h, std::uint8_t fill = 0)
      : width(w), height(h), rgb(static_cast<std::size_t>(w) * h * 3, fill) {}

  std::size_t sample_count() const { return rgb.size(); }
  std::span<const std::uint8_t> samples() const { return rgb; }
  bool same_shape(const Image& other) const {
    return width == other.width && height == other.height;
  }
};

struct FrameSequence {
  std::string video_id;
  std::vector<Image> frames;
  Rational fps;
  std::string model_id;
  std::string prompt_id;

  std::size_t frame_count() const { return frames.size(); }
};

enum class FeatureKind { kDino, kClipImage, kViclipVideo, kText };

std::string_view feature_kind_name(FeatureKind kind);

// T x D matrix of embeddings, stored in float64 regardless of file precision.
class FeatureTrack {
 public:
  FeatureTrack() = default;
  FeatureTrack(std::string video_id, FeatureKind kind, std::size_t rows,
               std::size_t dim, std::vector<double> values);

  const std::string& video_id() const { return video_id_; }
  FeatureKind kind() const { return kind_; }
  std::size_t rows() const { return rows_; }
  std::size_t dim() const { return dim_; }
  std::span<const double> row(std::size_t t) const {
    return {values_.data() + t * dim_, dim_};
  }
  const std::vector<double>& values() const { return values_; }

  // Copy with every row scaled to unit Euclidean norm. Throws ZeroVector.
  FeatureTrack normalized() const;

 private:
  std::string video_id_;
  FeatureKind kind_ = FeatureKind::kDino;
  std::size_t rows_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> values_;
};

// (T-1) pooled flow-magnitude grids, each with `cells` values.
struct FlowTrack {
  std::string video_id;
  std::size_t cells = 0;
  std::vector<std::vector<double>> grids;

  std::size_t pair_count() const { return grids.size(); }
};

struct BBox {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;

  double area() const { return (x1 - x0) * (y1 - y0); }
  double center_x() const { return 0.5 * (x0 + x1); }
  double center_y() const { return 0.5 * (y0 + y1); }
};

struct Detection {
  std::string label;
  double score = 0.0;
  BBox bbox;
  std::optional<std::string> caption;
};

struct FrameDetections {
  std::vector<Detection> detections;
  // Whole-frame caption (scene captioner output), when present.
  std::optional<std::string> caption;
};

struct DetectionTrack {
  std::string video_id;
  std::vector<FrameDetections> frames;
};

enum class ScalarMetric { kAestheticRaw, kImagingRaw };

std::string_view scalar_metric_name(ScalarMetric metric);
double scalar_metric_max(ScalarMetric metric);

struct ScalarTrack {
  std::string video_id;
  ScalarMetric metric = ScalarMetric::kAestheticRaw;
  std::vector<double> values;
};

struct ActionEntry {
  std::string label;
  double logit = 0.0;
};

struct ActionLogits {
  std::string video_id;
  std::vector<ActionEntry> entries;
};

// Elementary kernels ---------------------------------------------------------

std::vector<double> unit_normalize(std::span<const double> v);

// Plain dot product of two unit vectors; equals the cosine similarity.
double cosine(std::span<const double> a, std::span<const double> b);

// Mean absolute error over every pixel-channel sample.
double mae(const Image& a, const Image& b);

// Lowercase + trim, the canonical form for every label comparison.
std::string canonical_label(std::string_view label);

// Lowercase alphanumeric word tokens ("A red-car." -> {"a", "red", "car"}).
std::vector<std::string> word_tokens(std::string_view text);

}  // namespace vgrade
