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

#include "vgrade/dimensions.hpp"

#include <algorithm>

#include "vgrade/error.hpp"

namespace vgrade {
namespace {

using G = DimensionGroup;

const std::array<DimensionInfo, kDimensionCount>& table() {
  static const std::array<DimensionInfo, kDimensionCount> kTable = {{
      {Dimension::kSubjectConsistency, "subject_consistency", "Subject Consistency",
       G::kVideoQuality, {"dino"}, {}, true},
      {Dimension::kBackgroundConsistency, "background_consistency",
       "Background Consistency", G::kVideoQuality, {"clip_image"}, {}, true},
      {Dimension::kTemporalFlickering, "temporal_flickering", "Temporal Flickering",
       G::kVideoQuality, {"frames", "flow"}, {}, false},
      {Dimension::kMotionSmoothness, "motion_smoothness", "Motion Smoothness",
       G::kVideoQuality, {"frames", "reconstruction"}, {}, true},
      {Dimension::kDynamicDegree, "dynamic_degree", "Dynamic Degree", G::kVideoQuality,
       {"flow"}, {}, true},
      {Dimension::kAestheticQuality, "aesthetic_quality", "Aesthetic Quality",
       G::kVideoQuality, {"aesthetic_raw"}, {}, true},
      {Dimension::kImagingQuality, "imaging_quality", "Imaging Quality", G::kVideoQuality,
       {"imaging_raw"}, {}, true},
      {Dimension::kObjectClass, "object_class", "Object Class",
       G::kVideoConditionConsistency, {"detections"}, {"object"}, false},
      {Dimension::kMultipleObjects, "multiple_objects", "Multiple Objects",
       G::kVideoConditionConsistency, {"detections"}, {"objects"}, false},
      {Dimension::kHumanAction, "human_action", "Human Action",
       G::kVideoConditionConsistency, {"action_logits"}, {"action"}, false},
      {Dimension::kColor, "color", "Color", G::kVideoConditionConsistency, {"detections"},
       {"object", "color"}, false},
      {Dimension::kSpatialRelationship, "spatial_relationship", "Spatial Relationship",
       G::kVideoConditionConsistency, {"detections"}, {"relation"}, false},
      {Dimension::kScene, "scene", "Scene", G::kVideoConditionConsistency, {"captions"},
       {"scene_words"}, false},
      {Dimension::kAppearanceStyle, "appearance_style", "Appearance Style",
       G::kVideoConditionConsistency, {"clip_image", "clip_text"}, {"style_text"}, false},
      {Dimension::kTemporalStyle, "temporal_style", "Temporal Style",
       G::kVideoConditionConsistency, {"viclip_video", "viclip_text"}, {"style_text"}, false},
      {Dimension::kOverallConsistency, "overall_consistency", "Overall Consistency",
       G::kVideoConditionConsistency, {"viclip_video", "viclip_text"}, {}, true},
  }};
  return kTable;
}

}  // namespace

const std::array<Dimension, kDimensionCount>& all_dimensions() {
  static const std::array<Dimension, kDimensionCount> kAll = [] {
    std::array<Dimension, kDimensionCount> out{};
    for (std::size_t i = 0; i < kDimensionCount; ++i) out[i] = table()[i].id;
    return out;
  }();
  return kAll;
}

const DimensionInfo& info(Dimension d) { return table()[static_cast<std::size_t>(d)]; }

std::string_view tag_of(Dimension d) { return info(d).tag; }

std::optional<Dimension> parse_dimension(std::string_view tag) {
  for (const auto& row : table()) {
    if (row.tag == tag) return row.id;
  }
  return std::nullopt;
}

Dimension require_dimension(std::string_view tag) {
  if (auto d = parse_dimension(tag)) return *d;
  throw Error(ErrorCode::kUnknownDimension, std::string(tag));
}

bool is_category(std::string_view name) {
  return std::find(kCategories.begin(), kCategories.end(), name) != kCategories.end();
}

}  // namespace vgrade
