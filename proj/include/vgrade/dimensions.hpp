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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vgrade {

// The sixteen evaluation dimensions, in leaderboard column order.
enum class Dimension {
  kSubjectConsistency,
  kBackgroundConsistency,
  kTemporalFlickering,
  kMotionSmoothness,
  kDynamicDegree,
  kAestheticQuality,
  kImagingQuality,
  kObjectClass,
  kMultipleObjects,
  kHumanAction,
  kColor,
  kSpatialRelationship,
  kScene,
  kAppearanceStyle,
  kTemporalStyle,
  kOverallConsistency,
};

inline constexpr std::size_t kDimensionCount = 16;

enum class DimensionGroup { kVideoQuality, kVideoConditionConsistency };

struct DimensionInfo {
  Dimension id;
  std::string_view tag;           // canonical snake_case identifier
  std::string_view display_name;  // column header in human-facing tables
  DimensionGroup group;
  std::vector<std::string_view> required_artifacts;
  std::vector<std::string_view> required_labels;
  // Scored on per-category suites (needs no prompt-specific labels).
  bool category_eligible;
};

const std::array<Dimension, kDimensionCount>& all_dimensions();
const DimensionInfo& info(Dimension d);
std::string_view tag_of(Dimension d);
std::optional<Dimension> parse_dimension(std::string_view tag);
// Throws UnknownDimension.
Dimension require_dimension(std::string_view tag);

// Content categories for per-category suites, in table order.
inline constexpr std::array<std::string_view, 8> kCategories = {
    "Animal", "Architecture", "Food", "Human", "Lifestyle", "Plant", "Scenery", "Vehicles"};

bool is_category(std::string_view name);

}  // namespace vgrade
