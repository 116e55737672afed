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

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "expect_code.hpp"
#include "fixtures.hpp"
#include "vgrade/core.hpp"
#include "vgrade/dimensions.hpp"

using namespace vgrade;
namespace vt = vgrade::testing;

TEST(Mae, ConstantImages) {
  EXPECT_DOUBLE_EQ(mae(Image(4, 4, 10), Image(4, 4, 20)), 10.0);
  EXPECT_DOUBLE_EQ(mae(Image(4, 4, 10), Image(4, 4, 10)), 0.0);
}

TEST(Mae, SingleSampleDiffers) {
  Image a(2, 2, 0), b(2, 2, 0);
  b.rgb[5] = 255;
  EXPECT_DOUBLE_EQ(mae(a, b), 21.25);
}

TEST(Mae, ShapeMismatch) {
  EXPECT_CODE(mae(Image(2, 2), Image(2, 3)), ErrorCode::kShapeMismatch);
}

TEST(Mae, Symmetric) {
  vt::Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    const auto a = vt::random_image(rng, 13, 7);
    const auto b = vt::random_image(rng, 13, 7);
    EXPECT_DOUBLE_EQ(mae(a, b), mae(b, a));
  }
}

TEST(Cosine, UnitVectors) {
  const std::vector<double> a = {1, 0}, b = {0.6, 0.8};
  EXPECT_DOUBLE_EQ(cosine(a, b), 0.6);
  EXPECT_CODE(cosine(a, std::vector<double>{1, 0, 0}), ErrorCode::kDimensionMismatch);
}

TEST(UnitNormalize, ZeroVector) {
  const auto u = unit_normalize(std::vector<double>{3, 4});
  EXPECT_DOUBLE_EQ(u[0], 0.6);
  EXPECT_DOUBLE_EQ(u[1], 0.8);
  EXPECT_CODE(unit_normalize(std::vector<double>{0, 0}), ErrorCode::kZeroVector);
}

TEST(FeatureTrack, ShapeAndNormalize) {
  EXPECT_CODE(FeatureTrack("v", FeatureKind::kDino, 2, 2, {1, 2, 3}), ErrorCode::kShapeMismatch);
  EXPECT_CODE(FeatureTrack("v", FeatureKind::kDino, 1, 2, {1, NAN}), ErrorCode::kNonFiniteValue);
  const FeatureTrack t("v", FeatureKind::kDino, 2, 2, {3, 4, 0, 2});
  const auto n = t.normalized();
  EXPECT_DOUBLE_EQ(n.row(0)[1], 0.8);
  EXPECT_DOUBLE_EQ(n.row(1)[1], 1.0);
  EXPECT_CODE(FeatureTrack("v", FeatureKind::kDino, 1, 2, {0, 0}).normalized(), ErrorCode::kZeroVector);
}

TEST(Labels, CanonicalAndTokens) {
  EXPECT_EQ(canonical_label("  Dog\t"), "dog");
  EXPECT_EQ(word_tokens("A red-car."), (std::vector<std::string>{"a", "red", "car"}));
  EXPECT_TRUE(word_tokens("  ,; ").empty());
}

TEST(Dimensions, TableOrderAndTags) {
  const std::vector<std::string> want = {
      "subject_consistency", "background_consistency", "temporal_flickering", "motion_smoothness",
      "dynamic_degree",      "aesthetic_quality",      "imaging_quality",     "object_class",
      "multiple_objects",    "human_action",           "color",               "spatial_relationship",
      "scene",               "appearance_style",       "temporal_style",      "overall_consistency"};
  ASSERT_EQ(all_dimensions().size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(tag_of(all_dimensions()[i]), want[i]);
    EXPECT_EQ(parse_dimension(want[i]), all_dimensions()[i]);
  }
  EXPECT_FALSE(parse_dimension("sharpness"));
  EXPECT_CODE(require_dimension("sharpness"), ErrorCode::kUnknownDimension);
}

TEST(Dimensions, GroupsSplitSevenNine) {
  int quality = 0;
  for (auto d : all_dimensions()) quality += info(d).group == DimensionGroup::kVideoQuality;
  EXPECT_EQ(quality, 7);
}

TEST(Dimensions, Categories) {
  EXPECT_EQ(kCategories.size(), 8u);
  EXPECT_TRUE(is_category("Animal"));
  EXPECT_FALSE(is_category("animal"));
}

TEST(ErrorCodes, NamesUnique) {
  std::set<std::string> names;
  for (int c = 0; c <= static_cast<int>(ErrorCode::kConfigError); ++c) {
    names.insert(std::string(code_name(static_cast<ErrorCode>(c))));
  }
  EXPECT_EQ(names.size(), static_cast<std::size_t>(ErrorCode::kConfigError) + 1);
  const Error e(ErrorCode::kBadMagic, "x");
  EXPECT_EQ(std::string(e.what()), "BadMagic: x");
}
