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

#include "expect_code.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "vgrade/semantics.hpp"

using namespace vgrade;
namespace vt = vgrade::testing;
using namespace vgrade::semantics;
using suite::RelationKind;
using vt::Rng;

namespace {

Detection det(std::string label, BBox box, double score = 0.9, std::optional<std::string> caption = {}) {
  return {std::move(label), score, box, std::move(caption)};
}

DetectionTrack frames_with(std::vector<std::vector<Detection>> frames) {
  DetectionTrack t;
  for (auto& f : frames) t.frames.push_back({std::move(f), std::nullopt});
  return t;
}

FeatureTrack vec(std::vector<double> v, std::size_t rows = 1) {
  const std::size_t d = v.size() / rows;
  return FeatureTrack("v", FeatureKind::kText, rows, d, std::move(v));
}

const BBox kBox{0, 0, 10, 10};

}  // namespace

TEST(ObjectClass, Counting) {
  std::vector<std::vector<Detection>> f(16);
  for (int i = 0; i < 12; ++i) f[i].push_back(det("dog", kBox));
  for (int i = 0; i < 16; ++i) f[i].push_back(det("cat", kBox));
  const auto t = frames_with(f);
  EXPECT_DOUBLE_EQ(object_class_score(t, "dog"), 0.75);
  EXPECT_DOUBLE_EQ(object_class_score(t, " Cat "), 1.0);
  EXPECT_DOUBLE_EQ(object_class_score(t, "horse"), 0.0);
}

TEST(MultipleObjects, Counting) {
  std::vector<std::vector<Detection>> f(8);
  for (int i = 0; i < 8; ++i) f[i].push_back(det("dog", kBox));
  for (int i = 0; i < 4; ++i) f[i].push_back(det("horse", kBox));
  const auto t = frames_with(f);
  const std::vector<std::string> dh = {"dog", "horse"}, dz = {"dog", "zebra"};
  EXPECT_DOUBLE_EQ(multiple_objects_score(t, dh), 0.5);
  EXPECT_DOUBLE_EQ(multiple_objects_score(t, dz), 0.0);
  EXPECT_CODE(multiple_objects_score(t, std::vector<std::string>{"dog"}), ErrorCode::kTooFewTargets);
}

TEST(MultipleObjects, NeverExceedsObjectClass) {
  Rng rng(1);
  const auto& pool = vt::label_pool();
  for (int i = 0; i < 200; ++i) {
    const auto dets = vt::random_detections(rng, 1 + rng.index(12), 64, 64);
    const std::string t = pool[rng.index(pool.size())], u = pool[rng.index(pool.size())];
    EXPECT_GE(object_class_score(dets, t), multiple_objects_score(dets, std::vector<std::string>{t, u}));
  }
}

TEST(HumanAction, Threshold) {
  EXPECT_EQ(human_action_score({"v", {{"barbequing", 0.93}}}, "barbequing"), 1.0);
  EXPECT_EQ(human_action_score({"v", {{"barbequing", 0.80}}}, "barbequing"), 0.0);
  EXPECT_EQ(human_action_score({"v", {{"running", 0.9}}}, "eating"), 0.0);
  EXPECT_EQ(human_action_score({"v", {{"running", 0.85}}}, "running"), 0.0);
  EXPECT_EQ(human_action_score({"v", {}}, "running"), 0.0);
}

TEST(Color, Examples) {
  std::vector<std::vector<Detection>> f(8);
  for (int i = 0; i < 6; ++i) f[i].push_back(det("car", kBox, 0.9, i < 3 ? "a red car" : "a blue car"));
  f[6].push_back(det("car", kBox, 0.9, "a car on the road"));
  const auto t = frames_with(f);
  EXPECT_DOUBLE_EQ(*color_score(t, "car", "red"), 0.5);
  EXPECT_FALSE(color_score(t, "horse", "red"));
  EXPECT_FALSE(color_score(frames_with({{det("car", kBox)}}), "car", "red"));
  std::vector<std::vector<Detection>> g(3, {det("car", kBox, 0.9, "Red car.")});
  EXPECT_DOUBLE_EQ(*color_score(frames_with(g), "car", "red"), 1.0);
}

TEST(Color, WholeWordAndMultiWord) {
  const auto t = frames_with({{det("car", kBox, 0.9, "a reddish car")}, {det("car", kBox, 0.9, "a light blue car")}});
  const ColorVocabulary vocab({"red", "light blue", "blue"});
  EXPECT_DOUBLE_EQ(*color_score(t, "car", "light blue", vocab), 1.0);
  EXPECT_DOUBLE_EQ(*color_score(t, "car", "blue", vocab), 1.0);
  EXPECT_TRUE(contains_phrase({"a", "light", "blue", "car"}, {"light", "blue"}));
  EXPECT_FALSE(contains_phrase({"a", "light", "car", "blue"}, {"light", "blue"}));
  EXPECT_CODE(ColorVocabulary(std::vector<std::string>{" ", ""}), ErrorCode::kEmptyInput);
}

TEST(Color, VocabularyFile) {
  const auto v = ColorVocabulary::load(std::filesystem::path(VGRADE_DATA_DIR) / "colors.txt");
  EXPECT_GE(v.entries().size(), 11u);
  EXPECT_TRUE(v.mentions_any({"a", "brown", "dog"}));
  EXPECT_CODE(ColorVocabulary::load("/nonexistent/colors.txt"), ErrorCode::kIoError);
}

TEST(Spatial, FrameRule) {
  const BBox a{0, 0, 10, 10}, b{20, 0, 30, 10};
  EXPECT_EQ(relation_frame_score(a, b, {"a", "b", RelationKind::kLeftOf}), 1.0);
  EXPECT_EQ(relation_frame_score(a, b, {"a", "b", RelationKind::kRightOf}), 0.0);
  EXPECT_EQ(relation_frame_score(a, b, {"a", "b", RelationKind::kAbove}), 0.0);
  // overlap with IoU = 0.3: widths 10, shift s gives (10-s)/(10+s) = 0.3
  const double s = 70.0 / 13.0;
  const BBox c{s, 0, 10 + s, 10};
  EXPECT_NEAR(iou(a, c), 0.3, 1e-12);
  EXPECT_NEAR(relation_frame_score(a, c, {"a", "b", RelationKind::kLeftOf}), 0.7, 1e-12);
  EXPECT_EQ(relation_frame_score(a, c, {"a", "b", RelationKind::kLeftOf, 0.5}), 1.0);
}

TEST(Spatial, BestBoxAndAveraging) {
  const auto t = frames_with({
      {det("dog", {0, 0, 10, 10}, 0.9), det("dog", {50, 0, 60, 10}, 0.5), det("cat", {20, 0, 30, 10})},
      {det("dog", {0, 0, 10, 10})},
      {det("dog", {40, 0, 50, 10}), det("cat", {20, 0, 30, 10})},
  });
  EXPECT_DOUBLE_EQ(spatial_relationship_score(t, {"dog", "cat", RelationKind::kLeftOf}), 0.5);
  EXPECT_EQ(spatial_relationship_score(frames_with({{det("dog", kBox)}}), {"dog", "cat", RelationKind::kLeftOf}), 0.0);
}

TEST(Spatial, MirrorSymmetry) {
  Rng rng(2);
  const double w = 128, h = 96;
  auto flip_x = [&](BBox b) { return BBox{w - b.x1, b.y0, w - b.x0, b.y1}; };
  auto flip_y = [&](BBox b) { return BBox{b.x0, h - b.y1, b.x1, h - b.y0}; };
  for (int i = 0; i < 500; ++i) {
    const auto dets = vt::random_detections(rng, 1, 128, 96);
    if (dets.frames[0].detections.size() < 2) continue;
    const BBox a = dets.frames[0].detections[0].bbox, b = dets.frames[0].detections[1].bbox;
    const double tau = rng.uniform(0.05, 0.6);
    EXPECT_EQ(relation_frame_score(a, b, {"a", "b", RelationKind::kLeftOf, tau}),
              relation_frame_score(flip_x(a), flip_x(b), {"a", "b", RelationKind::kRightOf, tau}));
    EXPECT_EQ(relation_frame_score(a, b, {"a", "b", RelationKind::kAbove, tau}),
              relation_frame_score(flip_y(a), flip_y(b), {"a", "b", RelationKind::kBelow, tau}));
  }
}

TEST(Scene, WordContainment) {
  DetectionTrack t;
  t.frames = {{{}, "a botanical garden with plants"}, {{}, "a garden"}, {{}, "Botanical GARDEN."}};
  const std::vector<std::string> words = {"botanical", "garden"};
  EXPECT_NEAR(scene_score(t, words), 2.0 / 3.0, 1e-15);
  t.frames.resize(1);
  EXPECT_EQ(scene_score(t, words), 1.0);
  t.frames.push_back({{}, std::nullopt});
  EXPECT_CODE(scene_score(t, words), ErrorCode::kMissingCaptions);
}

TEST(Style, AppearanceAndVideoText) {
  const auto style = vec({1, 0});
  EXPECT_DOUBLE_EQ(appearance_style_score(vec({2, 0, 3, 0}, 2), style), 1.0);
  EXPECT_DOUBLE_EQ(appearance_style_score(vec({0, 1, 0, 2}, 2), style), 0.0);
  const double s2 = std::sqrt(1 - 0.04), s3 = std::sqrt(1 - 0.09);
  EXPECT_NEAR(appearance_style_score(vec({0.2, s2, 0.3, s3}, 2), style), 0.25, 1e-15);
  EXPECT_CODE(appearance_style_score(vec({1, 0, 0}), style), ErrorCode::kDimensionMismatch);

  EXPECT_DOUBLE_EQ(video_text_similarity(vec({0.3, 0.4}), vec({3, 4})), 1.0);
  EXPECT_DOUBLE_EQ(video_text_similarity(vec({1, 0}), vec({0, 1})), 0.0);
  EXPECT_DOUBLE_EQ(video_text_similarity(vec({1, 0}), vec({-1, 0})), 0.0);
  EXPECT_NEAR(video_text_similarity(vec({0.264, std::sqrt(1 - 0.264 * 0.264)}), vec({1, 0})), 0.264, 1e-12);
  EXPECT_CODE(video_text_similarity(vec({1, 0}), vec({1, 0, 0})), ErrorCode::kDimensionMismatch);
}

TEST(Semantics, OracleAgreement) {
  Rng rng(3);
  const auto& pool = vt::label_pool();
  const std::vector<std::string> vocab = {"red", "blue", "green", "white", "black", "light blue"};
  const ColorVocabulary cv(vocab);
  for (int i = 0; i < 300; ++i) {
    const auto d = vt::random_detections(rng, 1 + rng.index(16), 200, 150);
    const std::size_t a = rng.index(pool.size());
    const std::size_t b = (a + 1 + rng.index(pool.size() - 1)) % pool.size();
    const auto kind = static_cast<RelationKind>(rng.index(4));
    EXPECT_NEAR(spatial_relationship_score(d, {pool[a], pool[b], kind, 0.2}),
                oracle::spatial(d, pool[a], pool[b], kind, 0.2), 1e-9);
    const auto c = vt::color_pool()[rng.index(5)];
    const auto got = color_score(d, pool[a], c, cv);
    const auto want = oracle::color(d, pool[a], c, vocab);
    ASSERT_EQ(got.has_value(), want.has_value());
    if (got) EXPECT_NEAR(*got, *want, 1e-9);
    EXPECT_NEAR(object_class_score(d, pool[a]), oracle::object_class(d, pool[a]), 1e-9);
    const std::vector<std::string> words = {"garden", "botanical"};
    EXPECT_NEAR(scene_score(d, words), oracle::scene(d, words), 1e-9);
  }
}
