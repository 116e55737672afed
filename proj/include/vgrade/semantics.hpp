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

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vgrade/core.hpp"
#include "vgrade/suite.hpp"

// Video-condition consistency scorers: detections, captions, action logits
// and embeddings checked against a prompt's semantic labels.

namespace vgrade::semantics {

inline constexpr double kDefaultTauIou = 0.1;
inline constexpr double kActionLogitThreshold = 0.85;
inline constexpr std::size_t kActionTopK = 5;

struct RelationSpec {
  std::string a;
  std::string b;
  suite::RelationKind kind = suite::RelationKind::kLeftOf;
  double tau_iou = kDefaultTauIou;
};

// Whole-word colour vocabulary. Entries may be multi-word ("light blue").
class ColorVocabulary {
 public:
  ColorVocabulary();  // built-in list
  explicit ColorVocabulary(std::vector<std::string> words);
  static ColorVocabulary load(const std::filesystem::path& path);

  bool mentions_any(const std::vector<std::string>& caption_words) const;
  const std::vector<std::vector<std::string>>& entries() const { return entries_; }

 private:
  std::vector<std::vector<std::string>> entries_;
};

// True if `phrase` (already tokenized) occurs as a contiguous word run.
bool contains_phrase(const std::vector<std::string>& words, const std::vector<std::string>& phrase);

double iou(const BBox& a, const BBox& b);

double object_class_score(const DetectionTrack& dets, const std::string& target);

double multiple_objects_score(const DetectionTrack& dets, std::span<const std::string> targets);

// 1 if the target is among the top-5 entries with logit > 0.85, else 0.
double human_action_score(const ActionLogits& logits, const std::string& target);

// nullopt when no frame shows the object with a colour-bearing caption.
std::optional<double> color_score(const DetectionTrack& dets, const std::string& target_object,
                                  const std::string& target_color,
                                  const ColorVocabulary& vocabulary = ColorVocabulary());

// Score of one frame given the two objects' boxes.
double relation_frame_score(const BBox& a, const BBox& b, const RelationSpec& rel);
double spatial_relationship_score(const DetectionTrack& dets, const RelationSpec& rel);

// Uses the whole-frame captions; throws MissingCaptions if any frame lacks one.
double scene_score(const DetectionTrack& captions, std::span<const std::string> scene_words);

double appearance_style_score(const FeatureTrack& frame_embeds, const FeatureTrack& style_embed);

double video_text_similarity(const FeatureTrack& video_embed, const FeatureTrack& text_embed);

}  // namespace vgrade::semantics
