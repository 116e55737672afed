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

#include "vgrade/semantics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "vgrade/error.hpp"

namespace vgrade::semantics {
namespace {

bool frame_has(const FrameDetections& frame, const std::string& label) {
  return std::any_of(frame.detections.begin(), frame.detections.end(),
                     [&](const Detection& d) { return d.label == label; });
}

const Detection* best_of(const FrameDetections& frame, const std::string& label) {
  const Detection* best = nullptr;
  for (const auto& d : frame.detections) {
    if (d.label == label && (!best || d.score > best->score)) best = &d;
  }
  return best;
}

double fraction(std::size_t hits, std::size_t total) {
  return total == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(total);
}

const std::vector<std::string>& builtin_colors() {
  static const std::vector<std::string> kColors = {
      "black", "white", "red",    "green", "yellow", "blue",   "brown",  "purple",
      "pink",  "orange", "gray",  "grey",  "gold",   "golden", "silver", "beige",
      "navy",  "violet", "turquoise", "cyan", "magenta", "maroon", "tan"};
  return kColors;
}

}  // namespace

ColorVocabulary::ColorVocabulary() : ColorVocabulary(builtin_colors()) {}

ColorVocabulary::ColorVocabulary(std::vector<std::string> words) {
  for (const auto& w : words) {
    auto tokens = word_tokens(w);
    if (!tokens.empty()) entries_.push_back(std::move(tokens));
  }
  if (entries_.empty()) throw Error(ErrorCode::kEmptyInput, "colour vocabulary is empty");
}

ColorVocabulary ColorVocabulary::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (!canonical_label(line).empty()) words.push_back(line);
  }
  return ColorVocabulary(std::move(words));
}

bool ColorVocabulary::mentions_any(const std::vector<std::string>& caption_words) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const auto& phrase) {
    return contains_phrase(caption_words, phrase);
  });
}

bool contains_phrase(const std::vector<std::string>& words, const std::vector<std::string>& phrase) {
  if (phrase.empty() || phrase.size() > words.size()) return false;
  return std::search(words.begin(), words.end(), phrase.begin(), phrase.end()) != words.end();
}

double iou(const BBox& a, const BBox& b) {
  const double ix = std::max(0.0, std::min(a.x1, b.x1) - std::max(a.x0, b.x0));
  const double iy = std::max(0.0, std::min(a.y1, b.y1) - std::max(a.y0, b.y0));
  const double inter = ix * iy;
  const double uni = a.area() + b.area() - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

double object_class_score(const DetectionTrack& dets, const std::string& target) {
  const auto label = canonical_label(target);
  std::size_t hits = 0;
  for (const auto& frame : dets.frames) hits += frame_has(frame, label) ? 1 : 0;
  return fraction(hits, dets.frames.size());
}

double multiple_objects_score(const DetectionTrack& dets, std::span<const std::string> targets) {
  if (targets.size() < 2) {
    throw Error(ErrorCode::kTooFewTargets, "multiple objects needs at least 2 targets");
  }
  std::vector<std::string> labels;
  for (const auto& t : targets) labels.push_back(canonical_label(t));
  std::size_t hits = 0;
  for (const auto& frame : dets.frames) {
    const bool all = std::all_of(labels.begin(), labels.end(),
                                 [&](const std::string& l) { return frame_has(frame, l); });
    hits += all ? 1 : 0;
  }
  return fraction(hits, dets.frames.size());
}

double human_action_score(const ActionLogits& logits, const std::string& target) {
  const auto label = canonical_label(target);
  const std::size_t n = std::min(kActionTopK, logits.entries.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = logits.entries[i];
    if (e.logit > kActionLogitThreshold && canonical_label(e.label) == label) return 1.0;
  }
  return 0.0;
}

std::optional<double> color_score(const DetectionTrack& dets, const std::string& target_object,
                                  const std::string& target_color,
                                  const ColorVocabulary& vocabulary) {
  const auto object = canonical_label(target_object);
  const auto color = word_tokens(target_color);
  std::size_t eligible = 0;
  std::size_t hits = 0;
  for (const auto& frame : dets.frames) {
    bool colored = false;
    bool matched = false;
    for (const auto& d : frame.detections) {
      if (d.label != object || !d.caption) continue;
      const auto words = word_tokens(*d.caption);
      if (!vocabulary.mentions_any(words)) continue;
      colored = true;
      matched = matched || contains_phrase(words, color);
    }
    if (colored) {
      ++eligible;
      hits += matched ? 1 : 0;
    }
  }
  if (eligible == 0) return std::nullopt;
  return fraction(hits, eligible);
}

double relation_frame_score(const BBox& a, const BBox& b, const RelationSpec& rel) {
  const double dx = b.center_x() - a.center_x();
  const double dy = b.center_y() - a.center_y();
  double primary = 0.0;
  double other = 0.0;
  switch (rel.kind) {
    case suite::RelationKind::kLeftOf: primary = dx; other = dy; break;
    case suite::RelationKind::kRightOf: primary = -dx; other = dy; break;
    case suite::RelationKind::kAbove: primary = dy; other = dx; break;
    case suite::RelationKind::kBelow: primary = -dy; other = dx; break;
  }
  if (!(primary > 0.0) || !(std::abs(primary) > std::abs(other))) return 0.0;
  const double overlap = iou(a, b);
  return overlap < rel.tau_iou ? 1.0 : 1.0 - overlap;
}

double spatial_relationship_score(const DetectionTrack& dets, const RelationSpec& rel) {
  const auto a_label = canonical_label(rel.a);
  const auto b_label = canonical_label(rel.b);
  double total = 0.0;
  std::size_t frames = 0;
  for (const auto& frame : dets.frames) {
    const Detection* a = best_of(frame, a_label);
    const Detection* b = best_of(frame, b_label);
    if (!a || !b) continue;
    total += relation_frame_score(a->bbox, b->bbox, rel);
    ++frames;
  }
  return frames == 0 ? 0.0 : total / static_cast<double>(frames);
}

double scene_score(const DetectionTrack& captions, std::span<const std::string> scene_words) {
  std::vector<std::string> required;
  for (const auto& w : scene_words) {
    for (auto& token : word_tokens(w)) required.push_back(std::move(token));
  }
  std::size_t hits = 0;
  for (std::size_t i = 0; i < captions.frames.size(); ++i) {
    const auto& caption = captions.frames[i].caption;
    if (!caption) {
      throw Error(ErrorCode::kMissingCaptions,
                  captions.video_id + " frame " + std::to_string(i) + " has no caption");
    }
    const auto words = word_tokens(*caption);
    const bool all = std::all_of(required.begin(), required.end(), [&](const std::string& w) {
      return std::find(words.begin(), words.end(), w) != words.end();
    });
    hits += all ? 1 : 0;
  }
  return fraction(hits, captions.frames.size());
}

double appearance_style_score(const FeatureTrack& frame_embeds, const FeatureTrack& style_embed) {
  if (frame_embeds.dim() != style_embed.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "frame and style embeddings differ in size");
  }
  if (frame_embeds.rows() == 0 || style_embed.rows() == 0) {
    throw Error(ErrorCode::kEmptyInput, "appearance style needs frame and style embeddings");
  }
  const FeatureTrack frames = frame_embeds.normalized();
  const auto style = unit_normalize(style_embed.row(0));
  double total = 0.0;
  for (std::size_t t = 0; t < frames.rows(); ++t) {
    total += std::max(0.0, cosine(frames.row(t), style));
  }
  return std::clamp(total / static_cast<double>(frames.rows()), 0.0, 1.0);
}

double video_text_similarity(const FeatureTrack& video_embed, const FeatureTrack& text_embed) {
  if (video_embed.dim() != text_embed.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "video and text embeddings differ in size");
  }
  if (video_embed.rows() == 0 || text_embed.rows() == 0) {
    throw Error(ErrorCode::kEmptyInput, "video-text similarity needs both embeddings");
  }
  const auto v = unit_normalize(video_embed.row(0));
  const auto t = unit_normalize(text_embed.row(0));
  return std::clamp(cosine(v, t), 0.0, 1.0);
}

}  // namespace vgrade::semantics
