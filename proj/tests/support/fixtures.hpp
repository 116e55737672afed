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

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "vgrade/core.hpp"
#include "vgrade/interchange.hpp"
#include "vgrade/suite.hpp"

namespace vgrade::testing {

namespace fs = std::filesystem;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin(double p = 0.5) { return uniform() < p; }
  std::uint8_t byte() { return static_cast<std::uint8_t>(gen_() & 0xFF); }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// Scratch directory removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

Image random_image(Rng& rng, std::uint32_t w, std::uint32_t h);
Image constant_image(std::uint32_t w, std::uint32_t h, std::uint8_t v);
// Base image plus bounded per-sample jitter.
Image jitter(Rng& rng, const Image& base, int amplitude);

std::vector<double> random_vector(Rng& rng, std::size_t d);
FeatureTrack random_track(Rng& rng, FeatureKind kind, std::size_t rows, std::size_t dim,
                          const std::string& id = "v");
// Rows drift slowly from a common direction, so consistency is high but < 1.
FeatureTrack drifting_track(Rng& rng, FeatureKind kind, std::size_t rows, std::size_t dim, double drift,
                            const std::string& id = "v");

FlowTrack random_flow(Rng& rng, std::size_t pairs, std::size_t cells, double scale,
                      const std::string& id = "v");

inline const std::vector<std::string>& label_pool() {
  static const std::vector<std::string> kLabels = {"dog", "cat", "car", "person", "book", "vase"};
  return kLabels;
}
inline const std::vector<std::string>& color_pool() {
  static const std::vector<std::string> kColors = {"red", "blue", "green", "white", "black"};
  return kColors;
}

DetectionTrack random_detections(Rng& rng, std::size_t frames, std::uint32_t w, std::uint32_t h,
                                 const std::string& id = "v");
ActionLogits random_logits(Rng& rng, const std::vector<std::string>& labels, const std::string& id = "v");

// JSON writers matching docs/formats.md.
void write_detections(const fs::path& path, const DetectionTrack& track);
void write_scalars(const fs::path& path, ScalarMetric metric, const std::vector<double>& values);
void write_action_logits(const fs::path& path, const ActionLogits& logits);
void write_text(const fs::path& path, const std::string& text);
std::string read_text(const fs::path& path);

// Frames as frame_%06d.png (or .ppm).
void write_frames(const fs::path& dir, const std::vector<Image>& frames, bool ppm = false);

struct CorpusSpec {
  std::size_t models = 4;
  std::size_t prompts = 25;
  std::uint32_t frames = 16;
  std::uint32_t width = 256;
  std::uint32_t height = 256;
  std::uint64_t seed = 1;
};

struct Corpus {
  fs::path suite_path;
  fs::path bundle_root;
  std::vector<suite::PromptRecord> prompts;
  std::vector<std::string> models;
};

// models x prompts bundles with every artifact kind present; prompt p tests
// dimension p mod 16 and every third prompt carries a category.
Corpus write_corpus(const fs::path& root, const CorpusSpec& spec);

// Writes one complete bundle for `prompt` into dir.
interchange::Manifest write_bundle(const fs::path& dir, Rng& rng, const std::string& video_id,
                                   const std::string& model_id, const suite::PromptRecord& prompt,
                                   std::uint32_t frames, std::uint32_t width, std::uint32_t height);

}  // namespace vgrade::testing
