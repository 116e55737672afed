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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vgrade/core.hpp"

// File formats shared with extractor backends. See docs/formats.md.

namespace vgrade::interchange {

namespace fs = std::filesystem;

// VBNF feature file: "VBNF" | u32 version=1 | u32 T | u32 D | T*D float32,
// all little-endian, row-major, no padding.
inline constexpr char kVbnfMagic[4] = {'V', 'B', 'N', 'F'};
inline constexpr std::uint32_t kVbnfVersion = 1;
inline constexpr std::size_t kVbnfHeaderBytes = 16;

struct RawMatrix {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::vector<float> values;
};

RawMatrix decode_vbnf(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> encode_vbnf(const RawMatrix& matrix);

RawMatrix read_vbnf(const fs::path& path);
void write_vbnf(const fs::path& path, const RawMatrix& matrix);

FeatureTrack load_feature_file(const fs::path& path, FeatureKind kind,
                               const std::string& video_id = {});
void write_feature_file(const fs::path& path, const FeatureTrack& track);

// Flow is a VBNF file with one row per consecutive frame pair and one column
// per grid cell.
FlowTrack load_flow_file(const fs::path& path, const std::string& video_id = {});
void write_flow_file(const fs::path& path, const FlowTrack& flow);

// Frame directories -----------------------------------------------------------

// frame_%06d.png or frame_%06d.ppm, the 6-digit zero-based frame index.
std::string frame_file_stem(std::size_t index);

Image read_image(const fs::path& path);
void write_png(const fs::path& path, const Image& image, int compression_level = 1);
void write_ppm(const fs::path& path, const Image& image);

// Loads frames 0..count-1. With no expected count, the highest index on disk
// defines the count and any gap below it is a MissingFrame.
std::vector<Image> load_frame_images(const fs::path& dir,
                                     std::optional<std::size_t> expected_count = {});
FrameSequence load_frames(const fs::path& dir,
                          std::optional<std::size_t> expected_count = {});

// JSON artifacts ----------------------------------------------------------------

struct FrameGeometry {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::optional<std::size_t> frame_count;
};

DetectionTrack load_detections(const fs::path& path, const FrameGeometry& geometry,
                               const std::string& video_id = {});
ScalarTrack load_scalars(const fs::path& path, const std::string& video_id = {});
ActionLogits load_action_logits(const fs::path& path, const std::string& video_id = {});

// Manifest and bundles -------------------------------------------------------------

// Artifact kinds a manifest may reference.
namespace artifact {
inline constexpr const char* kFrames = "frames";
inline constexpr const char* kReconstruction = "reconstruction";
inline constexpr const char* kDino = "dino";
inline constexpr const char* kClipImage = "clip_image";
inline constexpr const char* kClipText = "clip_text";
inline constexpr const char* kViclipVideo = "viclip_video";
inline constexpr const char* kViclipText = "viclip_text";
inline constexpr const char* kFlow = "flow";
inline constexpr const char* kAesthetic = "aesthetic_raw";
inline constexpr const char* kImaging = "imaging_raw";
inline constexpr const char* kDetections = "detections";
inline constexpr const char* kCaptions = "captions";
inline constexpr const char* kActionLogits = "action_logits";
}  // namespace artifact

const std::vector<std::string>& known_artifact_kinds();

struct Manifest {
  std::string video_id;
  std::string model_id;
  std::string prompt_id;
  std::string dimension_tag;
  std::uint32_t group_index = 0;
  std::uint32_t frame_count = 0;
  Rational fps;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::map<std::string, std::string> artifacts;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> flow_shape;

  FrameGeometry geometry() const { return {width, height, frame_count}; }
};

Manifest parse_manifest(const std::string& json_text);
Manifest load_manifest(const fs::path& path);
std::string serialize_manifest(const Manifest& manifest);

// A manifest plus the directory its artifact paths are relative to.
class Bundle {
 public:
  Bundle(fs::path root, Manifest manifest)
      : root_(std::move(root)), manifest_(std::move(manifest)) {}

  static Bundle open(const fs::path& dir);

  const fs::path& root() const { return root_; }
  const Manifest& manifest() const { return manifest_; }
  bool has(const std::string& kind) const { return manifest_.artifacts.contains(kind); }
  // Throws MissingArtifact when the manifest has no such entry.
  fs::path path_of(const std::string& kind) const;

  FrameSequence frames() const;
  std::vector<Image> reconstruction() const;
  FeatureTrack features(const std::string& kind) const;
  FlowTrack flow() const;
  ScalarTrack scalars(const std::string& kind) const;
  DetectionTrack detections(const std::string& kind = artifact::kDetections) const;
  ActionLogits action_logits() const;

 private:
  fs::path root_;
  Manifest manifest_;
};

struct Violation {
  std::string video_id;
  std::string code;
  std::string message;

  bool operator==(const Violation&) const = default;
};

// Cross-checks one bundle; violations are data, nothing is thrown.
std::vector<Violation> validate_bundle(const Bundle& bundle);

// Every subdirectory of `root` holding a manifest.json, sorted by path.
std::vector<fs::path> discover_bundles(const fs::path& root);

}  // namespace vgrade::interchange
