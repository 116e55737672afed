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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "vgrade/dimensions.hpp"
#include "vgrade/error.hpp"
#include "vgrade/interchange.hpp"

namespace vgrade::interchange {
namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& what) {
  throw Error(ErrorCode::kSchemaViolation, "manifest: " + what);
}

std::string required_string(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_string() || doc[key].get<std::string>().empty()) {
    schema(std::string(key) + " must be a non-empty string");
  }
  return doc[key].get<std::string>();
}

std::uint32_t required_positive(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<std::int64_t>() <= 0 ||
      doc[key].get<std::int64_t>() > std::numeric_limits<std::uint32_t>::max()) {
    schema(std::string(key) + " must be a positive integer");
  }
  return doc[key].get<std::uint32_t>();
}

Rational parse_fps(const json& j) {
  Rational r;
  if (j.is_number_integer()) {
    r = {j.get<std::int64_t>(), 1};
  } else if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) {
        r = {std::stoll(s), 1};
      } else {
        r = {std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
      }
    } catch (const std::exception&) {
      schema("fps must look like \"8/1\"");
    }
  } else if (j.is_object() && j.contains("num") && j.contains("den")) {
    r = {j["num"].get<std::int64_t>(), j["den"].get<std::int64_t>()};
  } else {
    schema("fps must be an integer, \"num/den\" string or {num, den}");
  }
  if (r.num <= 0 || r.den <= 0) schema("fps must be positive");
  return r;
}

template <typename Fn>
void collect(std::vector<Violation>& out, const std::string& video_id, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    out.push_back({video_id, std::string(code_name(e.code())), e.what()});
  } catch (const std::exception& e) {
    out.push_back({video_id, "IoError", e.what()});
  }
}

std::size_t dropped_frame_count(std::size_t t) { return t >= 1 ? (t - 1) / 2 : 0; }

}  // namespace

const std::vector<std::string>& known_artifact_kinds() {
  static const std::vector<std::string> kinds = {
      artifact::kFrames,      artifact::kReconstruction, artifact::kDino,
      artifact::kClipImage,   artifact::kClipText,       artifact::kViclipVideo,
      artifact::kViclipText,  artifact::kFlow,           artifact::kAesthetic,
      artifact::kImaging,     artifact::kDetections,     artifact::kCaptions,
      artifact::kActionLogits};
  return kinds;
}

Manifest parse_manifest(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    schema(e.what());
  }
  if (!doc.is_object()) schema("top level must be an object");
  Manifest m;
  m.video_id = required_string(doc, "video_id");
  m.model_id = required_string(doc, "model_id");
  m.prompt_id = required_string(doc, "prompt_id");
  m.dimension_tag = required_string(doc, "dimension_tag");
  if (!parse_dimension(m.dimension_tag)) {
    throw Error(ErrorCode::kUnknownDimension, "manifest: " + m.dimension_tag);
  }
  if (doc.contains("group_index")) {
    if (!doc["group_index"].is_number_unsigned()) schema("group_index must be >= 0");
    m.group_index = doc["group_index"].get<std::uint32_t>();
  }
  m.frame_count = required_positive(doc, "frame_count");
  m.width = required_positive(doc, "width");
  m.height = required_positive(doc, "height");
  if (!doc.contains("fps")) schema("fps missing");
  m.fps = parse_fps(doc["fps"]);
  if (!doc.contains("artifacts") || !doc["artifacts"].is_object()) {
    schema("artifacts must be an object");
  }
  const auto& kinds = known_artifact_kinds();
  for (const auto& [kind, path] : doc["artifacts"].items()) {
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) {
      schema("unknown artifact kind \"" + kind + "\"");
    }
    if (!path.is_string()) schema("artifact path for " + kind + " must be a string");
    m.artifacts.emplace(kind, path.get<std::string>());
  }
  if (doc.contains("flow_shape")) {
    const auto& s = doc["flow_shape"];
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_unsigned() ||
        !s[1].is_number_unsigned()) {
      schema("flow_shape must be [height, width]");
    }
    m.flow_shape = {s[0].get<std::uint32_t>(), s[1].get<std::uint32_t>()};
  }
  return m;
}

Manifest load_manifest(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str());
}

std::string serialize_manifest(const Manifest& m) {
  json doc;
  doc["video_id"] = m.video_id;
  doc["model_id"] = m.model_id;
  doc["prompt_id"] = m.prompt_id;
  doc["dimension_tag"] = m.dimension_tag;
  doc["group_index"] = m.group_index;
  doc["frame_count"] = m.frame_count;
  doc["fps"] = std::to_string(m.fps.num) + "/" + std::to_string(m.fps.den);
  doc["width"] = m.width;
  doc["height"] = m.height;
  doc["artifacts"] = json::object();
  for (const auto& [k, v] : m.artifacts) doc["artifacts"][k] = v;
  if (m.flow_shape) doc["flow_shape"] = {m.flow_shape->first, m.flow_shape->second};
  return doc.dump(2) + "\n";
}

Bundle Bundle::open(const fs::path& dir) { return Bundle(dir, load_manifest(dir / "manifest.json")); }

fs::path Bundle::path_of(const std::string& kind) const {
  const auto it = manifest_.artifacts.find(kind);
  if (it == manifest_.artifacts.end()) {
    throw Error(ErrorCode::kMissingArtifact, manifest_.video_id + " has no " + kind + " artifact");
  }
  return root_ / it->second;
}

FrameSequence Bundle::frames() const {
  FrameSequence seq = load_frames(path_of(artifact::kFrames), manifest_.frame_count);
  seq.video_id = manifest_.video_id;
  seq.fps = manifest_.fps;
  seq.model_id = manifest_.model_id;
  seq.prompt_id = manifest_.prompt_id;
  return seq;
}

std::vector<Image> Bundle::reconstruction() const {
  return load_frame_images(path_of(artifact::kReconstruction),
                           dropped_frame_count(manifest_.frame_count));
}

FeatureTrack Bundle::features(const std::string& kind) const {
  FeatureKind fk = FeatureKind::kText;
  if (kind == artifact::kDino) fk = FeatureKind::kDino;
  else if (kind == artifact::kClipImage) fk = FeatureKind::kClipImage;
  else if (kind == artifact::kViclipVideo) fk = FeatureKind::kViclipVideo;
  return load_feature_file(path_of(kind), fk, manifest_.video_id);
}

FlowTrack Bundle::flow() const { return load_flow_file(path_of(artifact::kFlow), manifest_.video_id); }

ScalarTrack Bundle::scalars(const std::string& kind) const {
  return load_scalars(path_of(kind), manifest_.video_id);
}

DetectionTrack Bundle::detections(const std::string& kind) const {
  return load_detections(path_of(kind), manifest_.geometry(), manifest_.video_id);
}

ActionLogits Bundle::action_logits() const {
  return load_action_logits(path_of(artifact::kActionLogits), manifest_.video_id);
}

std::vector<Violation> validate_bundle(const Bundle& bundle) {
  std::vector<Violation> out;
  const Manifest& m = bundle.manifest();
  const std::string& id = m.video_id;
  const std::size_t t = m.frame_count;
  auto add = [&](ErrorCode code, std::string message) {
    out.push_back({id, std::string(code_name(code)), std::move(message)});
  };

  if (const auto dim = parse_dimension(m.dimension_tag)) {
    for (const auto kind : info(*dim).required_artifacts) {
      if (!bundle.has(std::string(kind))) {
        add(ErrorCode::kMissingArtifact,
            m.dimension_tag + " requires a " + std::string(kind) + " artifact");
      }
    }
  }
  for (const auto& [kind, rel] : m.artifacts) {
    if (!fs::exists(bundle.root() / rel)) {
      add(ErrorCode::kMissingArtifact, kind + " path " + rel + " does not exist");
    }
  }
  auto present = [&](const char* kind) {
    return bundle.has(kind) && fs::exists(bundle.path_of(kind));
  };

  if (present(artifact::kFrames)) {
    collect(out, id, [&] {
      const auto seq = bundle.frames();
      const auto& f0 = seq.frames.front();
      if (f0.width != m.width || f0.height != m.height) {
        add(ErrorCode::kInconsistentResolution,
            "frames are " + std::to_string(f0.width) + "x" + std::to_string(f0.height) +
                ", manifest says " + std::to_string(m.width) + "x" + std::to_string(m.height));
      }
    });
  }
  if (present(artifact::kReconstruction)) {
    collect(out, id, [&] {
      const auto rec = bundle.reconstruction();
      if (!rec.empty() && (rec.front().width != m.width || rec.front().height != m.height)) {
        add(ErrorCode::kInconsistentResolution, "reconstruction resolution differs from manifest");
      }
    });
  }

  struct FeatureRule {
    const char* kind;
    bool per_frame;
  };
  std::map<std::string, std::size_t> dims;
  for (const FeatureRule rule : {FeatureRule{artifact::kDino, true}, {artifact::kClipImage, true},
                                 {artifact::kClipText, false}, {artifact::kViclipVideo, false},
                                 {artifact::kViclipText, false}}) {
    if (!present(rule.kind)) continue;
    collect(out, id, [&] {
      const auto track = bundle.features(rule.kind);
      const std::size_t want = rule.per_frame ? t : 1;
      if (track.rows() != want) {
        add(ErrorCode::kFrameCountMismatch, std::string(rule.kind) + " has " +
                                                std::to_string(track.rows()) + " rows, expected " +
                                                std::to_string(want));
      }
      for (std::size_t r = 0; r < track.rows(); ++r) {
        const auto row = track.row(r);
        double norm2 = 0.0;
        for (double v : row) norm2 += v * v;
        if (std::sqrt(norm2) < 1e-12) {
          add(ErrorCode::kZeroVector, std::string(rule.kind) + " row " + std::to_string(r) +
                                          " has zero norm");
        }
      }
      dims[rule.kind] = track.dim();
    });
  }
  auto check_pair = [&](const char* a, const char* b) {
    if (dims.contains(a) && dims.contains(b) && dims[a] != dims[b]) {
      add(ErrorCode::kDimensionMismatch, std::string(a) + " and " + b + " embedding sizes differ");
    }
  };
  check_pair(artifact::kClipImage, artifact::kClipText);
  check_pair(artifact::kViclipVideo, artifact::kViclipText);

  if (present(artifact::kFlow)) {
    collect(out, id, [&] {
      const auto flow = bundle.flow();
      if (flow.pair_count() + 1 != t) {
        add(ErrorCode::kFrameCountMismatch,
            "flow must have T-1 grids (T=" + std::to_string(t) + ", found " +
                std::to_string(flow.pair_count()) + ")");
      }
      if (m.flow_shape &&
          std::size_t{m.flow_shape->first} * m.flow_shape->second != flow.cells) {
        add(ErrorCode::kShapeMismatch, "flow_shape does not match flow grid size");
      }
    });
  }
  for (const char* kind : {artifact::kAesthetic, artifact::kImaging}) {
    if (!present(kind)) continue;
    collect(out, id, [&] {
      const auto track = bundle.scalars(kind);
      if (scalar_metric_name(track.metric) != kind) {
        add(ErrorCode::kSchemaViolation, std::string(kind) + " file declares metric " +
                                             std::string(scalar_metric_name(track.metric)));
      }
      if (track.values.size() != t) {
        add(ErrorCode::kFrameCountMismatch, std::string(kind) + " has " +
                                                std::to_string(track.values.size()) +
                                                " values, expected " + std::to_string(t));
      }
      const double hi = scalar_metric_max(track.metric);
      for (double v : track.values) {
        if (v < 0.0 || v > hi) {
          std::ostringstream msg;
          msg << scalar_metric_name(track.metric) << " out of [0," << hi << "]: " << v;
          add(ErrorCode::kOutOfRange, msg.str());
          break;
        }
      }
    });
  }
  for (const char* kind : {artifact::kDetections, artifact::kCaptions}) {
    if (present(kind)) collect(out, id, [&] { (void)bundle.detections(kind); });
  }
  if (present(artifact::kActionLogits)) {
    collect(out, id, [&] { (void)bundle.action_logits(); });
  }
  return out;
}

std::vector<fs::path> discover_bundles(const fs::path& root) {
  if (!fs::is_directory(root)) {
    throw Error(ErrorCode::kIoError, "bundle root " + root.string() + " is not a directory");
  }
  std::vector<fs::path> out;
  if (fs::exists(root / "manifest.json")) out.push_back(root);
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file() && entry.path().filename() == "manifest.json" &&
        entry.path().parent_path() != root) {
      out.push_back(entry.path().parent_path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vgrade::interchange
