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

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "vgrade/error.hpp"
#include "vgrade/interchange.hpp"

namespace vgrade::interchange {
namespace {

using nlohmann::json;

json read_json(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (text.rfind("\xEF\xBB\xBF", 0) == 0) {
    throw Error(ErrorCode::kSchemaViolation, path.string() + ": byte-order mark not allowed");
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSchemaViolation, path.string() + ": " + e.what());
  }
}

[[noreturn]] void schema(const fs::path& path, const std::string& what) {
  throw Error(ErrorCode::kSchemaViolation, path.string() + ": " + what);
}

double finite_number(const json& j, const fs::path& path, const char* field) {
  if (!j.is_number()) schema(path, std::string(field) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw Error(ErrorCode::kNonFiniteValue, path.string() + ": " + field);
  return v;
}

std::optional<std::string> optional_string(const json& obj, const char* key,
                                           const fs::path& path) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) schema(path, std::string(key) + " must be a string");
  return it->get<std::string>();
}

}  // namespace

DetectionTrack load_detections(const fs::path& path, const FrameGeometry& geometry,
                               const std::string& video_id) {
  const json doc = read_json(path);
  if (!doc.is_object() || !doc.contains("frames") || !doc["frames"].is_array()) {
    schema(path, "expected an object with a \"frames\" array");
  }
  const auto& frames = doc["frames"];
  if (geometry.frame_count && frames.size() != *geometry.frame_count) {
    throw Error(ErrorCode::kFrameCountMismatch,
                path.string() + ": " + std::to_string(frames.size()) + " frames, manifest has " +
                    std::to_string(*geometry.frame_count));
  }
  DetectionTrack track;
  track.video_id = video_id;
  track.frames.reserve(frames.size());
  for (const auto& frame : frames) {
    if (!frame.is_object()) schema(path, "frame entries must be objects");
    FrameDetections out;
    out.caption = optional_string(frame, "caption", path);
    if (frame.contains("detections")) {
      const auto& dets = frame["detections"];
      if (!dets.is_array()) schema(path, "detections must be an array");
      for (const auto& d : dets) {
        if (!d.is_object()) schema(path, "detection must be an object");
        Detection det;
        const auto label = optional_string(d, "label", path);
        if (!label || canonical_label(*label).empty()) schema(path, "detection label missing");
        det.label = canonical_label(*label);
        if (!d.contains("score")) schema(path, "detection score missing");
        det.score = finite_number(d["score"], path, "score");
        if (det.score < 0.0 || det.score > 1.0) schema(path, "detection score outside [0,1]");
        if (!d.contains("bbox") || !d["bbox"].is_array() || d["bbox"].size() != 4) {
          schema(path, "bbox must be [x0, y0, x1, y1]");
        }
        det.bbox = {finite_number(d["bbox"][0], path, "bbox"),
                    finite_number(d["bbox"][1], path, "bbox"),
                    finite_number(d["bbox"][2], path, "bbox"),
                    finite_number(d["bbox"][3], path, "bbox")};
        const auto& b = det.bbox;
        if (!(b.x0 >= 0 && b.x0 < b.x1 && b.x1 <= geometry.width && b.y0 >= 0 &&
              b.y0 < b.y1 && b.y1 <= geometry.height)) {
          std::ostringstream msg;
          msg << path.string() << ": bbox [" << b.x0 << "," << b.y0 << "," << b.x1 << ","
              << b.y1 << "] outside " << geometry.width << "x" << geometry.height;
          throw Error(ErrorCode::kBboxOutOfBounds, msg.str());
        }
        det.caption = optional_string(d, "caption", path);
        out.detections.push_back(std::move(det));
      }
    }
    track.frames.push_back(std::move(out));
  }
  return track;
}

ScalarTrack load_scalars(const fs::path& path, const std::string& video_id) {
  const json doc = read_json(path);
  if (!doc.is_object() || !doc.contains("metric") || !doc.contains("values") ||
      !doc["values"].is_array()) {
    schema(path, "expected {\"metric\": ..., \"values\": [...]}");
  }
  ScalarTrack track;
  track.video_id = video_id;
  const auto metric = doc["metric"].is_string() ? doc["metric"].get<std::string>() : "";
  if (metric == "aesthetic_raw") {
    track.metric = ScalarMetric::kAestheticRaw;
  } else if (metric == "imaging_raw") {
    track.metric = ScalarMetric::kImagingRaw;
  } else {
    schema(path, "unknown metric \"" + metric + "\"");
  }
  for (const auto& v : doc["values"]) track.values.push_back(finite_number(v, path, "values"));
  return track;
}

ActionLogits load_action_logits(const fs::path& path, const std::string& video_id) {
  const json doc = read_json(path);
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
    schema(path, "expected an object with an \"entries\" array");
  }
  ActionLogits logits;
  logits.video_id = video_id;
  std::set<std::string> seen;
  for (const auto& e : doc["entries"]) {
    if (!e.is_object()) schema(path, "entries must be objects");
    const auto label = optional_string(e, "label", path);
    if (!label || canonical_label(*label).empty()) schema(path, "entry label missing");
    if (!e.contains("logit")) schema(path, "entry logit missing");
    ActionEntry entry{canonical_label(*label), finite_number(e["logit"], path, "logit")};
    if (entry.logit < 0.0 || entry.logit > 1.0) schema(path, "logit outside [0,1]");
    if (!seen.insert(entry.label).second) schema(path, "duplicate label " + entry.label);
    if (!logits.entries.empty() && entry.logit > logits.entries.back().logit) {
      schema(path, "entries must be sorted by descending logit");
    }
    logits.entries.push_back(std::move(entry));
  }
  if (logits.entries.size() > 5) schema(path, "at most 5 entries allowed");
  return logits;
}

}  // namespace vgrade::interchange
