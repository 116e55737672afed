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

#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "vgrade/dimensions.hpp"
#include "vgrade/error.hpp"

namespace vgrade::testing {

using nlohmann::json;

TempDir::TempDir(const std::string& tag) {
  static std::uint64_t counter = 0;
  std::random_device rd;
  path_ = fs::temp_directory_path() /
          ("vgrade_" + tag + "_" + std::to_string(rd()) + "_" + std::to_string(counter++));
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

Image random_image(Rng& rng, std::uint32_t w, std::uint32_t h) {
  Image img(w, h);
  for (auto& v : img.rgb) v = rng.byte();
  return img;
}

Image constant_image(std::uint32_t w, std::uint32_t h, std::uint8_t v) { return Image(w, h, v); }

Image jitter(Rng& rng, const Image& base, int amplitude) {
  Image out = base;
  for (auto& v : out.rgb) {
    const int d = amplitude == 0 ? 0 : rng.integer(-amplitude, amplitude);
    v = static_cast<std::uint8_t>(std::clamp(static_cast<int>(v) + d, 0, 255));
  }
  return out;
}

std::vector<double> random_vector(Rng& rng, std::size_t d) {
  std::vector<double> v(d);
  for (auto& x : v) x = rng.uniform(-1.0, 1.0);
  v[0] += 0.05;  // keeps the norm away from zero
  return v;
}

FeatureTrack random_track(Rng& rng, FeatureKind kind, std::size_t rows, std::size_t dim,
                          const std::string& id) {
  std::vector<double> values;
  for (std::size_t r = 0; r < rows; ++r) {
    const auto v = random_vector(rng, dim);
    values.insert(values.end(), v.begin(), v.end());
  }
  return FeatureTrack(id, kind, rows, dim, std::move(values));
}

FeatureTrack drifting_track(Rng& rng, FeatureKind kind, std::size_t rows, std::size_t dim, double drift,
                            const std::string& id) {
  auto cur = random_vector(rng, dim);
  for (auto& x : cur) x += 2.0;
  std::vector<double> values;
  for (std::size_t r = 0; r < rows; ++r) {
    values.insert(values.end(), cur.begin(), cur.end());
    for (auto& x : cur) x += drift * rng.uniform(-1.0, 1.0);
  }
  return FeatureTrack(id, kind, rows, dim, std::move(values));
}

FlowTrack random_flow(Rng& rng, std::size_t pairs, std::size_t cells, double scale, const std::string& id) {
  FlowTrack flow;
  flow.video_id = id;
  flow.cells = cells;
  for (std::size_t p = 0; p < pairs; ++p) {
    std::vector<double> grid(cells);
    // float32-representable values so file round-trips are exact.
    for (auto& v : grid) v = static_cast<float>(scale * rng.uniform());
    flow.grids.push_back(std::move(grid));
  }
  return flow;
}

DetectionTrack random_detections(Rng& rng, std::size_t frames, std::uint32_t w, std::uint32_t h,
                                 const std::string& id) {
  static const std::vector<std::string> kScenes = {
      "a botanical garden with plants", "a garden at dusk", "a city street", "botanical garden"};
  DetectionTrack track;
  track.video_id = id;
  for (std::size_t f = 0; f < frames; ++f) {
    FrameDetections fd;
    fd.caption = kScenes[rng.index(kScenes.size())];
    const int n = rng.integer(0, 5);
    for (int i = 0; i < n; ++i) {
      Detection d;
      d.label = label_pool()[rng.index(label_pool().size())];
      d.score = std::round(rng.uniform(0.3, 1.0) * 1000.0) / 1000.0;
      const double x0 = std::floor(rng.uniform(0.0, w * 0.8));
      const double y0 = std::floor(rng.uniform(0.0, h * 0.8));
      const double x1 = std::min<double>(w, x0 + 1.0 + std::floor(rng.uniform(0.0, w * 0.4)));
      const double y1 = std::min<double>(h, y0 + 1.0 + std::floor(rng.uniform(0.0, h * 0.4)));
      d.bbox = {x0, y0, x1, y1};
      const int c = rng.integer(0, 3);
      if (c == 1) d.caption = "a " + color_pool()[rng.index(color_pool().size())] + " " + d.label;
      else if (c == 2) d.caption = "a " + d.label + " on the grass";
      else if (c == 3) d.caption = "a light " + color_pool()[rng.index(color_pool().size())] + " " + d.label;
      fd.detections.push_back(std::move(d));
    }
    track.frames.push_back(std::move(fd));
  }
  return track;
}

ActionLogits random_logits(Rng& rng, const std::vector<std::string>& labels, const std::string& id) {
  ActionLogits out;
  out.video_id = id;
  std::vector<std::string> pool = labels;
  std::shuffle(pool.begin(), pool.end(), rng.engine());
  const std::size_t n = std::min<std::size_t>(pool.size(), static_cast<std::size_t>(rng.integer(0, 5)));
  std::vector<double> logits;
  for (std::size_t i = 0; i < n; ++i) logits.push_back(std::round(rng.uniform(0.5, 1.0) * 1000.0) / 1000.0);
  std::sort(logits.rbegin(), logits.rend());
  for (std::size_t i = 0; i < n; ++i) out.entries.push_back({pool[i], logits[i]});
  return out;
}

void write_text(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_detections(const fs::path& path, const DetectionTrack& track) {
  json doc;
  doc["frames"] = json::array();
  for (const auto& f : track.frames) {
    json jf;
    if (f.caption) jf["caption"] = *f.caption;
    jf["detections"] = json::array();
    for (const auto& d : f.detections) {
      json jd = {{"label", d.label}, {"score", d.score}, {"bbox", {d.bbox.x0, d.bbox.y0, d.bbox.x1, d.bbox.y1}}};
      if (d.caption) jd["caption"] = *d.caption;
      jf["detections"].push_back(jd);
    }
    doc["frames"].push_back(jf);
  }
  write_text(path, doc.dump());
}

void write_scalars(const fs::path& path, ScalarMetric metric, const std::vector<double>& values) {
  write_text(path, json{{"metric", scalar_metric_name(metric)}, {"values", values}}.dump());
}

void write_action_logits(const fs::path& path, const ActionLogits& logits) {
  json doc;
  doc["entries"] = json::array();
  for (const auto& e : logits.entries) doc["entries"].push_back({{"label", e.label}, {"logit", e.logit}});
  write_text(path, doc.dump());
}

void write_frames(const fs::path& dir, const std::vector<Image>& frames, bool ppm) {
  fs::create_directories(dir);
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const auto stem = dir / interchange::frame_file_stem(i);
    if (ppm) interchange::write_ppm(stem.string() + ".ppm", frames[i]);
    else interchange::write_png(stem.string() + ".png", frames[i]);
  }
}

interchange::Manifest write_bundle(const fs::path& dir, Rng& rng, const std::string& video_id,
                                   const std::string& model_id, const suite::PromptRecord& prompt,
                                   std::uint32_t frames, std::uint32_t width, std::uint32_t height) {
  namespace art = interchange::artifact;
  fs::create_directories(dir);
  interchange::Manifest m;
  m.video_id = video_id;
  m.model_id = model_id;
  m.prompt_id = prompt.prompt_id;
  m.dimension_tag = std::string(tag_of(prompt.dimension));
  m.frame_count = frames;
  m.fps = {8, 1};
  m.width = width;
  m.height = height;

  // Low-amplitude content keeps PNGs small; some videos are static.
  const int amplitude = rng.integer(0, 6);
  Image base(width, height);
  for (std::uint32_t y = 0; y < height; ++y) {
    for (std::uint32_t x = 0; x < width; ++x) {
      const std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
      base.rgb[i] = static_cast<std::uint8_t>((x + rng.integer(0, 3)) & 0xFF);
      base.rgb[i + 1] = static_cast<std::uint8_t>((y * 2) & 0xFF);
      base.rgb[i + 2] = static_cast<std::uint8_t>(((x + y) / 2) & 0xFF);
    }
  }
  std::vector<Image> video;
  for (std::uint32_t t = 0; t < frames; ++t) video.push_back(jitter(rng, base, amplitude));
  write_frames(dir / "frames", video);
  m.artifacts[art::kFrames] = "frames";

  std::vector<Image> recon;
  for (std::uint32_t i = 1; i + 2 <= frames; i += 2) recon.push_back(jitter(rng, video[i], 2));
  write_frames(dir / "reconstruction", recon);
  m.artifacts[art::kReconstruction] = "reconstruction";

  auto features = [&](const char* kind, FeatureKind fk, std::size_t rows, std::size_t dim) {
    const auto track = rows > 1 ? drifting_track(rng, fk, rows, dim, 0.2, video_id)
                                : random_track(rng, fk, rows, dim, video_id);
    interchange::write_feature_file(dir / (std::string(kind) + ".vbnf"), track);
    m.artifacts[kind] = std::string(kind) + ".vbnf";
  };
  features(art::kDino, FeatureKind::kDino, frames, 24);
  features(art::kClipImage, FeatureKind::kClipImage, frames, 16);
  features(art::kClipText, FeatureKind::kText, 1, 16);
  features(art::kViclipVideo, FeatureKind::kViclipVideo, 1, 12);
  features(art::kViclipText, FeatureKind::kText, 1, 12);

  const double flow_scale = rng.coin(0.5) ? 0.8 : 6.0;
  interchange::write_flow_file(dir / "flow.vbnf", random_flow(rng, frames - 1, 64, flow_scale, video_id));
  m.artifacts[art::kFlow] = "flow.vbnf";
  m.flow_shape = std::make_pair(8u, 8u);

  std::vector<double> aesthetic, imaging;
  for (std::uint32_t t = 0; t < frames; ++t) {
    aesthetic.push_back(std::round(rng.uniform(3.0, 8.0) * 100.0) / 100.0);
    imaging.push_back(std::round(rng.uniform(30.0, 80.0) * 100.0) / 100.0);
  }
  write_scalars(dir / "aesthetic.json", ScalarMetric::kAestheticRaw, aesthetic);
  write_scalars(dir / "imaging.json", ScalarMetric::kImagingRaw, imaging);
  m.artifacts[art::kAesthetic] = "aesthetic.json";
  m.artifacts[art::kImaging] = "imaging.json";

  const auto dets = random_detections(rng, frames, width, height, video_id);
  write_detections(dir / "detections.json", dets);
  write_detections(dir / "captions.json", random_detections(rng, frames, width, height, video_id));
  m.artifacts[art::kDetections] = "detections.json";
  m.artifacts[art::kCaptions] = "captions.json";

  write_action_logits(dir / "actions.json",
                      random_logits(rng, {"running", "eating", "dancing", "swimming", "reading", "cooking"},
                                    video_id));
  m.artifacts[art::kActionLogits] = "actions.json";

  write_text(dir / "manifest.json", interchange::serialize_manifest(m));
  return m;
}

namespace {

suite::PromptRecord make_prompt(std::size_t p) {
  suite::PromptRecord r;
  char id[16];
  std::snprintf(id, sizeof id, "p%03zu", p);
  r.prompt_id = id;
  r.dimension = all_dimensions()[p % kDimensionCount];
  r.text = "synthetic prompt " + r.prompt_id;
  auto& l = r.labels;
  switch (r.dimension) {
    case Dimension::kObjectClass: l.object = "dog"; break;
    case Dimension::kMultipleObjects: l.objects = std::vector<std::string>{"dog", "cat"}; break;
    case Dimension::kHumanAction: l.action = "running"; break;
    case Dimension::kColor: l.object = "car"; l.color = "red"; break;
    case Dimension::kSpatialRelationship: l.relation = suite::RelationLabel{"dog", "cat", suite::RelationKind::kLeftOf}; break;
    case Dimension::kScene: l.scene_words = std::vector<std::string>{"botanical", "garden"}; break;
    case Dimension::kAppearanceStyle:
    case Dimension::kTemporalStyle: l.style_text = "oil painting"; break;
    default: break;
  }
  if (p % 3 == 0) r.category = std::string(kCategories[(p / 3) % kCategories.size()]);
  return r;
}

}  // namespace

Corpus write_corpus(const fs::path& root, const CorpusSpec& spec) {
  Corpus c;
  c.bundle_root = root / "bundles";
  c.suite_path = root / "suite.jsonl";
  for (std::size_t p = 0; p < spec.prompts; ++p) c.prompts.push_back(make_prompt(p));
  write_text(c.suite_path, suite::serialize_suite(c.prompts));
  Rng rng(spec.seed);
  for (std::size_t m = 0; m < spec.models; ++m) {
    c.models.push_back("model_" + std::string(1, static_cast<char>('a' + m)));
  }
  for (const auto& model : c.models) {
    for (const auto& prompt : c.prompts) {
      const std::string vid = model + "_" + prompt.prompt_id;
      write_bundle(c.bundle_root / model / prompt.prompt_id, rng, vid, model, prompt, spec.frames,
                   spec.width, spec.height);
    }
  }
  return c;
}

}  // namespace vgrade::testing
