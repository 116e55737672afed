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

#include "vgrade/engine.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>
#include <tuple>

#include "json.hpp"
#include "vgrade/error.hpp"
#include "vgrade/quality.hpp"

namespace vgrade::engine {
namespace {

using interchange::Bundle;
using interchange::Violation;
using suite::PromptRecord;
namespace art = interchange::artifact;

Outcome scored(double v) { return {v, {}}; }

double scaled(double tau, const Bundle& b) {
  return quality::resolution_scaled_tau(tau, b.manifest().width, b.manifest().height);
}

Outcome video_text(const Bundle& b, const PromptRecord&, const ScoringOptions&) {
  return scored(semantics::video_text_similarity(b.features(art::kViclipVideo),
                                                 b.features(art::kViclipText)));
}

Scorer make_scorer(Dimension d) {
  switch (d) {
    case Dimension::kSubjectConsistency:
      return [](const Bundle& b, const PromptRecord&, const ScoringOptions&) {
        return scored(quality::cross_frame_consistency(b.features(art::kDino)));
      };
    case Dimension::kBackgroundConsistency:
      return [](const Bundle& b, const PromptRecord&, const ScoringOptions&) {
        return scored(quality::cross_frame_consistency(b.features(art::kClipImage)));
      };
    case Dimension::kTemporalFlickering:
      return [](const Bundle& b, const PromptRecord&, const ScoringOptions& o) {
        const double tau = scaled(o.tau_static.value_or(o.tau_dynamic), b);
        if (!quality::static_filter(b.flow(), tau)) return Outcome{std::nullopt, "not_static"};
        return scored(quality::temporal_flickering(b.frames()));
      };
    case Dimension::kMotionSmoothness:
      return [](const Bundle& b, const PromptRecord&, const ScoringOptions&) {
        return scored(quality::motion_smoothness_for(b.frames(), b.reconstruction()));
      };
    case Dimension::kDynamicDegree:
      return [](const Bundle& b, const PromptRecord&, const ScoringOptions& o) {
        return scored(quality::dynamic_statistic(b.flow()) >= scaled(o.tau_dynamic, b) ? 1.0 : 0.0);
      };
    case Dimension::kAestheticQuality:
      return [](const Bundle& b, const PromptRecord&, const ScoringOptions&) {
        return scored(quality::framewise_quality(b.scalars(art::kAesthetic)));
      };
    case Dimension::kImagingQuality:
      return [](const Bundle& b, const PromptRecord&, const ScoringOptions&) {
        return scored(quality::framewise_quality(b.scalars(art::kImaging)));
      };
    case Dimension::kObjectClass:
      return [](const Bundle& b, const PromptRecord& p, const ScoringOptions&) {
        return scored(semantics::object_class_score(b.detections(), *p.labels.object));
      };
    case Dimension::kMultipleObjects:
      return [](const Bundle& b, const PromptRecord& p, const ScoringOptions&) {
        return scored(semantics::multiple_objects_score(b.detections(), *p.labels.objects));
      };
    case Dimension::kHumanAction:
      return [](const Bundle& b, const PromptRecord& p, const ScoringOptions&) {
        return scored(semantics::human_action_score(b.action_logits(), *p.labels.action));
      };
    case Dimension::kColor:
      return [](const Bundle& b, const PromptRecord& p, const ScoringOptions& o) {
        const auto s = semantics::color_score(b.detections(), *p.labels.object, *p.labels.color, o.colors);
        return s ? scored(*s) : Outcome{std::nullopt, "not_applicable"};
      };
    case Dimension::kSpatialRelationship:
      return [](const Bundle& b, const PromptRecord& p, const ScoringOptions& o) {
        const auto& r = *p.labels.relation;
        return scored(semantics::spatial_relationship_score(b.detections(), {r.a, r.b, r.kind, o.tau_iou}));
      };
    case Dimension::kScene:
      return [](const Bundle& b, const PromptRecord& p, const ScoringOptions&) {
        return scored(semantics::scene_score(b.detections(art::kCaptions), *p.labels.scene_words));
      };
    case Dimension::kAppearanceStyle:
      return [](const Bundle& b, const PromptRecord&, const ScoringOptions&) {
        return scored(semantics::appearance_style_score(b.features(art::kClipImage),
                                                        b.features(art::kClipText)));
      };
    case Dimension::kTemporalStyle:
    case Dimension::kOverallConsistency:
      return video_text;
  }
  throw Error(ErrorCode::kUnknownDimension, "no scorer");
}

const std::array<Scorer, kDimensionCount>& registry() {
  static const auto table = [] {
    std::array<Scorer, kDimensionCount> t;
    for (Dimension d : all_dimensions()) t[static_cast<std::size_t>(d)] = make_scorer(d);
    return t;
  }();
  return table;
}

struct Job {
  std::size_t bundle;
  Dimension dim;
  std::optional<std::string> category;
};

std::map<std::string, const PromptRecord*> index_prompts(const std::vector<PromptRecord>& prompts) {
  std::map<std::string, const PromptRecord*> out;
  for (const auto& p : prompts) out.emplace(p.prompt_id, &p);
  return out;
}

bool carries(const Bundle& b, Dimension d) {
  const auto& arts = info(d).required_artifacts;
  return std::all_of(arts.begin(), arts.end(), [&](std::string_view k) { return b.has(std::string(k)); });
}

void sort_violations(std::vector<Violation>& v) {
  std::sort(v.begin(), v.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.video_id, a.code, a.message) < std::tie(b.video_id, b.code, b.message);
  });
}

}  // namespace

const Scorer& scorer_for(Dimension d) { return registry().at(static_cast<std::size_t>(d)); }

void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first;
  std::mutex mu;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(mu);
            if (!first) first = std::current_exception();
            next = n;
          }
        }
      });
    }
  }
  if (first) std::rethrow_exception(first);
}

std::vector<Violation> validate_corpus(const std::vector<Bundle>& bundles,
                                       const std::vector<PromptRecord>& prompts,
                                       std::size_t workers) {
  std::vector<std::vector<Violation>> per(bundles.size());
  parallel_for(bundles.size(), workers, [&](std::size_t i) { per[i] = interchange::validate_bundle(bundles[i]); });
  std::vector<Violation> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());

  const auto by_id = index_prompts(prompts);
  std::set<std::string> seen;
  for (const auto& b : bundles) {
    const auto& m = b.manifest();
    auto add = [&](ErrorCode code, std::string msg) {
      out.push_back({m.video_id, std::string(code_name(code)), std::move(msg)});
    };
    if (!seen.insert(m.video_id).second) add(ErrorCode::kSchemaViolation, "duplicate video_id " + m.video_id);
    const auto it = by_id.find(m.prompt_id);
    if (it == by_id.end()) {
      add(ErrorCode::kSchemaViolation, "prompt_id " + m.prompt_id + " is not in the suite");
      continue;
    }
    if (std::string(tag_of(it->second->dimension)) != m.dimension_tag) {
      add(ErrorCode::kSchemaViolation, "manifest dimension " + m.dimension_tag + " but prompt " +
                                           m.prompt_id + " tests " +
                                           std::string(tag_of(it->second->dimension)));
    }
    try {
      suite::check_labels(*it->second);
    } catch (const Error& e) {
      add(e.code(), e.what());
    }
  }
  sort_violations(out);
  return out;
}

CorpusResult score_corpus(const std::vector<Bundle>& bundles, const std::vector<PromptRecord>& prompts,
                          const std::vector<Dimension>& selected, const ScoringOptions& options,
                          std::size_t workers) {
  CorpusResult result;
  const auto by_id = index_prompts(prompts);
  const std::set<Dimension> chosen(selected.begin(), selected.end());

  std::vector<Job> jobs;
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    const auto& m = bundles[i].manifest();
    const auto it = by_id.find(m.prompt_id);
    if (it == by_id.end()) {
      throw Error(ErrorCode::kSchemaViolation, m.video_id + ": prompt_id " + m.prompt_id + " not in suite");
    }
    const Dimension primary = require_dimension(m.dimension_tag);
    if (chosen.contains(primary)) jobs.push_back({i, primary, std::nullopt});
    if (const auto& cat = it->second->category) {
      for (Dimension d : chosen) {
        if (info(d).category_eligible && carries(bundles[i], d)) jobs.push_back({i, d, *cat});
      }
    }
  }

  std::vector<VideoResult> results(jobs.size());
  std::vector<std::optional<Violation>> failures(jobs.size());
  parallel_for(jobs.size(), workers, [&](std::size_t j) {
    const Job& job = jobs[j];
    const Bundle& b = bundles[job.bundle];
    const auto& m = b.manifest();
    VideoResult& r = results[j];
    r.video_id = m.video_id;
    r.model_id = m.model_id;
    r.prompt_id = m.prompt_id;
    r.group_index = m.group_index;
    r.dimension_tag = std::string(tag_of(job.dim));
    r.category = job.category;
    try {
      r.outcome = scorer_for(job.dim)(b, *by_id.at(m.prompt_id), options);
    } catch (const Error& e) {
      failures[j] = Violation{m.video_id, std::string(code_name(e.code())), r.dimension_tag + ": " + e.what()};
      r.outcome = {std::nullopt, "error"};
    }
  });
  for (auto& f : failures) {
    if (f) result.violations.push_back(std::move(*f));
  }
  sort_violations(result.violations);

  std::sort(results.begin(), results.end(), [](const VideoResult& a, const VideoResult& b) {
    const auto da = require_dimension(a.dimension_tag);
    const auto db = require_dimension(b.dimension_tag);
    return std::tie(da, a.model_id, a.video_id, a.category) < std::tie(db, b.model_id, b.video_id, b.category);
  });

  std::map<std::string, std::map<std::string, std::map<std::string, double>>> overall;
  std::map<std::string, std::map<reporting::CategoryKey, std::map<std::string, double>>> by_category;
  std::set<std::string> models;
  for (const auto& r : results) {
    models.insert(r.model_id);
    if (!r.outcome.score) continue;
    if (r.category) by_category[r.model_id][{*r.category, r.dimension_tag}][r.video_id] = *r.outcome.score;
    else overall[r.model_id][r.dimension_tag][r.video_id] = *r.outcome.score;
  }
  for (const auto& model : models) {
    reporting::ModelReport rep;
    rep.model_id = model;
    for (Dimension d : all_dimensions()) {
      if (!chosen.contains(d)) continue;
      const std::string tag(tag_of(d));
      const auto& dims = overall[model];
      if (const auto it = dims.find(tag); it != dims.end() && !it->second.empty()) {
        rep.dimension_scores[tag] = quality::aggregate_mean(it->second);
      } else {
        rep.skipped.push_back(tag);
      }
    }
    for (const auto& [key, vids] : by_category[model]) {
      rep.category_scores[key] = quality::aggregate_mean(vids);
    }
    result.reports.push_back(std::move(rep));
  }
  result.videos = std::move(results);
  return result;
}

std::string per_video_json(const std::vector<VideoResult>& videos) {
  nlohmann::json doc;
  doc["schema"] = "vgrade.per_video/1";
  doc["videos"] = nlohmann::json::array();
  for (const auto& v : videos) {
    nlohmann::json j;
    j["video_id"] = v.video_id;
    j["model_id"] = v.model_id;
    j["prompt_id"] = v.prompt_id;
    j["group_index"] = v.group_index;
    j["dimension"] = v.dimension_tag;
    if (v.category) j["category"] = *v.category;
    j["score"] = v.outcome.score ? nlohmann::json(*v.outcome.score) : nlohmann::json(nullptr);
    if (!v.outcome.excluded.empty()) j["excluded"] = v.outcome.excluded;
    doc["videos"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

PerVideoScores parse_per_video_json(const std::string& text) {
  PerVideoScores out;
  try {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& v : doc.at("videos")) {
      if (v.contains("category") || v.at("score").is_null()) continue;
      const auto dim = v.at("dimension").get<std::string>();
      require_dimension(dim);
      auto& slots = out.by_dimension[dim][v.at("model_id").get<std::string>()];
      const std::pair key{v.at("prompt_id").get<std::string>(), v.at("group_index").get<std::uint32_t>()};
      if (!slots.emplace(key, v.at("score").get<double>()).second) {
        throw Error(ErrorCode::kDuplicateAnnotation,
                    dim + " " + key.first + "#" + std::to_string(key.second) + " scored twice");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaViolation, std::string("per-video scores: ") + e.what());
  }
  return out;
}

}  // namespace vgrade::engine
