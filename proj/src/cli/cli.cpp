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

#include "vgrade/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vgrade/alignment.hpp"
#include "vgrade/baselines.hpp"
#include "vgrade/config.hpp"
#include "vgrade/engine.hpp"
#include "vgrade/error.hpp"
#include "vgrade/hashing.hpp"
#include "vgrade/quality.hpp"
#include "vgrade/reporting.hpp"
#include "vgrade/simd.hpp"

namespace vgrade::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << content;
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path.string());
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + dir.string() + ": " + ec.message());
}

// Content hashes of every input file, keyed by a path label.
class InputHashes {
 public:
  void add_file(const std::string& label, const fs::path& path) {
    hashes_[label] = hashing::sha256_file(path);
  }
  void add_tree(const fs::path& root, const fs::path& path) {
    if (fs::is_directory(path)) {
      std::vector<fs::path> files;
      for (const auto& e : fs::recursive_directory_iterator(path)) {
        if (e.is_regular_file()) files.push_back(e.path());
      }
      std::sort(files.begin(), files.end());
      for (const auto& f : files) add_file(fs::relative(f, root).generic_string(), f);
    } else if (fs::is_regular_file(path)) {
      add_file(fs::relative(path, root).generic_string(), path);
    }
  }
  const std::map<std::string, std::string>& all() const { return hashes_; }
  std::string digest() const {
    std::string listing;
    for (const auto& [k, v] : hashes_) listing += k + "\t" + v + "\n";
    return hashing::sha256_hex(listing);
  }

 private:
  std::map<std::string, std::string> hashes_;
};

json violations_json(const std::vector<interchange::Violation>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back({{"video_id", v.video_id}, {"code", v.code}, {"message", v.message}});
  return {{"violations", arr}};
}

void write_run_json(const fs::path& out_dir, const std::string& command, const std::string& snapshot,
                    const InputHashes& inputs, std::uint64_t workers, json extra = json::object()) {
  json run;
  run["command"] = command;
  run["engine_version"] = engine::kEngineVersion;
  run["config"] = snapshot;
  run["inputs"] = inputs.all();
  run["inputs_sha256"] = inputs.digest();
  run["workers"] = workers;
  run["simd"] = simd::isa_name(simd::active().isa);
  for (auto& [k, v] : extra.items()) run[k] = v;
  write_file(out_dir / "run.json", run.dump(2) + "\n");
}

std::vector<Dimension> selected_dimensions(const std::vector<std::string>& tags) {
  if (tags.empty()) return {all_dimensions().begin(), all_dimensions().end()};
  std::set<Dimension> chosen;
  for (const auto& t : tags) chosen.insert(require_dimension(t));
  return {chosen.begin(), chosen.end()};
}

std::vector<suite::PromptRecord> load_suites(const std::vector<std::string>& paths, InputHashes& hashes) {
  std::vector<suite::PromptRecord> all;
  std::set<std::string> ids;
  for (const auto& p : paths) {
    hashes.add_file("suite:" + fs::path(p).filename().string(), p);
    for (auto& rec : suite::load_suite(p)) {
      if (!ids.insert(rec.prompt_id).second) {
        throw Error(ErrorCode::kDuplicatePromptId, rec.prompt_id + " appears in more than one suite");
      }
      all.push_back(std::move(rec));
    }
  }
  return all;
}

struct LoadedBundles {
  std::vector<interchange::Bundle> bundles;
  std::vector<interchange::Violation> violations;
};

LoadedBundles open_bundles(const fs::path& root) {
  LoadedBundles out;
  for (const auto& dir : interchange::discover_bundles(root)) {
    try {
      out.bundles.push_back(interchange::Bundle::open(dir));
    } catch (const Error& e) {
      out.violations.push_back({fs::relative(dir, root).generic_string(), std::string(code_name(e.code())), e.what()});
    }
  }
  return out;
}

// {"dimension_tag": [score, ...]} files consumed by `baseline`.
std::map<Dimension, std::vector<double>> load_score_lists(const fs::path& path) {
  std::map<Dimension, std::vector<double>> out;
  try {
    const auto doc = json::parse(read_file(path));
    if (!doc.is_object()) throw Error(ErrorCode::kSchemaViolation, path.string() + " must be an object");
    for (const auto& [tag, arr] : doc.items()) {
      const Dimension d = require_dimension(tag);
      for (const auto& v : arr) {
        const double x = v.get<double>();
        if (!(x >= 0.0 && x <= 1.0)) {
          throw Error(ErrorCode::kOutOfRange, path.string() + ": " + tag + " score outside [0,1]");
        }
        out[d].push_back(x);
      }
      if (out[d].empty()) throw Error(ErrorCode::kEmptyInput, path.string() + ": " + tag + " has no scores");
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kSchemaViolation, path.string() + ": " + e.what());
  }
  return out;
}

std::vector<FeatureTrack> load_feature_pool(const fs::path& dir, FeatureKind kind, InputHashes& hashes,
                                            const fs::path& root) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".vbnf") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<FeatureTrack> pool;
  for (const auto& f : files) {
    hashes.add_file("pool:" + fs::relative(f, root).generic_string(), f);
    pool.push_back(interchange::load_feature_file(f, kind, f.stem().string()));
  }
  return pool;
}

struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> workers;
  std::string out_dir;
};

config::RunConfig base_config(const CommonOptions& common) {
  config::RunConfig cfg;
  cfg.workers = config::default_workers();
  if (!common.config_path.empty()) config::apply(config::load_toml(common.config_path), cfg);
  if (common.workers) cfg.workers = *common.workers;
  if (!common.out_dir.empty()) cfg.out_dir = common.out_dir;
  return cfg;
}

// validate ----------------------------------------------------------------------

int cmd_validate(const std::string& bundles_root, const std::vector<std::string>& suites,
                 const CommonOptions& common, std::ostream& out) {
  auto cfg = base_config(common);
  config::check(cfg);
  InputHashes hashes;
  auto loaded = open_bundles(bundles_root);
  std::vector<interchange::Violation> violations = loaded.violations;
  if (suites.empty()) {
    std::vector<std::vector<interchange::Violation>> per(loaded.bundles.size());
    engine::parallel_for(loaded.bundles.size(), cfg.workers, [&](std::size_t i) {
      per[i] = interchange::validate_bundle(loaded.bundles[i]);
    });
    for (auto& v : per) violations.insert(violations.end(), v.begin(), v.end());
  } else {
    const auto prompts = load_suites(suites, hashes);
    auto more = engine::validate_corpus(loaded.bundles, prompts, cfg.workers);
    violations.insert(violations.end(), more.begin(), more.end());
  }
  auto doc = violations_json(violations);
  doc["bundles"] = loaded.bundles.size() + loaded.violations.size();
  out << doc.dump(2) << "\n";
  return violations.empty() ? kExitOk : kExitInput;
}

// score -------------------------------------------------------------------------

int cmd_score(config::RunConfig cfg, std::ostream& out, std::ostream& err) {
  config::check(cfg);
  if (cfg.suite_paths.empty()) throw Error(ErrorCode::kConfigError, "score needs at least one --suite");
  if (cfg.bundle_root.empty()) throw Error(ErrorCode::kConfigError, "score needs --bundles");
  const fs::path out_dir = cfg.out_dir;
  ensure_dir(out_dir);

  InputHashes hashes;
  const auto prompts = load_suites(cfg.suite_paths, hashes);
  const auto dims = selected_dimensions(cfg.dimensions);
  auto loaded = open_bundles(cfg.bundle_root);
  for (const auto& b : loaded.bundles) hashes.add_tree(cfg.bundle_root, b.root());

  auto fail_with = [&](const std::vector<interchange::Violation>& vs) {
    const auto doc = violations_json(vs);
    write_file(out_dir / "violations.json", doc.dump(2) + "\n");
    err << doc.dump(2) << "\n";
    write_run_json(out_dir, "score", config::snapshot(cfg), hashes, cfg.workers, {{"status", "invalid"}});
    return kExitInput;
  };

  auto violations = loaded.violations;
  auto more = engine::validate_corpus(loaded.bundles, prompts, cfg.workers);
  violations.insert(violations.end(), more.begin(), more.end());
  if (!violations.empty()) return fail_with(violations);
  if (loaded.bundles.empty()) throw Error(ErrorCode::kEmptyInput, "no bundles under " + cfg.bundle_root);

  engine::ScoringOptions options;
  options.tau_dynamic = cfg.tau_dynamic;
  options.tau_static = cfg.tau_static;
  options.tau_iou = cfg.tau_iou;
  if (cfg.color_vocabulary_path) {
    hashes.add_file("colors:" + fs::path(*cfg.color_vocabulary_path).filename().string(),
                    *cfg.color_vocabulary_path);
    options.colors = semantics::ColorVocabulary::load(*cfg.color_vocabulary_path);
  }
  std::vector<baselines::BaselineRow> rows;
  if (cfg.baselines_path) {
    hashes.add_file("baselines:" + fs::path(*cfg.baselines_path).filename().string(), *cfg.baselines_path);
    rows = reporting::parse_baselines_json(read_file(*cfg.baselines_path));
  }

  auto result = engine::score_corpus(loaded.bundles, prompts, dims, options, cfg.workers);
  if (!result.violations.empty()) return fail_with(result.violations);

  const std::string reproducible = config::snapshot(cfg, true);
  for (auto& rep : result.reports) {
    rep.baselines = rows;
    rep.metadata["engine_version"] = std::string(engine::kEngineVersion);
    rep.metadata["config_sha256"] = hashing::sha256_hex(reproducible);
    rep.metadata["inputs_sha256"] = hashes.digest();
    for (const auto& [label, sha] : hashes.all()) {
      if (label.rfind("suite:", 0) == 0) rep.metadata[label] = sha;
    }
  }
  write_file(out_dir / "report.json", reporting::export_report(result.reports, reporting::ExportFormat::kJson));
  write_file(out_dir / "report.csv", reporting::export_report(result.reports, reporting::ExportFormat::kCsv));
  write_file(out_dir / "radar.svg", reporting::export_report(result.reports, reporting::ExportFormat::kSvgRadar));
  const auto text = reporting::export_report(result.reports, reporting::ExportFormat::kText);
  write_file(out_dir / "report.txt", text);
  write_file(out_dir / "per_video.json", engine::per_video_json(result.videos));
  write_file(out_dir / "config.toml", config::snapshot(cfg));
  write_run_json(out_dir, "score", config::snapshot(cfg), hashes, cfg.workers,
                 {{"status", "ok"}, {"videos", loaded.bundles.size()}});
  out << text;
  return kExitOk;
}

// baseline ------------------------------------------------------------------------

struct BaselineOptions {
  std::string retrieved;
  std::string webvid;
  std::string noise_scores;
  std::string feature_pool;
  std::string write_noise_clips;
  std::size_t frames = 16;
  std::uint32_t noise_width = 256;
  std::uint32_t noise_height = 256;
  std::size_t noise_clips = 1;
  std::optional<std::uint64_t> repetitions;
  std::optional<std::uint64_t> seed;
};

int cmd_baseline(const BaselineOptions& opt, config::RunConfig cfg, std::ostream& out, std::ostream& err) {
  if (opt.repetitions) cfg.repetitions = *opt.repetitions;
  if (opt.seed) cfg.noise_seed = *opt.seed;
  config::check(cfg);
  if (opt.frames < 2) throw Error(ErrorCode::kTooFewFrames, "--frames must be >= 2");
  if (opt.noise_clips < 1) throw Error(ErrorCode::kEmptyInput, "--noise-clips must be >= 1");
  const fs::path out_dir = cfg.out_dir;
  ensure_dir(out_dir);
  InputHashes hashes;
  using baselines::BaselineKind;
  using baselines::Provenance;

  std::map<Dimension, std::vector<double>> retrieved, webvid, noise;
  if (!opt.retrieved.empty()) {
    hashes.add_file("retrieved", opt.retrieved);
    retrieved = load_score_lists(opt.retrieved);
  }
  if (!opt.webvid.empty()) {
    hashes.add_file("webvid", opt.webvid);
    webvid = load_score_lists(opt.webvid);
  }
  if (!opt.noise_scores.empty()) {
    hashes.add_file("noise_scores", opt.noise_scores);
    noise = load_score_lists(opt.noise_scores);
  }

  baselines::BaselineRow max_row{BaselineKind::kEmpiricalMax, {}, {}};
  baselines::BaselineRow min_row{BaselineKind::kEmpiricalMin, {}, {}};
  baselines::BaselineRow avg_row{BaselineKind::kWebvidAvg, {}, {}};

  for (Dimension d : all_dimensions()) {
    const std::string tag(tag_of(d));
    const Provenance pmax = baselines::max_provenance(d);
    if (pmax == Provenance::kTheoretical || retrieved.contains(d)) {
      max_row.scores[tag] = baselines::empirical_max(retrieved[d], d);
      max_row.provenance[tag] = pmax;
    }
    if (baselines::min_provenance(d) == Provenance::kTheoretical) {
      min_row.scores[tag] = 0.0;
      min_row.provenance[tag] = Provenance::kTheoretical;
    } else if (baselines::min_provenance(d) == Provenance::kNoiseClip && noise.contains(d)) {
      min_row.scores[tag] = baselines::empirical_min(noise[d], d);
      min_row.provenance[tag] = Provenance::kNoiseClip;
    }
    if (webvid.contains(d)) {
      avg_row.scores[tag] = baselines::webvid_avg(webvid[d]);
      avg_row.provenance[tag] = Provenance::kRetrievedAvg;
    }
  }

  // Flicker of Gaussian noise clips is computed in-engine.
  double flicker_min = 1.0;
  for (std::size_t c = 0; c < opt.noise_clips; ++c) {
    const auto clip = baselines::make_noise_clip(opt.noise_height, opt.noise_width, opt.frames, cfg.noise_seed + c);
    flicker_min = std::min(flicker_min, quality::temporal_flickering(clip));
    if (!opt.write_noise_clips.empty()) {
      const fs::path dir = fs::path(opt.write_noise_clips) / ("noise_" + std::to_string(c));
      ensure_dir(dir);
      for (std::size_t t = 0; t < clip.frames.size(); ++t) {
        interchange::write_png(dir / (interchange::frame_file_stem(t) + ".png"), clip.frames[t]);
      }
    }
  }
  const std::string flicker_tag(tag_of(Dimension::kTemporalFlickering));
  if (!noise.contains(Dimension::kTemporalFlickering)) {
    min_row.scores[flicker_tag] = flicker_min;
    min_row.provenance[flicker_tag] = Provenance::kNoiseClip;
  } else {
    min_row.scores[flicker_tag] = std::min(flicker_min, min_row.scores[flicker_tag]);
  }

  if (!opt.feature_pool.empty()) {
    const fs::path pool_root = opt.feature_pool;
    if (!fs::is_directory(pool_root)) {
      throw Error(ErrorCode::kMissingArtifact, "feature pool " + pool_root.string() + " does not exist");
    }
    struct PoolDim {
      Dimension dim;
      const char* sub;
      FeatureKind kind;
    };
    bool any = false;
    for (const PoolDim p : {PoolDim{Dimension::kSubjectConsistency, interchange::artifact::kDino, FeatureKind::kDino},
                            PoolDim{Dimension::kBackgroundConsistency, interchange::artifact::kClipImage,
                                    FeatureKind::kClipImage}}) {
      const fs::path dir = pool_root / p.sub;
      if (!fs::is_directory(dir)) continue;
      any = true;
      const auto pool = load_feature_pool(dir, p.kind, hashes, pool_root);
      const double v = baselines::composed_video_min(
          pool, opt.frames, cfg.repetitions, cfg.noise_seed,
          [](const FeatureTrack& t) { return quality::cross_frame_consistency(t); });
      const std::string tag(tag_of(p.dim));
      min_row.scores[tag] = v;
      min_row.provenance[tag] = Provenance::kComposedVideo;
    }
    if (!any) {
      throw Error(ErrorCode::kPoolTooSmall, "feature pool has neither a dino/ nor a clip_image/ directory");
    }
  }

  std::vector<baselines::BaselineRow> rows = {max_row, min_row};
  if (!avg_row.scores.empty()) {
    rows.push_back(avg_row);
    for (const auto& dim : baselines::ordering_violations(min_row, avg_row, max_row)) {
      err << "warning: " << dim << " violates empirical_min <= webvid_avg <= empirical_max\n";
    }
  }
  const auto text = reporting::baselines_json(rows);
  write_file(out_dir / "baselines.json", text);
  write_run_json(out_dir, "baseline", config::snapshot(cfg), hashes, cfg.workers);
  out << text;
  return kExitOk;
}

// align -----------------------------------------------------------------------------

std::optional<double> safe_correlation(const std::vector<double>& x, const std::vector<double>& y,
                                       alignment::CorrelationMethod m) {
  try {
    return alignment::rank_correlation(x, y, m);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kDegenerateInput || e.code() == ErrorCode::kLengthMismatch) return std::nullopt;
    throw;
  }
}

json nullable(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

int cmd_align(const std::string& annotations_path, const std::vector<std::string>& score_paths,
              config::RunConfig cfg, std::ostream& out) {
  config::check(cfg);
  const fs::path out_dir = cfg.out_dir;
  InputHashes hashes;
  hashes.add_file("annotations", annotations_path);
  const auto annotations = alignment::load_annotations(annotations_path);
  if (annotations.empty()) throw Error(ErrorCode::kEmptyInput, "no annotations in " + annotations_path);
  const auto human = alignment::human_win_ratio(annotations);

  engine::PerVideoScores scores;
  for (const auto& p : score_paths) {
    hashes.add_file("scores:" + p, p);
    const auto part = engine::parse_per_video_json(read_file(p));
    for (const auto& [dim, models] : part.by_dimension) {
      for (const auto& [model, slots] : models) {
        auto& dst = scores.by_dimension[dim][model];
        for (const auto& [slot, v] : slots) {
          if (!dst.emplace(slot, v).second) {
            throw Error(ErrorCode::kDuplicateAnnotation, model + " " + dim + " slot scored twice across files");
          }
        }
      }
    }
  }
  ensure_dir(out_dir);

  json dims = json::object();
  std::ostringstream summary;
  summary << "dimension  spearman  pearson\n";
  std::map<std::string, std::set<alignment::SlotKey>> annotated;
  for (const auto& a : annotations) annotated[a.dimension_tag].emplace(a.prompt_id, a.group_index);
  for (const auto& [tag, table] : human) {
    // Engine ratios are taken over the annotated slots only.
    std::map<std::string, alignment::SlotScores> per_model;
    for (const auto& [model, ratio] : table.ratios) {
      const auto d = scores.by_dimension.find(tag);
      if (d == scores.by_dimension.end() || !d->second.contains(model)) {
        throw Error(ErrorCode::kCoverageMismatch, "no engine scores for " + model + " on " + tag);
      }
      const auto& all = d->second.at(model);
      auto& mine = per_model[model];
      for (const auto& slot : annotated.at(tag)) {
        const auto it = all.find(slot);
        if (it == all.end()) {
          throw Error(ErrorCode::kCoverageMismatch, model + " has no " + tag + " score for annotated slot " +
                                                        slot.first + "#" + std::to_string(slot.second));
        }
        mine.emplace(slot, it->second);
      }
    }
    const auto engine_table = alignment::vbench_win_ratio(per_model, tag);
    std::vector<double> hx, vx;
    for (const auto& [model, ratio] : table.ratios) {
      hx.push_back(ratio);
      vx.push_back(engine_table.ratios.at(model));
    }
    const auto sp = safe_correlation(vx, hx, alignment::CorrelationMethod::kSpearman);
    const auto pe = safe_correlation(vx, hx, alignment::CorrelationMethod::kPearson);
    json jd;
    jd["models"] = json::array();
    for (const auto& [model, r] : table.ratios) jd["models"].push_back(model);
    jd["human"] = {{"ratios", table.ratios}, {"comparisons", table.comparisons}};
    jd["engine"] = {{"ratios", engine_table.ratios}, {"comparisons", engine_table.comparisons}};
    jd["spearman"] = nullable(sp);
    jd["pearson"] = nullable(pe);
    dims[tag] = jd;
    auto fmt = [](const std::optional<double>& v) {
      if (!v) return std::string("n/a");
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.4f", *v);
      return std::string(buf);
    };
    summary << tag << "  " << fmt(sp) << "  " << fmt(pe) << "\n";
  }
  json doc;
  doc["schema"] = "vgrade.alignment/1";
  doc["dimensions"] = dims;
  write_file(out_dir / "alignment.json", doc.dump(2) + "\n");
  write_run_json(out_dir, "align", config::snapshot(cfg), hashes, cfg.workers);
  out << summary.str();
  return kExitOk;
}

// report ------------------------------------------------------------------------------

int cmd_report(const std::vector<std::string>& report_paths, const std::string& baselines_path,
               const std::string& radar_mode, const std::vector<std::string>& formats,
               config::RunConfig cfg, std::ostream& out) {
  config::check(cfg);
  const auto mode = reporting::parse_radar_mode(radar_mode);
  if (!mode) throw Error(ErrorCode::kConfigError, "unknown radar mode " + radar_mode);
  std::vector<reporting::ExportFormat> wanted;
  for (const auto& f : formats) {
    const auto parsed = reporting::parse_export_format(f);
    if (!parsed) throw Error(ErrorCode::kUnsupportedFormat, f);
    wanted.push_back(*parsed);
  }
  InputHashes hashes;
  std::vector<reporting::ModelReport> reports;
  std::set<std::string> ids;
  for (const auto& p : report_paths) {
    hashes.add_file("report:" + p, p);
    for (auto& r : reporting::parse_report_json(read_file(p))) {
      if (!ids.insert(r.model_id).second) {
        throw Error(ErrorCode::kSchemaViolation, "model " + r.model_id + " appears in more than one report");
      }
      reports.push_back(std::move(r));
    }
  }
  if (reports.empty()) throw Error(ErrorCode::kEmptyInput, "no models in the given reports");
  if (!baselines_path.empty()) {
    hashes.add_file("baselines", baselines_path);
    const auto rows = reporting::parse_baselines_json(read_file(baselines_path));
    for (auto& r : reports) r.baselines = rows;
  }
  const fs::path out_dir = cfg.out_dir;
  ensure_dir(out_dir);
  for (auto f : wanted) {
    const auto bytes = reporting::export_report(reports, f, *mode);
    switch (f) {
      case reporting::ExportFormat::kJson: write_file(out_dir / "report.json", bytes); break;
      case reporting::ExportFormat::kCsv: write_file(out_dir / "report.csv", bytes); break;
      case reporting::ExportFormat::kSvgRadar: write_file(out_dir / "radar.svg", bytes); break;
      case reporting::ExportFormat::kText:
        write_file(out_dir / "report.txt", bytes);
        out << bytes;
        break;
    }
  }
  write_run_json(out_dir, "report", config::snapshot(cfg), hashes, cfg.workers,
                 {{"radar_mode", radar_mode}});
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"vgrade: video generation evaluation engine"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(engine::kEngineVersion));

  CommonOptions common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config_path, "TOML-style config file")->check(CLI::ExistingFile);
    sub->add_option("--out", common.out_dir, "output directory");
    sub->add_option("--workers", common.workers, "worker threads (default: VGRADE_WORKERS or 1)")
        ->check(CLI::PositiveNumber);
  };

  // validate
  auto* validate = app.add_subcommand("validate", "check bundles against the interchange contract");
  std::string v_bundles;
  std::vector<std::string> v_suites;
  validate->add_option("--bundles", v_bundles, "bundle root")->required();
  validate->add_option("--suite", v_suites, "prompt suite(s) for cross-checks");
  add_common(validate);

  // score
  auto* score = app.add_subcommand("score", "score bundles and write reports");
  std::vector<std::string> s_suites;
  std::string s_bundles, s_colors, s_baselines;
  std::vector<std::string> s_dims;
  std::optional<double> s_tau_dynamic, s_tau_static, s_tau_iou;
  auto* o_suites = score->add_option("--suite", s_suites, "prompt suite JSONL (repeatable)");
  auto* o_bundles = score->add_option("--bundles", s_bundles, "bundle root");
  auto* o_dims = score->add_option("--dims", s_dims, "comma-separated dimension tags")->delimiter(',');
  score->add_option("--tau-dynamic", s_tau_dynamic, "dynamic threshold at 256x256");
  score->add_option("--tau-static", s_tau_static, "static-filter threshold (default tau-dynamic)");
  score->add_option("--tau-iou", s_tau_iou, "spatial relationship IoU threshold");
  auto* o_colors = score->add_option("--colors", s_colors, "colour vocabulary file");
  auto* o_baselines = score->add_option("--baselines", s_baselines, "baselines.json to attach");
  add_common(score);

  // baseline
  auto* baseline = app.add_subcommand("baseline", "build empirical min / max and reference-average rows");
  BaselineOptions b;
  baseline->add_option("--retrieved", b.retrieved, "scores of retrieved reference videos")->check(CLI::ExistingFile);
  baseline->add_option("--webvid", b.webvid, "scores of the averaging reference set")->check(CLI::ExistingFile);
  baseline->add_option("--noise-scores", b.noise_scores, "extractor scores of noise clips")->check(CLI::ExistingFile);
  baseline->add_option("--feature-pool", b.feature_pool, "directory with dino/ and clip_image/ VBNF files");
  baseline->add_option("--frames", b.frames, "frames per composed or noise video");
  baseline->add_option("--noise-width", b.noise_width)->check(CLI::PositiveNumber);
  baseline->add_option("--noise-height", b.noise_height)->check(CLI::PositiveNumber);
  baseline->add_option("--noise-clips", b.noise_clips, "number of noise clips");
  baseline->add_option("--write-noise-clips", b.write_noise_clips, "also write noise clip frames here");
  baseline->add_option("--repetitions", b.repetitions, "composed-video repetitions");
  baseline->add_option("--seed", b.seed, "base seed");
  add_common(baseline);

  // align
  auto* align = app.add_subcommand("align", "win ratios and correlation against human preferences");
  std::string a_annotations;
  std::vector<std::string> a_scores;
  align->add_option("--annotations", a_annotations, "preference annotations JSONL")->required();
  align->add_option("--scores", a_scores, "per_video.json file(s) from score")->required();
  add_common(align);

  // report
  auto* report = app.add_subcommand("report", "merge reports and render tables and radar charts");
  std::vector<std::string> r_reports;
  std::string r_baselines, r_mode = "band_03_08";
  std::vector<std::string> r_formats = {"json", "csv", "svg_radar", "text"};
  report->add_option("--reports", r_reports, "report.json file(s)")->required();
  report->add_option("--baselines", r_baselines, "baselines.json");
  report->add_option("--radar-mode", r_mode, "band_03_08 or band_00_10");
  report->add_option("--formats", r_formats, "json,csv,svg_radar,text")->delimiter(',');
  add_common(report);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << engine::kEngineVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*validate) return cmd_validate(v_bundles, v_suites, common, out);
    if (*score) {
      auto cfg = base_config(common);
      if (o_suites->count()) cfg.suite_paths = s_suites;
      if (o_bundles->count()) cfg.bundle_root = s_bundles;
      if (o_dims->count()) cfg.dimensions = s_dims;
      if (s_tau_dynamic) cfg.tau_dynamic = *s_tau_dynamic;
      if (s_tau_static) cfg.tau_static = *s_tau_static;
      if (s_tau_iou) cfg.tau_iou = *s_tau_iou;
      if (o_colors->count()) cfg.color_vocabulary_path = s_colors;
      if (o_baselines->count()) cfg.baselines_path = s_baselines;
      return cmd_score(std::move(cfg), out, err);
    }
    if (*baseline) return cmd_baseline(b, base_config(common), out, err);
    if (*align) return cmd_align(a_annotations, a_scores, base_config(common), out);
    if (*report) return cmd_report(r_reports, r_baselines, r_mode, r_formats, base_config(common), out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace vgrade::cli
