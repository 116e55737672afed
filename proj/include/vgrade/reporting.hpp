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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vgrade/baselines.hpp"

namespace vgrade::reporting {

enum class RadarMode { kBand03To08, kBand00To10 };

std::string_view radar_mode_name(RadarMode mode);
std::optional<RadarMode> parse_radar_mode(std::string_view name);

// Linear per-dimension remap across models: min -> lo, max -> hi. When every
// value is equal all models map to hi. Throws TooFewModels below 2 entries.
std::map<std::string, double> radar_normalize(const std::map<std::string, double>& values,
                                              RadarMode mode);

// (category, dimension_tag)
using CategoryKey = std::pair<std::string, std::string>;

struct CategoryTable {
  std::vector<std::string> categories;  // canonical category order
  std::vector<std::string> dimensions;  // leaderboard column order
  std::vector<std::vector<std::optional<double>>> cells;

  std::optional<double> at(const std::string& category, const std::string& dimension) const;
};

CategoryTable per_category_table(const std::map<CategoryKey, double>& scores);

struct ModelReport {
  std::string model_id;
  std::map<std::string, double> dimension_scores;
  // Declared dimensions with no scoreable video.
  std::vector<std::string> skipped;
  std::map<CategoryKey, double> category_scores;
  std::vector<baselines::BaselineRow> baselines;
  std::map<std::string, std::string> metadata;
};

// Throws SchemaViolation on unknown tags or scores outside [0,1].
void check_report(const ModelReport& report);

enum class ExportFormat { kJson, kCsv, kSvgRadar, kText };

std::optional<ExportFormat> parse_export_format(std::string_view name);

// Percent with 4 decimals, as stored in canonical JSON.
double to_percent4(double score);

// Models are emitted sorted by model_id regardless of input order.
std::string export_report(std::span<const ModelReport> reports, ExportFormat format,
                          RadarMode radar_mode = RadarMode::kBand03To08);
std::string export_report(std::span<const ModelReport> reports, std::string_view format,
                          RadarMode radar_mode = RadarMode::kBand03To08);

std::vector<ModelReport> parse_report_json(const std::string& text);
std::vector<ModelReport> parse_report_csv(const std::string& text);

// Baseline rows as written by `vgrade baseline`: scores as fractions at full
// precision, rows in kind order.
std::string baselines_json(std::span<const baselines::BaselineRow> rows);
std::vector<baselines::BaselineRow> parse_baselines_json(const std::string& text);

}  // namespace vgrade::reporting
