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
#include <variant>
#include <vector>

namespace vgrade::config {

// Flat TOML subset: [section] headers, key = value, '#' comments. Values are
// quoted strings, integers, floats, booleans, or one-line arrays of those.
using Scalar = std::variant<std::string, std::int64_t, double, bool>;
using Value = std::variant<Scalar, std::vector<Scalar>>;

// Keys are "section.key" (or "key" before any section header).
using Document = std::map<std::string, Value>;

Document parse_toml(const std::string& text);
Document load_toml(const std::filesystem::path& path);

struct RunConfig {
  std::vector<std::string> suite_paths;
  std::string bundle_root;
  std::vector<std::string> dimensions;  // empty selects all sixteen
  double tau_dynamic = 1.0;
  std::optional<double> tau_static;  // defaults to tau_dynamic
  double tau_iou = 0.1;
  std::optional<std::string> color_vocabulary_path;
  std::uint64_t repetitions = 1000;
  std::uint64_t noise_seed = 0;
  std::uint64_t workers = 1;
  std::string out_dir = "vgrade_out";
  std::optional<std::string> baselines_path;

  double effective_tau_static() const { return tau_static.value_or(tau_dynamic); }
};

// Worker count from VGRADE_WORKERS, or 1. Throws ConfigError on bad values.
std::uint64_t default_workers();

// Overwrites fields named in the document. Unknown keys throw ConfigError.
void apply(const Document& doc, RunConfig& cfg);

// Throws ConfigError / UnknownDimension on invalid values.
void check(const RunConfig& cfg);

// Canonical TOML rendering. With `reproducible_only`, run-local fields
// (workers, output directory) are left out so the text depends only on
// what determines the scores.
std::string snapshot(const RunConfig& cfg, bool reproducible_only = false);

}  // namespace vgrade::config
