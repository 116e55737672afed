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
#include <span>
#include <string>
#include <utility>
#include <vector>

// Pairwise comparison protocol shared by human annotations and engine scores,
// and the correlation between the two resulting win-ratio vectors.

namespace vgrade::alignment {

inline constexpr std::uint32_t kDefaultGroupsPerPrompt = 5;
inline constexpr double kTieEpsilon = 1e-9;

enum class Verdict { kXBetter, kYBetter, kTie };

std::string_view verdict_name(Verdict v);

struct ComparisonSlot {
  std::string prompt_id;
  std::uint32_t group_index = 0;
  // Presentation order: `first` is shown on the left.
  std::string first;
  std::string second;
};

// Every unordered model pair for every (prompt, group); presentation order
// within each pair is randomized from `seed`.
std::vector<ComparisonSlot> pair_schedule(std::span<const std::string> prompts,
                                          std::span<const std::string> models,
                                          std::uint32_t groups_per_prompt = kDefaultGroupsPerPrompt,
                                          std::uint64_t seed = 0);

struct PreferenceAnnotation {
  std::string prompt_id;
  std::uint32_t group_index = 0;
  std::string model_x;
  std::string model_y;
  std::string dimension_tag;
  Verdict verdict = Verdict::kTie;
};

std::vector<PreferenceAnnotation> parse_annotations(const std::string& jsonl);
std::vector<PreferenceAnnotation> load_annotations(const std::filesystem::path& path);

struct WinRatioTable {
  std::string dimension_tag;
  std::map<std::string, double> ratios;
  std::map<std::string, std::uint64_t> comparisons;
};

// Per-dimension tables: (wins + 0.5 * ties) / comparisons. Throws
// DuplicateAnnotation on a repeated (prompt, group, pair, dimension).
std::map<std::string, WinRatioTable> human_win_ratio(std::span<const PreferenceAnnotation> annotations);

// (prompt_id, group_index) -> per-video score.
using SlotKey = std::pair<std::string, std::uint32_t>;
using SlotScores = std::map<SlotKey, double>;

// Round-robin over every slot: the higher score wins, |diff| <= 1e-9 ties.
// Throws CoverageMismatch if models cover different slots.
WinRatioTable vbench_win_ratio(const std::map<std::string, SlotScores>& per_video_scores,
                               const std::string& dimension_tag = {});

enum class CorrelationMethod { kSpearman, kPearson };

double pearson(std::span<const double> x, std::span<const double> y);
// Average ranks, 1-based; ties share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> values);
double rank_correlation(std::span<const double> x, std::span<const double> y,
                        CorrelationMethod method);

}  // namespace vgrade::alignment
