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

#include "vgrade/alignment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "vgrade/dimensions.hpp"
#include "vgrade/error.hpp"

namespace vgrade::alignment {
namespace {

using nlohmann::json;

void credit(WinRatioTable& table, const std::string& x, const std::string& y, Verdict v) {
  const double sx = v == Verdict::kXBetter ? 1.0 : (v == Verdict::kTie ? 0.5 : 0.0);
  table.ratios[x] += sx;
  table.ratios[y] += 1.0 - sx;
  ++table.comparisons[x];
  ++table.comparisons[y];
}

void finish(WinRatioTable& table) {
  for (auto& [model, score] : table.ratios) {
    score /= static_cast<double>(table.comparisons.at(model));
  }
}

[[noreturn]] void schema(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kSchemaViolation, "annotation line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kXBetter: return "x_better";
    case Verdict::kYBetter: return "y_better";
    case Verdict::kTie: return "tie";
  }
  return "tie";
}

std::vector<ComparisonSlot> pair_schedule(std::span<const std::string> prompts,
                                          std::span<const std::string> models,
                                          std::uint32_t groups_per_prompt, std::uint64_t seed) {
  if (models.size() < 2) throw Error(ErrorCode::kTooFewModels, "need at least 2 models");
  std::mt19937_64 rng(seed);
  std::vector<ComparisonSlot> slots;
  slots.reserve(prompts.size() * groups_per_prompt * models.size() * (models.size() - 1) / 2);
  for (const auto& prompt : prompts) {
    for (std::uint32_t g = 0; g < groups_per_prompt; ++g) {
      for (std::size_t i = 0; i < models.size(); ++i) {
        for (std::size_t j = i + 1; j < models.size(); ++j) {
          const bool swap = (rng() >> 63) != 0;
          slots.push_back({prompt, g, swap ? models[j] : models[i], swap ? models[i] : models[j]});
        }
      }
    }
  }
  return slots;
}

std::vector<PreferenceAnnotation> parse_annotations(const std::string& jsonl) {
  std::vector<PreferenceAnnotation> out;
  std::istringstream in(jsonl);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    json doc;
    try {
      doc = json::parse(line);
    } catch (const json::parse_error& e) {
      schema(line_no, e.what());
    }
    if (!doc.is_object()) schema(line_no, "annotation must be an object");
    auto str = [&](const char* key) {
      if (!doc.contains(key) || !doc[key].is_string() || doc[key].get<std::string>().empty()) {
        schema(line_no, std::string(key) + " must be a non-empty string");
      }
      return doc[key].get<std::string>();
    };
    PreferenceAnnotation a;
    a.prompt_id = str("prompt_id");
    a.model_x = str("model_x");
    a.model_y = str("model_y");
    a.dimension_tag = str("dimension");
    if (!parse_dimension(a.dimension_tag)) {
      throw Error(ErrorCode::kUnknownDimension, "annotation line " + std::to_string(line_no) +
                                                    ": " + a.dimension_tag);
    }
    if (!doc.contains("group_index") || !doc["group_index"].is_number_unsigned()) {
      schema(line_no, "group_index must be a non-negative integer");
    }
    a.group_index = doc["group_index"].get<std::uint32_t>();
    const auto verdict = str("verdict");
    if (verdict == "x_better") a.verdict = Verdict::kXBetter;
    else if (verdict == "y_better") a.verdict = Verdict::kYBetter;
    else if (verdict == "tie") a.verdict = Verdict::kTie;
    else schema(line_no, "verdict must be x_better, y_better or tie");
    if (a.model_x == a.model_y) schema(line_no, "model_x and model_y must differ");
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<PreferenceAnnotation> load_annotations(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_annotations(buf.str());
}

std::map<std::string, WinRatioTable> human_win_ratio(
    std::span<const PreferenceAnnotation> annotations) {
  std::set<std::tuple<std::string, std::uint32_t, std::string, std::string, std::string>> seen;
  std::map<std::string, WinRatioTable> tables;
  for (const auto& a : annotations) {
    const auto& lo = std::min(a.model_x, a.model_y);
    const auto& hi = std::max(a.model_x, a.model_y);
    if (!seen.emplace(a.prompt_id, a.group_index, lo, hi, a.dimension_tag).second) {
      throw Error(ErrorCode::kDuplicateAnnotation,
                  a.dimension_tag + " " + a.prompt_id + "#" + std::to_string(a.group_index) + " " +
                      lo + " vs " + hi);
    }
    auto& table = tables[a.dimension_tag];
    table.dimension_tag = a.dimension_tag;
    credit(table, a.model_x, a.model_y, a.verdict);
  }
  for (auto& [dim, table] : tables) finish(table);
  return tables;
}

WinRatioTable vbench_win_ratio(const std::map<std::string, SlotScores>& per_video_scores,
                               const std::string& dimension_tag) {
  if (per_video_scores.size() < 2) throw Error(ErrorCode::kTooFewModels, "need at least 2 models");
  const auto& reference = per_video_scores.begin()->second;
  for (const auto& [model, slots] : per_video_scores) {
    const bool same = slots.size() == reference.size() &&
                      std::equal(slots.begin(), slots.end(), reference.begin(),
                                 [](const auto& a, const auto& b) { return a.first == b.first; });
    if (!same) {
      throw Error(ErrorCode::kCoverageMismatch,
                  model + " covers different (prompt, group) slots than " +
                      per_video_scores.begin()->first);
    }
  }
  if (reference.empty()) throw Error(ErrorCode::kEmptyInput, "no scored slots");
  WinRatioTable table;
  table.dimension_tag = dimension_tag;
  for (const auto& [slot, unused] : reference) {
    for (auto i = per_video_scores.begin(); i != per_video_scores.end(); ++i) {
      for (auto j = std::next(i); j != per_video_scores.end(); ++j) {
        const double x = i->second.at(slot);
        const double y = j->second.at(slot);
        const Verdict v = std::abs(x - y) <= kTieEpsilon ? Verdict::kTie
                          : x > y                        ? Verdict::kXBetter
                                                         : Verdict::kYBetter;
        credit(table, i->first, j->first, v);
      }
    }
  }
  finish(table);
  return table;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(x.size()) + " vs " + std::to_string(y.size()));
  }
  if (x.size() < 2) throw Error(ErrorCode::kLengthMismatch, "need at least 2 points");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) throw Error(ErrorCode::kDegenerateInput, "zero variance");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double rank_correlation(std::span<const double> x, std::span<const double> y,
                        CorrelationMethod method) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(x.size()) + " vs " + std::to_string(y.size()));
  }
  if (method == CorrelationMethod::kPearson) return pearson(x, y);
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return pearson(rx, ry);
}

}  // namespace vgrade::alignment
