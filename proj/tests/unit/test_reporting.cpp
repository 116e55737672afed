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

#include <gtest/gtest.h>

#include <algorithm>
#include "json.hpp"

#include "expect_code.hpp"
#include "fixtures.hpp"
#include "vgrade/reporting.hpp"

using namespace vgrade;
namespace vt = vgrade::testing;
using namespace vgrade::reporting;
using vt::Rng;

namespace {

ModelReport random_report(Rng& rng, const std::string& id) {
  ModelReport r;
  r.model_id = id;
  for (Dimension d : all_dimensions()) {
    if (rng.coin(0.85)) r.dimension_scores[std::string(tag_of(d))] = rng.uniform();
    else r.skipped.emplace_back(tag_of(d));
  }
  for (auto c : kCategories) {
    for (Dimension d : all_dimensions()) {
      if (info(d).category_eligible && rng.coin(0.5)) {
        r.category_scores[{std::string(c), std::string(tag_of(d))}] = rng.uniform();
      }
    }
  }
  r.metadata["engine"] = "test";
  return r;
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(Radar, Examples) {
  const auto out = radar_normalize({{"a", 0.5}, {"b", 0.7}, {"c", 0.9}}, RadarMode::kBand03To08);
  EXPECT_NEAR(out.at("a"), 0.3, 1e-12);
  EXPECT_NEAR(out.at("b"), 0.55, 1e-12);
  EXPECT_NEAR(out.at("c"), 0.8, 1e-12);
  const auto wide = radar_normalize({{"a", 0.2}, {"b", 0.6}, {"c", 1.0}}, RadarMode::kBand00To10);
  EXPECT_NEAR(wide.at("b"), 0.5, 1e-12);
  EXPECT_NEAR(wide.at("c"), 1.0, 1e-12);
}

TEST(Radar, Anchor) {
  const auto out = radar_normalize({{"x", 0.60}, {"y", 0.8938}, {"z", 0.95}}, RadarMode::kBand03To08);
  EXPECT_NEAR(out.at("y"), 0.3 + 0.5 * (0.8938 - 0.60) / 0.35, 1e-12);
  EXPECT_NEAR(out.at("y"), 0.7197, 1e-4);
}

TEST(Radar, AllEqualAndTooFew) {
  const auto out = radar_normalize({{"a", 0.4}, {"b", 0.4}}, RadarMode::kBand03To08);
  EXPECT_DOUBLE_EQ(out.at("a"), 0.8);
  EXPECT_DOUBLE_EQ(out.at("b"), 0.8);
  EXPECT_CODE(radar_normalize({{"a", 0.4}}, RadarMode::kBand03To08), ErrorCode::kTooFewModels);
  EXPECT_CODE(radar_normalize({}, RadarMode::kBand00To10), ErrorCode::kTooFewModels);
}

TEST(Radar, PreservesOrderAndBand) {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    std::map<std::string, double> in;
    const std::size_t n = 2 + rng.index(8);
    for (std::size_t i = 0; i < n; ++i) in["m" + std::to_string(i)] = rng.uniform();
    const auto mode = rng.coin() ? RadarMode::kBand03To08 : RadarMode::kBand00To10;
    const auto out = radar_normalize(in, mode);
    const double lo = mode == RadarMode::kBand03To08 ? 0.3 : 0.0;
    const double hi = mode == RadarMode::kBand03To08 ? 0.8 : 1.0;
    for (const auto& [a, va] : in) {
      EXPECT_GE(out.at(a), lo - 1e-12);
      EXPECT_LE(out.at(a), hi + 1e-12);
      for (const auto& [b, vb] : in) {
        if (va < vb) EXPECT_LT(out.at(a), out.at(b));
      }
    }
  }
}

TEST(Radar, ModeNames) {
  EXPECT_EQ(parse_radar_mode("band_03_08"), RadarMode::kBand03To08);
  EXPECT_EQ(parse_radar_mode("band_00_10"), RadarMode::kBand00To10);
  EXPECT_FALSE(parse_radar_mode("band"));
  EXPECT_EQ(radar_mode_name(RadarMode::kBand00To10), "band_00_10");
}

TEST(CategoryTable, Shape) {
  Rng rng(3);
  std::map<CategoryKey, double> scores;
  std::vector<std::string> eligible;
  for (Dimension d : all_dimensions()) {
    if (info(d).category_eligible) eligible.emplace_back(tag_of(d));
  }
  ASSERT_EQ(eligible.size(), 7u);
  for (auto it = eligible.rbegin(); it != eligible.rend(); ++it) {
    for (auto c = kCategories.rbegin(); c != kCategories.rend(); ++c) scores[{std::string(*c), *it}] = rng.uniform();
  }
  const auto t = per_category_table(scores);
  ASSERT_EQ(t.categories.size(), 8u);
  ASSERT_EQ(t.dimensions.size(), 7u);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(t.categories[i], kCategories[i]);
  EXPECT_EQ(t.dimensions, eligible);
  for (const auto& [key, v] : scores) EXPECT_EQ(t.at(key.first, key.second), v);
  EXPECT_FALSE(t.at("Animal", "color"));
}

TEST(CategoryTable, EmptyAndUnknown) {
  const auto t = per_category_table({});
  EXPECT_TRUE(t.categories.empty());
  EXPECT_TRUE(t.cells.empty());
  EXPECT_CODE(per_category_table({{{"Robots", "aesthetic_quality"}, 0.5}}), ErrorCode::kUnknownCategory);
  EXPECT_CODE(per_category_table({{{"Food", "taste"}, 0.5}}), ErrorCode::kUnknownDimension);
}

TEST(CategoryTable, SparseCellsStayEmpty) {
  const auto t = per_category_table({{{"Plant", "imaging_quality"}, 0.6}, {{"Animal", "dynamic_degree"}, 0.4}});
  EXPECT_EQ(t.categories, (std::vector<std::string>{"Animal", "Plant"}));
  EXPECT_EQ(t.dimensions, (std::vector<std::string>{"dynamic_degree", "imaging_quality"}));
  EXPECT_FALSE(t.at("Animal", "imaging_quality"));
  EXPECT_EQ(t.at("Plant", "imaging_quality"), 0.6);
}

TEST(Export, PercentFourDecimals) {
  EXPECT_DOUBLE_EQ(to_percent4(0.2643), 26.43);
  EXPECT_DOUBLE_EQ(to_percent4(0.123456789), 12.3457);
  EXPECT_DOUBLE_EQ(to_percent4(1.0), 100.0);
  EXPECT_DOUBLE_EQ(to_percent4(0.0), 0.0);
}

TEST(Export, CategoryCellRoundTrips) {
  ModelReport r;
  r.model_id = "model_a";
  r.category_scores[{"Animal", "overall_consistency"}] = 0.2643;
  r.dimension_scores["overall_consistency"] = 0.2649;
  const std::vector<ModelReport> reports{r};

  const auto js = export_report(reports, ExportFormat::kJson);
  const auto doc = nlohmann::json::parse(js);
  EXPECT_EQ(doc["schema"], "vgrade.report/1");
  EXPECT_DOUBLE_EQ(doc["models"][0]["categories"]["Animal"]["overall_consistency"].get<double>(), 26.43);
  const auto back = parse_report_json(js);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_NEAR(back[0].category_scores.at({"Animal", "overall_consistency"}), 0.2643, 1e-12);

  const auto csv = export_report(reports, ExportFormat::kCsv);
  EXPECT_NE(csv.find("model_a,Animal,"), std::string::npos);
  EXPECT_NE(csv.find("26.4300"), std::string::npos);
  const auto from_csv = parse_report_csv(csv);
  EXPECT_NEAR(from_csv[0].category_scores.at({"Animal", "overall_consistency"}), 0.2643, 1e-12);
}

TEST(Export, SortedAndDeterministic) {
  Rng rng(9);
  std::vector<ModelReport> reports;
  for (const char* id : {"zeta", "alpha", "mid"}) reports.push_back(random_report(rng, id));
  auto shuffled = reports;
  std::reverse(shuffled.begin(), shuffled.end());
  for (auto f : {ExportFormat::kJson, ExportFormat::kCsv, ExportFormat::kSvgRadar, ExportFormat::kText}) {
    EXPECT_EQ(export_report(reports, f), export_report(shuffled, f));
  }
  const auto doc = nlohmann::json::parse(export_report(reports, ExportFormat::kJson));
  EXPECT_EQ(doc["models"][0]["model_id"], "alpha");
  EXPECT_EQ(doc["models"][2]["model_id"], "zeta");
}

TEST(Export, JsonRoundTrip) {
  Rng rng(12);
  std::vector<ModelReport> reports;
  for (int i = 0; i < 4; ++i) reports.push_back(random_report(rng, "m" + std::to_string(i)));
  reports[1].baselines.push_back({baselines::BaselineKind::kEmpiricalMax,
                                  {{"aesthetic_quality", 0.71}},
                                  {{"aesthetic_quality", baselines::Provenance::kRetrievedMax}}});
  const auto js = export_report(reports, "json");
  const auto back = parse_report_json(js);
  ASSERT_EQ(back.size(), reports.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].model_id, reports[i].model_id);
    ASSERT_EQ(back[i].dimension_scores.size(), reports[i].dimension_scores.size());
    for (const auto& [tag, v] : reports[i].dimension_scores) {
      EXPECT_NEAR(back[i].dimension_scores.at(tag), v, 5.1e-7);
    }
    EXPECT_EQ(back[i].category_scores.size(), reports[i].category_scores.size());
  }
  ASSERT_EQ(back[1].baselines.size(), 1u);
  EXPECT_EQ(back[1].baselines[0].provenance.at("aesthetic_quality"), baselines::Provenance::kRetrievedMax);
  EXPECT_EQ(export_report(back, "json"), js);
}

TEST(Export, CsvRoundTripKeepsSkipped) {
  Rng rng(13);
  std::vector<ModelReport> reports{random_report(rng, "a"), random_report(rng, "b")};
  reports[0].skipped = {"color"};
  reports[0].dimension_scores.erase("color");
  reports[0].baselines.push_back({baselines::BaselineKind::kWebvidAvg, {{"imaging_quality", 0.55}}, {}});
  const auto csv = export_report(reports, "csv");
  EXPECT_EQ(csv.rfind("model_id,scope,subject_consistency,", 0), 0u);
  EXPECT_NE(csv.find("skipped"), std::string::npos);
  EXPECT_NE(csv.find("baseline:webvid_avg"), std::string::npos);
  const auto back = parse_report_csv(csv);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_NE(std::find(back[0].skipped.begin(), back[0].skipped.end(), "color"), back[0].skipped.end());
  ASSERT_EQ(back[0].baselines.size(), 1u);
  EXPECT_NEAR(back[0].baselines[0].scores.at("imaging_quality"), 0.55, 1e-12);
  for (const auto& [tag, v] : reports[1].dimension_scores) EXPECT_NEAR(back[1].dimension_scores.at(tag), v, 5.1e-7);
}

TEST(Export, MalformedCsv) {
  EXPECT_CODE(parse_report_csv(""), ErrorCode::kSchemaViolation);
  EXPECT_CODE(parse_report_csv("id,scope\n"), ErrorCode::kSchemaViolation);
  EXPECT_CODE(parse_report_csv("model_id,scope,taste\n"), ErrorCode::kUnknownDimension);
  EXPECT_CODE(parse_report_csv("model_id,scope,color\na,overall\n"), ErrorCode::kSchemaViolation);
  EXPECT_CODE(parse_report_csv("model_id,scope,color\na,overall,abc\n"), ErrorCode::kSchemaViolation);
  EXPECT_CODE(parse_report_csv("model_id,scope,color\na,Robots,50\n"), ErrorCode::kUnknownCategory);
  EXPECT_CODE(parse_report_csv("model_id,scope,color\na,overall,150\n"), ErrorCode::kSchemaViolation);
}

TEST(Export, MalformedJson) {
  EXPECT_CODE(parse_report_json("{"), ErrorCode::kSchemaViolation);
  EXPECT_CODE(parse_report_json("{\"schema\":\"vgrade.report/1\"}"), ErrorCode::kSchemaViolation);
}

TEST(Export, SvgRadarShape) {
  Rng rng(21);
  std::vector<ModelReport> reports;
  for (int i = 0; i < 3; ++i) {
    ModelReport r;
    r.model_id = "m" + std::to_string(i);
    for (Dimension d : all_dimensions()) r.dimension_scores[std::string(tag_of(d))] = rng.uniform();
    reports.push_back(r);
  }
  const auto svg = export_report(reports, ExportFormat::kSvgRadar);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_EQ(count(svg, "class=\"axis\""), 16u);
  EXPECT_EQ(count(svg, "<polygon class=\"model\""), 3u);
  EXPECT_NE(svg.find("data-model=\"m2\""), std::string::npos);
  EXPECT_NE(export_report(reports, ExportFormat::kSvgRadar, RadarMode::kBand00To10), svg);
}

TEST(Export, TextTable) {
  ModelReport r;
  r.model_id = "solo";
  r.dimension_scores["aesthetic_quality"] = 0.3;
  const std::vector<ModelReport> reports{r};
  const auto txt = export_report(reports, ExportFormat::kText);
  EXPECT_NE(txt.find("solo"), std::string::npos);
  EXPECT_NE(txt.find("30.00"), std::string::npos);

  ModelReport zero = r;
  zero.model_id = "zero";
  zero.dimension_scores["aesthetic_quality"] = 0.0;
  const std::vector<ModelReport> two{r, zero};
  EXPECT_NE(export_report(two, ExportFormat::kText).find("0.00"), std::string::npos);
}

TEST(Export, FormatNames) {
  EXPECT_EQ(parse_export_format("json"), ExportFormat::kJson);
  EXPECT_EQ(parse_export_format("csv"), ExportFormat::kCsv);
  EXPECT_EQ(parse_export_format("svg_radar"), ExportFormat::kSvgRadar);
  EXPECT_EQ(parse_export_format("svg"), ExportFormat::kSvgRadar);
  EXPECT_EQ(parse_export_format("text"), ExportFormat::kText);
  EXPECT_FALSE(parse_export_format("xlsx"));
  const std::vector<ModelReport> none;
  EXPECT_CODE(export_report(none, "xlsx"), ErrorCode::kUnsupportedFormat);
}

TEST(Export, CheckReport) {
  ModelReport r;
  r.model_id = "m";
  r.dimension_scores["color"] = 1.5;
  EXPECT_CODE(check_report(r), ErrorCode::kSchemaViolation);
  r.dimension_scores = {{"taste", 0.5}};
  EXPECT_CODE(check_report(r), ErrorCode::kUnknownDimension);
  r.dimension_scores = {{"color", -0.01}};
  EXPECT_CODE(check_report(r), ErrorCode::kSchemaViolation);
  r.dimension_scores = {{"color", 0.5}};
  EXPECT_NO_THROW(check_report(r));
  r.category_scores[{"Robots", "color"}] = 0.5;
  EXPECT_CODE(check_report(r), ErrorCode::kUnknownCategory);
  ModelReport unnamed;
  EXPECT_CODE(check_report(unnamed), ErrorCode::kSchemaViolation);
  const std::vector<ModelReport> bad{r};
  EXPECT_CODE(export_report(bad, ExportFormat::kJson), ErrorCode::kUnknownCategory);
}

TEST(Baselines, JsonRoundTrip) {
  std::vector<baselines::BaselineRow> rows;
  rows.push_back({baselines::BaselineKind::kWebvidAvg, {{"aesthetic_quality", 0.4411}}, {}});
  rows.push_back({baselines::BaselineKind::kEmpiricalMin,
                  {{"temporal_flickering", 0.123456789012}},
                  {{"temporal_flickering", baselines::Provenance::kNoiseClip}}});
  rows.push_back({baselines::BaselineKind::kEmpiricalMax,
                  {{"dynamic_degree", 1.0}},
                  {{"dynamic_degree", baselines::Provenance::kTheoretical}}});
  const auto js = baselines_json(rows);
  EXPECT_EQ(nlohmann::json::parse(js)["schema"], "vgrade.baselines/1");
  const auto back = parse_baselines_json(js);
  ASSERT_EQ(back.size(), 3u);
  EXPECT_EQ(back[0].kind, baselines::BaselineKind::kEmpiricalMax);
  EXPECT_EQ(back[1].kind, baselines::BaselineKind::kEmpiricalMin);
  EXPECT_DOUBLE_EQ(back[1].scores.at("temporal_flickering"), 0.123456789012);
  EXPECT_EQ(back[1].provenance.at("temporal_flickering"), baselines::Provenance::kNoiseClip);
  EXPECT_EQ(baselines_json(back), js);
  EXPECT_CODE(parse_baselines_json("[]"), ErrorCode::kSchemaViolation);
}
