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

#include "vgrade/reporting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"
#include "vgrade/error.hpp"

namespace vgrade::reporting {
namespace {

using nlohmann::json;

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s = buf;
  if (s == "-0.00" || s == "-0.0000" || s == "-0.000") s.erase(0, 1);
  return s;
}

std::vector<const ModelReport*> sorted(std::span<const ModelReport> reports) {
  std::vector<const ModelReport*> out;
  for (const auto& r : reports) out.push_back(&r);
  std::stable_sort(out.begin(), out.end(),
                   [](const ModelReport* a, const ModelReport* b) { return a->model_id < b->model_id; });
  return out;
}

std::size_t category_rank(const std::string& name) {
  const auto it = std::find(kCategories.begin(), kCategories.end(), name);
  return static_cast<std::size_t>(it - kCategories.begin());
}

std::size_t dimension_rank(const std::string& tag) {
  const auto d = parse_dimension(tag);
  return d ? static_cast<std::size_t>(*d) : kDimensionCount;
}

std::optional<baselines::BaselineKind> parse_baseline_kind(std::string_view name) {
  for (auto k : {baselines::BaselineKind::kEmpiricalMax, baselines::BaselineKind::kEmpiricalMin,
                 baselines::BaselineKind::kWebvidAvg}) {
    if (baselines::baseline_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

std::optional<baselines::Provenance> parse_provenance(std::string_view name) {
  using baselines::Provenance;
  for (auto p : {Provenance::kRetrievedMax, Provenance::kRetrievedAvg, Provenance::kTheoretical,
                 Provenance::kNoiseClip, Provenance::kComposedVideo}) {
    if (baselines::provenance_name(p) == name) return p;
  }
  return std::nullopt;
}

json percent_map(const std::map<std::string, double>& scores) {
  json out = json::object();
  for (const auto& [k, v] : scores) out[k] = to_percent4(v);
  return out;
}

std::map<std::string, double> from_percent_map(const json& j, const char* what) {
  if (!j.is_object()) throw Error(ErrorCode::kSchemaViolation, std::string(what) + " must be an object");
  std::map<std::string, double> out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number()) throw Error(ErrorCode::kSchemaViolation, std::string(what) + "." + k + " must be a number");
    out[k] = v.get<double>() / 100.0;
  }
  return out;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

std::string export_json(const std::vector<const ModelReport*>& models) {
  json doc;
  doc["schema"] = "vgrade.report/1";
  doc["units"] = "percent";
  doc["models"] = json::array();
  for (const auto* m : models) {
    json jm;
    jm["model_id"] = m->model_id;
    jm["dimensions"] = percent_map(m->dimension_scores);
    std::vector<std::string> skipped = m->skipped;
    std::sort(skipped.begin(), skipped.end(),
              [](const auto& a, const auto& b) { return dimension_rank(a) < dimension_rank(b); });
    jm["skipped"] = skipped;
    json cats = json::object();
    for (const auto& [key, v] : m->category_scores) cats[key.first][key.second] = to_percent4(v);
    jm["categories"] = cats;
    jm["baselines"] = json::array();
    for (const auto& row : m->baselines) {
      json jr;
      jr["kind"] = baselines::baseline_kind_name(row.kind);
      jr["scores"] = percent_map(row.scores);
      json prov = json::object();
      for (const auto& [k, p] : row.provenance) prov[k] = baselines::provenance_name(p);
      jr["provenance"] = prov;
      jm["baselines"].push_back(jr);
    }
    jm["metadata"] = m->metadata;
    doc["models"].push_back(jm);
  }
  return doc.dump(2) + "\n";
}

std::string export_csv(const std::vector<const ModelReport*>& models) {
  std::ostringstream out;
  out << "model_id,scope";
  for (Dimension d : all_dimensions()) out << ',' << tag_of(d);
  out << '\n';
  auto row = [&](const std::string& model, const std::string& scope,
                 const std::map<std::string, double>& scores, const std::vector<std::string>& skipped) {
    out << csv_field(model) << ',' << csv_field(scope);
    for (Dimension d : all_dimensions()) {
      const std::string tag(tag_of(d));
      out << ',';
      if (const auto it = scores.find(tag); it != scores.end()) {
        out << fixed(to_percent4(it->second), 4);
      } else if (std::find(skipped.begin(), skipped.end(), tag) != skipped.end()) {
        out << "skipped";
      }
    }
    out << '\n';
  };
  for (const auto* m : models) {
    row(m->model_id, "overall", m->dimension_scores, m->skipped);
    std::map<std::size_t, std::map<std::string, double>> by_category;
    for (const auto& [key, v] : m->category_scores) by_category[category_rank(key.first)][key.second] = v;
    for (const auto& [rank, scores] : by_category) {
      row(m->model_id, std::string(kCategories[rank]), scores, {});
    }
    for (const auto& b : m->baselines) {
      row(m->model_id, "baseline:" + std::string(baselines::baseline_kind_name(b.kind)), b.scores, {});
    }
  }
  return out.str();
}

std::vector<std::string> axes_of(const std::vector<const ModelReport*>& models) {
  std::set<std::size_t> present;
  for (const auto* m : models) {
    for (const auto& [tag, v] : m->dimension_scores) present.insert(dimension_rank(tag));
  }
  std::vector<std::string> out;
  for (std::size_t r : present) {
    if (r < kDimensionCount) out.emplace_back(tag_of(all_dimensions()[r]));
  }
  return out;
}

std::string export_svg(const std::vector<const ModelReport*>& models, RadarMode mode) {
  static constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                             "#9467bd", "#8c564b", "#e377c2", "#17becf"};
  constexpr double kCx = 360.0, kCy = 340.0, kRadius = 240.0;
  const auto axes = axes_of(models);
  // Per-axis normalized values, one map per model.
  std::map<std::string, std::map<std::string, double>> radial;
  for (const auto& tag : axes) {
    std::map<std::string, double> values;
    for (const auto* m : models) {
      if (auto it = m->dimension_scores.find(tag); it != m->dimension_scores.end()) {
        values[m->model_id] = it->second;
      }
    }
    radial[tag] = values.size() >= 2 ? radar_normalize(values, mode) : values;
  }
  const std::size_t n = axes.size();
  auto point = [&](std::size_t i, double r) {
    const double angle = -std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * static_cast<double>(i) /
                                                       static_cast<double>(std::max<std::size_t>(n, 1));
    return std::make_pair(kCx + kRadius * r * std::cos(angle), kCy + kRadius * r * std::sin(angle));
  };
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\""
      << 700 + 20 * models.size() << "\" viewBox=\"0 0 720 " << 700 + 20 * models.size()
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int ring = 1; ring <= 5; ++ring) {
    out << "<circle class=\"ring\" cx=\"" << fixed(kCx, 2) << "\" cy=\"" << fixed(kCy, 2) << "\" r=\""
        << fixed(kRadius * ring / 5.0, 2) << "\" fill=\"none\" stroke=\"#dddddd\"/>\n";
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto [x, y] = point(i, 1.0);
    const auto [lx, ly] = point(i, 1.08);
    const auto anchor = lx < kCx - 1.0 ? "end" : (lx > kCx + 1.0 ? "start" : "middle");
    out << "<line class=\"axis\" x1=\"" << fixed(kCx, 2) << "\" y1=\"" << fixed(kCy, 2) << "\" x2=\""
        << fixed(x, 2) << "\" y2=\"" << fixed(y, 2) << "\" stroke=\"#999999\"/>\n"
        << "<text class=\"axis-label\" x=\"" << fixed(lx, 2) << "\" y=\"" << fixed(ly, 2)
        << "\" text-anchor=\"" << anchor << "\">"
        << xml_escape(info(require_dimension(axes[i])).display_name) << "</text>\n";
  }
  for (std::size_t m = 0; m < models.size(); ++m) {
    const auto* model = models[m];
    const char* color = kPalette[m % std::size(kPalette)];
    out << "<polygon class=\"model\" data-model=\"" << xml_escape(model->model_id) << "\" points=\"";
    for (std::size_t i = 0; i < n; ++i) {
      const auto& values = radial[axes[i]];
      const auto it = values.find(model->model_id);
      const auto [x, y] = point(i, it == values.end() ? 0.0 : std::clamp(it->second, 0.0, 1.0));
      out << (i ? " " : "") << fixed(x, 2) << ',' << fixed(y, 2);
    }
    out << "\" fill=\"" << color << "\" fill-opacity=\"0.15\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
  }
  for (std::size_t m = 0; m < models.size(); ++m) {
    const double y = 660.0 + 20.0 * static_cast<double>(m);
    out << "<rect x=\"40\" y=\"" << fixed(y - 10.0, 2) << "\" width=\"12\" height=\"12\" fill=\""
        << kPalette[m % std::size(kPalette)] << "\"/>\n"
        << "<text x=\"58\" y=\"" << fixed(y, 2) << "\">" << xml_escape(models[m]->model_id)
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string export_text(const std::vector<const ModelReport*>& models) {
  std::vector<Dimension> dims;
  for (Dimension d : all_dimensions()) {
    const std::string tag(tag_of(d));
    const bool any = std::any_of(models.begin(), models.end(), [&](const ModelReport* m) {
      return m->dimension_scores.contains(tag);
    });
    if (any) dims.push_back(d);
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"Model"};
  for (Dimension d : dims) header.emplace_back(info(d).display_name);
  rows.push_back(header);
  auto add = [&](const std::string& name, const std::map<std::string, double>& scores) {
    std::vector<std::string> r = {name};
    for (Dimension d : dims) {
      const auto it = scores.find(std::string(tag_of(d)));
      r.push_back(it == scores.end() ? "-" : fixed(100.0 * it->second, 2));
    }
    rows.push_back(std::move(r));
  };
  std::map<std::string, const baselines::BaselineRow*> baseline_rows;
  for (const auto* m : models) {
    for (const auto& b : m->baselines) {
      baseline_rows.emplace(std::string(baselines::baseline_kind_name(b.kind)), &b);
    }
  }
  for (const auto& [name, row] : baseline_rows) add(name, row->scores);
  for (const auto* m : models) add(m->model_id, m->dimension_scores);

  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream out;
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) out << "  ";
      const std::size_t pad = width[c] - r[c].size();
      if (c == 0) out << r[c] << std::string(pad, ' ');
      else out << std::string(pad, ' ') << r[c];
    }
    out << '\n';
  }
  for (const auto* m : models) {
    if (m->category_scores.empty()) continue;
    const auto table = per_category_table(m->category_scores);
    out << '\n' << m->model_id << " by category\n";
    std::vector<std::vector<std::string>> crow = {{"Category"}};
    for (const auto& tag : table.dimensions) {
      crow[0].emplace_back(info(require_dimension(tag)).display_name);
    }
    for (std::size_t i = 0; i < table.categories.size(); ++i) {
      std::vector<std::string> r = {table.categories[i]};
      for (const auto& cell : table.cells[i]) r.push_back(cell ? fixed(100.0 * *cell, 2) : "-");
      crow.push_back(std::move(r));
    }
    std::vector<std::size_t> w(crow[0].size(), 0);
    for (const auto& r : crow) {
      for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], r[c].size());
    }
    for (const auto& r : crow) {
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (c) out << "  ";
        const std::size_t pad = w[c] - r[c].size();
        if (c == 0) out << r[c] << std::string(pad, ' ');
        else out << std::string(pad, ' ') << r[c];
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace

std::string_view radar_mode_name(RadarMode mode) {
  return mode == RadarMode::kBand03To08 ? "band_03_08" : "band_00_10";
}

std::optional<RadarMode> parse_radar_mode(std::string_view name) {
  if (name == "band_03_08") return RadarMode::kBand03To08;
  if (name == "band_00_10") return RadarMode::kBand00To10;
  return std::nullopt;
}

std::map<std::string, double> radar_normalize(const std::map<std::string, double>& values,
                                              RadarMode mode) {
  if (values.size() < 2) throw Error(ErrorCode::kTooFewModels, "radar normalization needs >= 2 models");
  const double lo = mode == RadarMode::kBand03To08 ? 0.3 : 0.0;
  const double hi = mode == RadarMode::kBand03To08 ? 0.8 : 1.0;
  double vmin = values.begin()->second;
  double vmax = vmin;
  for (const auto& [m, v] : values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kNonFiniteValue, "radar input for " + m);
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
  }
  std::map<std::string, double> out;
  for (const auto& [m, v] : values) {
    out[m] = vmax == vmin ? hi : lo + (hi - lo) * (v - vmin) / (vmax - vmin);
  }
  return out;
}

std::optional<double> CategoryTable::at(const std::string& category,
                                        const std::string& dimension) const {
  const auto r = std::find(categories.begin(), categories.end(), category);
  const auto c = std::find(dimensions.begin(), dimensions.end(), dimension);
  if (r == categories.end() || c == dimensions.end()) return std::nullopt;
  return cells[static_cast<std::size_t>(r - categories.begin())]
              [static_cast<std::size_t>(c - dimensions.begin())];
}

CategoryTable per_category_table(const std::map<CategoryKey, double>& scores) {
  std::set<std::size_t> rows;
  std::set<std::size_t> cols;
  for (const auto& [key, v] : scores) {
    if (!is_category(key.first)) throw Error(ErrorCode::kUnknownCategory, key.first);
    cols.insert(static_cast<std::size_t>(require_dimension(key.second)));
    rows.insert(category_rank(key.first));
  }
  CategoryTable table;
  for (std::size_t r : rows) table.categories.emplace_back(kCategories[r]);
  for (std::size_t c : cols) table.dimensions.emplace_back(tag_of(all_dimensions()[c]));
  table.cells.assign(table.categories.size(),
                     std::vector<std::optional<double>>(table.dimensions.size()));
  for (const auto& [key, v] : scores) {
    const auto r = std::find(table.categories.begin(), table.categories.end(), key.first);
    const auto c = std::find(table.dimensions.begin(), table.dimensions.end(), key.second);
    table.cells[static_cast<std::size_t>(r - table.categories.begin())]
               [static_cast<std::size_t>(c - table.dimensions.begin())] = v;
  }
  return table;
}

void check_report(const ModelReport& report) {
  auto check = [&](const std::string& tag, double v) {
    if (!parse_dimension(tag)) throw Error(ErrorCode::kUnknownDimension, tag);
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::kSchemaViolation,
                  report.model_id + " " + tag + " score " + std::to_string(v) + " outside [0,1]");
    }
  };
  if (report.model_id.empty()) throw Error(ErrorCode::kSchemaViolation, "empty model_id");
  for (const auto& [tag, v] : report.dimension_scores) check(tag, v);
  for (const auto& tag : report.skipped) require_dimension(tag);
  for (const auto& [key, v] : report.category_scores) {
    if (!is_category(key.first)) throw Error(ErrorCode::kUnknownCategory, key.first);
    check(key.second, v);
  }
}

std::optional<ExportFormat> parse_export_format(std::string_view name) {
  if (name == "json") return ExportFormat::kJson;
  if (name == "csv") return ExportFormat::kCsv;
  if (name == "svg_radar" || name == "svg") return ExportFormat::kSvgRadar;
  if (name == "text") return ExportFormat::kText;
  return std::nullopt;
}

double to_percent4(double score) { return std::round(score * 1e6) / 1e4; }

std::string export_report(std::span<const ModelReport> reports, ExportFormat format,
                          RadarMode radar_mode) {
  for (const auto& r : reports) check_report(r);
  const auto models = sorted(reports);
  switch (format) {
    case ExportFormat::kJson: return export_json(models);
    case ExportFormat::kCsv: return export_csv(models);
    case ExportFormat::kSvgRadar: return export_svg(models, radar_mode);
    case ExportFormat::kText: return export_text(models);
  }
  throw Error(ErrorCode::kUnsupportedFormat, "unknown export format");
}

std::string export_report(std::span<const ModelReport> reports, std::string_view format,
                          RadarMode radar_mode) {
  const auto f = parse_export_format(format);
  if (!f) throw Error(ErrorCode::kUnsupportedFormat, std::string(format));
  return export_report(reports, *f, radar_mode);
}

std::vector<ModelReport> parse_report_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSchemaViolation, e.what());
  }
  if (!doc.is_object() || !doc.contains("models") || !doc["models"].is_array()) {
    throw Error(ErrorCode::kSchemaViolation, "report needs a models array");
  }
  std::vector<ModelReport> out;
  try {
    for (const auto& jm : doc["models"]) {
      ModelReport m;
      m.model_id = jm.at("model_id").get<std::string>();
      m.dimension_scores = from_percent_map(jm.at("dimensions"), "dimensions");
      if (jm.contains("skipped")) m.skipped = jm["skipped"].get<std::vector<std::string>>();
      if (jm.contains("categories")) {
        for (const auto& [cat, dims] : jm["categories"].items()) {
          for (const auto& [tag, v] : from_percent_map(dims, "categories")) m.category_scores[{cat, tag}] = v;
        }
      }
      if (jm.contains("baselines")) {
        for (const auto& jr : jm["baselines"]) {
          baselines::BaselineRow row;
          const auto kind = parse_baseline_kind(jr.at("kind").get<std::string>());
          if (!kind) throw Error(ErrorCode::kSchemaViolation, "unknown baseline kind");
          row.kind = *kind;
          row.scores = from_percent_map(jr.at("scores"), "scores");
          if (jr.contains("provenance")) {
            for (const auto& [tag, p] : jr["provenance"].items()) {
              const auto prov = parse_provenance(p.get<std::string>());
              if (!prov) throw Error(ErrorCode::kSchemaViolation, "unknown provenance");
              row.provenance[tag] = *prov;
            }
          }
          m.baselines.push_back(std::move(row));
        }
      }
      if (jm.contains("metadata")) m.metadata = jm["metadata"].get<std::map<std::string, std::string>>();
      check_report(m);
      out.push_back(std::move(m));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kSchemaViolation, e.what());
  }
  return out;
}

std::vector<ModelReport> parse_report_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::kSchemaViolation, "empty csv");
  const auto header = split_csv_line(line);
  if (header.size() < 2 || header[0] != "model_id" || header[1] != "scope") {
    throw Error(ErrorCode::kSchemaViolation, "csv header must start with model_id,scope");
  }
  for (std::size_t c = 2; c < header.size(); ++c) require_dimension(header[c]);
  std::vector<ModelReport> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != header.size()) throw Error(ErrorCode::kSchemaViolation, "ragged csv row");
    if (out.empty() || out.back().model_id != cells[0]) {
      out.emplace_back();
      out.back().model_id = cells[0];
    }
    auto& m = out.back();
    const std::string& scope = cells[1];
    baselines::BaselineRow* baseline = nullptr;
    if (scope.rfind("baseline:", 0) == 0) {
      const auto kind = parse_baseline_kind(scope.substr(9));
      if (!kind) throw Error(ErrorCode::kSchemaViolation, "unknown baseline scope " + scope);
      m.baselines.push_back({*kind, {}, {}});
      baseline = &m.baselines.back();
    } else if (scope != "overall" && !is_category(scope)) {
      throw Error(ErrorCode::kUnknownCategory, scope);
    }
    for (std::size_t c = 2; c < cells.size(); ++c) {
      if (cells[c].empty()) continue;
      if (cells[c] == "skipped") {
        m.skipped.push_back(header[c]);
        continue;
      }
      double v = 0.0;
      try {
        std::size_t used = 0;
        v = std::stod(cells[c], &used) / 100.0;
        if (used != cells[c].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw Error(ErrorCode::kSchemaViolation, "bad csv cell " + cells[c]);
      }
      if (baseline) baseline->scores[header[c]] = v;
      else if (scope == "overall") m.dimension_scores[header[c]] = v;
      else m.category_scores[{scope, header[c]}] = v;
    }
  }
  for (const auto& m : out) check_report(m);
  return out;
}

std::string baselines_json(std::span<const baselines::BaselineRow> rows) {
  std::vector<const baselines::BaselineRow*> order;
  for (const auto& r : rows) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) { return a->kind < b->kind; });
  json doc;
  doc["schema"] = "vgrade.baselines/1";
  doc["rows"] = json::array();
  for (const auto* r : order) {
    json jr;
    jr["kind"] = baselines::baseline_kind_name(r->kind);
    jr["scores"] = r->scores;
    json prov = json::object();
    for (const auto& [k, p] : r->provenance) prov[k] = baselines::provenance_name(p);
    jr["provenance"] = prov;
    doc["rows"].push_back(std::move(jr));
  }
  return doc.dump(2) + "\n";
}

std::vector<baselines::BaselineRow> parse_baselines_json(const std::string& text) {
  std::vector<baselines::BaselineRow> out;
  try {
    const auto doc = json::parse(text);
    for (const auto& jr : doc.at("rows")) {
      baselines::BaselineRow row;
      const auto kind = parse_baseline_kind(jr.at("kind").get<std::string>());
      if (!kind) throw Error(ErrorCode::kSchemaViolation, "unknown baseline kind");
      row.kind = *kind;
      for (const auto& [tag, v] : jr.at("scores").items()) {
        require_dimension(tag);
        const double x = v.get<double>();
        if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorCode::kOutOfRange, "baseline " + tag + " outside [0,1]");
        row.scores[tag] = x;
      }
      if (jr.contains("provenance")) {
        for (const auto& [tag, p] : jr["provenance"].items()) {
          const auto prov = parse_provenance(p.get<std::string>());
          if (!prov) throw Error(ErrorCode::kSchemaViolation, "unknown provenance");
          row.provenance[tag] = *prov;
        }
      }
      out.push_back(std::move(row));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kSchemaViolation, std::string("baselines: ") + e.what());
  }
  return out;
}

}  // namespace vgrade::reporting
