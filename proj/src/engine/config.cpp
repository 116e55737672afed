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

#include "vgrade/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "vgrade/dimensions.hpp"
#include "vgrade/error.hpp"

namespace vgrade::config {
namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kConfigError, "line " + std::to_string(line) + ": " + what);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Drops a trailing '#' comment that is not inside a string.
std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '\\' && quoted) {
      ++i;
    } else if (line[i] == '"') {
      quoted = !quoted;
    } else if (line[i] == '#' && !quoted) {
      return line.substr(0, i);
    }
  }
  return line;
}

Scalar parse_scalar(const std::string& raw, std::size_t line) {
  if (raw.empty()) fail(line, "missing value");
  if (raw.front() == '"') {
    if (raw.size() < 2 || raw.back() != '"') fail(line, "unterminated string");
    std::string out;
    for (std::size_t i = 1; i + 1 < raw.size(); ++i) {
      if (raw[i] == '\\' && i + 2 < raw.size()) {
        const char c = raw[++i];
        out += c == 'n' ? '\n' : c == 't' ? '\t' : c;
      } else {
        out += raw[i];
      }
    }
    return out;
  }
  if (raw == "true") return true;
  if (raw == "false") return false;
  std::int64_t i = 0;
  auto [p, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), i);
  if (ec == std::errc() && p == raw.data() + raw.size()) return i;
  char* end = nullptr;
  const double d = std::strtod(raw.c_str(), &end);
  if (end == raw.c_str() + raw.size() && std::isfinite(d)) return d;
  fail(line, "cannot parse value '" + raw + "'");
}

std::vector<std::string> split_array(const std::string& body, std::size_t line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < body.size(); ++i) {
    const char c = body[i];
    if (c == '"' && (i == 0 || body[i - 1] != '\\')) quoted = !quoted;
    if (c == ',' && !quoted) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) fail(line, "unterminated string in array");
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

const Scalar& scalar_of(const std::string& key, const Value& v) {
  if (const auto* s = std::get_if<Scalar>(&v)) return *s;
  throw Error(ErrorCode::kConfigError, key + " must not be an array");
}

std::string as_string(const std::string& key, const Value& v) {
  if (const auto* s = std::get_if<std::string>(&scalar_of(key, v))) return *s;
  throw Error(ErrorCode::kConfigError, key + " must be a string");
}

double as_double(const std::string& key, const Value& v) {
  const auto& s = scalar_of(key, v);
  if (const auto* d = std::get_if<double>(&s)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&s)) return static_cast<double>(*i);
  throw Error(ErrorCode::kConfigError, key + " must be a number");
}

std::uint64_t as_count(const std::string& key, const Value& v) {
  const auto& s = scalar_of(key, v);
  if (const auto* i = std::get_if<std::int64_t>(&s); i && *i >= 0) return static_cast<std::uint64_t>(*i);
  throw Error(ErrorCode::kConfigError, key + " must be a non-negative integer");
}

std::vector<std::string> as_strings(const std::string& key, const Value& v) {
  if (const auto* s = std::get_if<Scalar>(&v)) return {as_string(key, *s)};
  std::vector<std::string> out;
  for (const auto& item : std::get<std::vector<Scalar>>(v)) {
    const auto* s = std::get_if<std::string>(&item);
    if (!s) throw Error(ErrorCode::kConfigError, key + " must hold strings");
    out.push_back(*s);
  }
  return out;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

std::string number(double v) {
  char buf[64];
  const auto end = std::to_chars(buf, buf + sizeof buf, v).ptr;
  std::string s(buf, end);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

}  // namespace

Document parse_toml(const std::string& text) {
  Document doc;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(line_no, "bad section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) fail(line_no, "empty section name");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(line_no, "empty key");
    const std::string full = section.empty() ? key : section + "." + key;
    if (doc.contains(full)) fail(line_no, "duplicate key " + full);
    if (!value.empty() && value.front() == '[') {
      if (value.back() != ']') fail(line_no, "arrays must fit on one line");
      std::vector<Scalar> items;
      for (const auto& item : split_array(value.substr(1, value.size() - 2), line_no)) {
        items.push_back(parse_scalar(item, line_no));
      }
      doc[full] = std::move(items);
    } else {
      doc[full] = parse_scalar(value, line_no);
    }
  }
  return doc;
}

Document load_toml(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kConfigError, "cannot open config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_toml(buf.str());
}

std::uint64_t default_workers() {
  const char* env = std::getenv("VGRADE_WORKERS");
  if (!env || !*env) return 1;
  std::uint64_t n = 0;
  const std::string_view s(env);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || p != s.data() + s.size() || n == 0) {
    throw Error(ErrorCode::kConfigError, "VGRADE_WORKERS must be a positive integer, got '" +
                                             std::string(s) + "'");
  }
  return n;
}

void apply(const Document& doc, RunConfig& cfg) {
  for (const auto& [key, value] : doc) {
    if (key == "run.suites") cfg.suite_paths = as_strings(key, value);
    else if (key == "run.bundles") cfg.bundle_root = as_string(key, value);
    else if (key == "run.dims") cfg.dimensions = as_strings(key, value);
    else if (key == "run.workers") cfg.workers = as_count(key, value);
    else if (key == "run.out") cfg.out_dir = as_string(key, value);
    else if (key == "run.baselines") cfg.baselines_path = as_string(key, value);
    else if (key == "quality.tau_dynamic") cfg.tau_dynamic = as_double(key, value);
    else if (key == "quality.tau_static") cfg.tau_static = as_double(key, value);
    else if (key == "semantics.tau_iou") cfg.tau_iou = as_double(key, value);
    else if (key == "semantics.color_vocabulary_path") cfg.color_vocabulary_path = as_string(key, value);
    else if (key == "baselines.repetitions") cfg.repetitions = as_count(key, value);
    else if (key == "baselines.noise_seed") cfg.noise_seed = as_count(key, value);
    else throw Error(ErrorCode::kConfigError, "unknown config key " + key);
  }
}

void check(const RunConfig& cfg) {
  for (const auto& d : cfg.dimensions) require_dimension(d);
  if (cfg.workers < 1) throw Error(ErrorCode::kConfigError, "workers must be >= 1");
  if (!(cfg.tau_dynamic >= 0.0) || !std::isfinite(cfg.tau_dynamic)) {
    throw Error(ErrorCode::kConfigError, "quality.tau_dynamic must be >= 0");
  }
  if (cfg.tau_static && (!(*cfg.tau_static >= 0.0) || !std::isfinite(*cfg.tau_static))) {
    throw Error(ErrorCode::kConfigError, "quality.tau_static must be >= 0");
  }
  if (!(cfg.tau_iou > 0.0 && cfg.tau_iou <= 1.0)) {
    throw Error(ErrorCode::kConfigError, "semantics.tau_iou must be in (0, 1]");
  }
  if (cfg.repetitions < 1) throw Error(ErrorCode::kConfigError, "baselines.repetitions must be >= 1");
}

std::string snapshot(const RunConfig& cfg, bool reproducible_only) {
  std::ostringstream out;
  auto list = [](const std::vector<std::string>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + quote(xs[i]);
    return s + "]";
  };
  out << "[run]\n"
      << "suites = " << list(cfg.suite_paths) << "\n"
      << "bundles = " << quote(cfg.bundle_root) << "\n"
      << "dims = " << list(cfg.dimensions) << "\n";
  if (cfg.baselines_path) out << "baselines = " << quote(*cfg.baselines_path) << "\n";
  if (!reproducible_only) {
    out << "workers = " << cfg.workers << "\n"
        << "out = " << quote(cfg.out_dir) << "\n";
  }
  out << "\n[quality]\n"
      << "tau_dynamic = " << number(cfg.tau_dynamic) << "\n"
      << "tau_static = " << number(cfg.effective_tau_static()) << "\n"
      << "\n[semantics]\n"
      << "tau_iou = " << number(cfg.tau_iou) << "\n";
  if (cfg.color_vocabulary_path) {
    out << "color_vocabulary_path = " << quote(*cfg.color_vocabulary_path) << "\n";
  }
  out << "\n[baselines]\n"
      << "repetitions = " << cfg.repetitions << "\n"
      << "noise_seed = " << cfg.noise_seed << "\n";
  return out.str();
}

}  // namespace vgrade::config
