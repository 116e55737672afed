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

#include "vgrade/suite.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "vgrade/core.hpp"
#include "vgrade/error.hpp"

namespace vgrade::suite {
namespace {

using nlohmann::json;

[[noreturn]] void schema(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kSchemaViolation, "suite line " + std::to_string(line) + ": " + what);
}

std::string label_string(const json& j, std::size_t line, const char* key) {
  if (!j.is_string() || canonical_label(j.get<std::string>()).empty()) {
    schema(line, std::string(key) + " must be a non-empty string");
  }
  return canonical_label(j.get<std::string>());
}

std::vector<std::string> label_list(const json& j, std::size_t line, const char* key) {
  if (!j.is_array()) schema(line, std::string(key) + " must be a list of strings");
  std::vector<std::string> out;
  for (const auto& item : j) out.push_back(label_string(item, line, key));
  return out;
}

Labels parse_labels(const json& j, std::size_t line) {
  Labels labels;
  if (!j.is_object()) schema(line, "labels must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "object") {
      labels.object = label_string(value, line, "object");
    } else if (key == "objects") {
      labels.objects = label_list(value, line, "objects");
    } else if (key == "color") {
      labels.color = label_string(value, line, "color");
    } else if (key == "relation") {
      if (!value.is_object() || !value.contains("a") || !value.contains("b") ||
          !value.contains("kind")) {
        schema(line, "relation must be {a, b, kind}");
      }
      RelationLabel rel;
      rel.a = label_string(value["a"], line, "relation.a");
      rel.b = label_string(value["b"], line, "relation.b");
      const auto kind = parse_relation_kind(label_string(value["kind"], line, "relation.kind"));
      if (!kind) schema(line, "relation.kind must be left_of, right_of, above or below");
      if (rel.a == rel.b) schema(line, "relation objects must differ");
      rel.kind = *kind;
      labels.relation = rel;
    } else if (key == "scene_words") {
      labels.scene_words = label_list(value, line, "scene_words");
    } else if (key == "style_text") {
      if (!value.is_string() || value.get<std::string>().empty()) {
        schema(line, "style_text must be a non-empty string");
      }
      labels.style_text = value.get<std::string>();
    } else if (key == "action") {
      labels.action = label_string(value, line, "action");
    } else {
      schema(line, "unknown label \"" + key + "\"");
    }
  }
  return labels;
}

json labels_to_json(const Labels& l) {
  json j = json::object();
  if (l.object) j["object"] = *l.object;
  if (l.objects) j["objects"] = *l.objects;
  if (l.color) j["color"] = *l.color;
  if (l.relation) {
    j["relation"] = {{"a", l.relation->a},
                     {"b", l.relation->b},
                     {"kind", relation_kind_name(l.relation->kind)}};
  }
  if (l.scene_words) j["scene_words"] = *l.scene_words;
  if (l.style_text) j["style_text"] = *l.style_text;
  if (l.action) j["action"] = *l.action;
  return j;
}

}  // namespace

std::string_view relation_kind_name(RelationKind kind) {
  switch (kind) {
    case RelationKind::kLeftOf: return "left_of";
    case RelationKind::kRightOf: return "right_of";
    case RelationKind::kAbove: return "above";
    case RelationKind::kBelow: return "below";
  }
  return "left_of";
}

std::optional<RelationKind> parse_relation_kind(std::string_view name) {
  if (name == "left_of") return RelationKind::kLeftOf;
  if (name == "right_of") return RelationKind::kRightOf;
  if (name == "above") return RelationKind::kAbove;
  if (name == "below") return RelationKind::kBelow;
  return std::nullopt;
}

bool Labels::has(std::string_view key) const {
  if (key == "object") return object.has_value();
  if (key == "objects") return objects.has_value() && objects->size() >= 2;
  if (key == "color") return color.has_value();
  if (key == "relation") return relation.has_value();
  if (key == "scene_words") return scene_words.has_value() && !scene_words->empty();
  if (key == "style_text") return style_text.has_value();
  if (key == "action") return action.has_value();
  return false;
}

void check_labels(const PromptRecord& record) {
  for (const auto key : info(record.dimension).required_labels) {
    if (!record.labels.has(key)) {
      throw Error(ErrorCode::kMissingLabel, record.prompt_id + ": " +
                                                std::string(tag_of(record.dimension)) +
                                                " requires label \"" + std::string(key) + "\"");
    }
  }
}

std::vector<PromptRecord> parse_suite(const std::string& jsonl) {
  std::vector<PromptRecord> records;
  std::set<std::string> ids;
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
    if (!doc.is_object()) schema(line_no, "record must be an object");
    PromptRecord rec;
    if (!doc.contains("prompt_id") || !doc["prompt_id"].is_string() ||
        doc["prompt_id"].get<std::string>().empty()) {
      schema(line_no, "prompt_id must be a non-empty string");
    }
    rec.prompt_id = doc["prompt_id"].get<std::string>();
    if (doc.contains("text")) {
      if (!doc["text"].is_string()) schema(line_no, "text must be a string");
      rec.text = doc["text"].get<std::string>();
    }
    if (!doc.contains("dimension") || !doc["dimension"].is_string()) {
      schema(line_no, "dimension must be a string");
    }
    const auto tag = doc["dimension"].get<std::string>();
    const auto dim = parse_dimension(tag);
    if (!dim) {
      throw Error(ErrorCode::kUnknownDimension, "suite line " + std::to_string(line_no) + ": " + tag);
    }
    rec.dimension = *dim;
    if (doc.contains("labels")) rec.labels = parse_labels(doc["labels"], line_no);
    if (doc.contains("category") && !doc["category"].is_null()) {
      if (!doc["category"].is_string()) schema(line_no, "category must be a string");
      const auto cat = doc["category"].get<std::string>();
      if (!is_category(cat)) {
        throw Error(ErrorCode::kUnknownCategory, "suite line " + std::to_string(line_no) + ": " + cat);
      }
      rec.category = cat;
    }
    check_labels(rec);
    if (!ids.insert(rec.prompt_id).second) {
      throw Error(ErrorCode::kDuplicatePromptId, rec.prompt_id);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<PromptRecord> load_suite(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_suite(buf.str());
}

std::string serialize_suite(const std::vector<PromptRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    json j;
    j["prompt_id"] = r.prompt_id;
    j["text"] = r.text;
    j["dimension"] = tag_of(r.dimension);
    j["labels"] = labels_to_json(r.labels);
    if (r.category) j["category"] = *r.category;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::map<std::string, std::vector<PromptRecord>> category_partition(
    const std::vector<PromptRecord>& records) {
  std::map<std::string, std::vector<PromptRecord>> buckets;
  for (const auto& r : records) {
    if (!r.category) throw Error(ErrorCode::kMissingCategory, r.prompt_id);
    buckets[*r.category].push_back(r);
  }
  return buckets;
}

}  // namespace vgrade::suite
