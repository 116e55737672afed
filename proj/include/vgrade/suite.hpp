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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vgrade/dimensions.hpp"

namespace vgrade::suite {

enum class RelationKind { kLeftOf, kRightOf, kAbove, kBelow };

std::string_view relation_kind_name(RelationKind kind);
std::optional<RelationKind> parse_relation_kind(std::string_view name);

struct RelationLabel {
  std::string a;
  std::string b;
  RelationKind kind = RelationKind::kLeftOf;

  bool operator==(const RelationLabel&) const = default;
};

// Semantic labels attached to a prompt; which ones are present depends on
// the dimension the prompt tests.
struct Labels {
  std::optional<std::string> object;
  std::optional<std::vector<std::string>> objects;
  std::optional<std::string> color;
  std::optional<RelationLabel> relation;
  std::optional<std::vector<std::string>> scene_words;
  std::optional<std::string> style_text;
  std::optional<std::string> action;

  bool has(std::string_view key) const;
  bool operator==(const Labels&) const = default;
};

struct PromptRecord {
  std::string prompt_id;
  std::string text;
  Dimension dimension = Dimension::kSubjectConsistency;
  Labels labels;
  std::optional<std::string> category;

  bool operator==(const PromptRecord&) const = default;
};

// One JSON object per line; blank lines are skipped.
std::vector<PromptRecord> parse_suite(const std::string& jsonl);
std::vector<PromptRecord> load_suite(const std::filesystem::path& path);
std::string serialize_suite(const std::vector<PromptRecord>& records);

// Throws MissingLabel when a label required by the record's dimension is absent.
void check_labels(const PromptRecord& record);

std::map<std::string, std::vector<PromptRecord>> category_partition(
    const std::vector<PromptRecord>& records);

}  // namespace vgrade::suite
