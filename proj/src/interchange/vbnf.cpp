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

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>

#include "vgrade/error.hpp"
#include "vgrade/interchange.hpp"

namespace vgrade::interchange {
namespace {

std::uint32_t read_u32_le(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void put_u32_le(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xff));
}

std::vector<std::uint8_t> read_all(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_all(const fs::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIoError, "short write to " + path.string());
}

float checked_float(double v) {
  const auto f = static_cast<float>(v);
  if (!std::isfinite(f)) throw Error(ErrorCode::kNonFiniteValue, "value overflows float32");
  return f;
}

}  // namespace

RawMatrix decode_vbnf(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kVbnfMagic, 4) != 0) {
    throw Error(ErrorCode::kBadMagic, "expected VBNF magic");
  }
  if (bytes.size() < kVbnfHeaderBytes) {
    throw Error(ErrorCode::kTruncatedPayload, "header shorter than 16 bytes");
  }
  const std::uint32_t version = read_u32_le(bytes.data() + 4);
  if (version != kVbnfVersion) {
    throw Error(ErrorCode::kVersionUnsupported, "version " + std::to_string(version));
  }
  RawMatrix m;
  m.rows = read_u32_le(bytes.data() + 8);
  m.cols = read_u32_le(bytes.data() + 12);
  const std::uint64_t count = std::uint64_t{m.rows} * m.cols;
  const std::uint64_t expected = kVbnfHeaderBytes + 4 * count;
  if (bytes.size() < expected) {
    throw Error(ErrorCode::kTruncatedPayload,
                "expected " + std::to_string(expected) + " bytes, got " +
                    std::to_string(bytes.size()));
  }
  if (bytes.size() > expected) {
    throw Error(ErrorCode::kSchemaViolation,
                std::to_string(bytes.size() - expected) + " trailing bytes");
  }
  m.values.resize(count);
  const std::uint8_t* p = bytes.data() + kVbnfHeaderBytes;
  for (std::uint64_t i = 0; i < count; ++i, p += 4) {
    m.values[i] = std::bit_cast<float>(read_u32_le(p));
  }
  return m;
}

std::vector<std::uint8_t> encode_vbnf(const RawMatrix& m) {
  if (m.values.size() != std::size_t{m.rows} * m.cols) {
    throw Error(ErrorCode::kShapeMismatch, "payload does not match T x D");
  }
  std::vector<std::uint8_t> out;
  out.reserve(kVbnfHeaderBytes + 4 * m.values.size());
  out.insert(out.end(), kVbnfMagic, kVbnfMagic + 4);
  put_u32_le(out, kVbnfVersion);
  put_u32_le(out, m.rows);
  put_u32_le(out, m.cols);
  for (float v : m.values) put_u32_le(out, std::bit_cast<std::uint32_t>(v));
  return out;
}

RawMatrix read_vbnf(const fs::path& path) { return decode_vbnf(read_all(path)); }

void write_vbnf(const fs::path& path, const RawMatrix& matrix) {
  write_all(path, encode_vbnf(matrix));
}

FeatureTrack load_feature_file(const fs::path& path, FeatureKind kind,
                               const std::string& video_id) {
  const RawMatrix m = read_vbnf(path);
  std::vector<double> values(m.values.begin(), m.values.end());
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kNonFiniteValue, "non-finite value in " + path.string());
    }
  }
  return FeatureTrack(video_id, kind, m.rows, m.cols, std::move(values));
}

void write_feature_file(const fs::path& path, const FeatureTrack& track) {
  RawMatrix m;
  m.rows = static_cast<std::uint32_t>(track.rows());
  m.cols = static_cast<std::uint32_t>(track.dim());
  m.values.reserve(track.values().size());
  for (double v : track.values()) m.values.push_back(checked_float(v));
  write_vbnf(path, m);
}

FlowTrack load_flow_file(const fs::path& path, const std::string& video_id) {
  const RawMatrix m = read_vbnf(path);
  FlowTrack flow;
  flow.video_id = video_id;
  flow.cells = m.cols;
  flow.grids.resize(m.rows);
  for (std::uint32_t r = 0; r < m.rows; ++r) {
    auto& grid = flow.grids[r];
    grid.reserve(m.cols);
    for (std::uint32_t c = 0; c < m.cols; ++c) {
      const double v = m.values[std::size_t{r} * m.cols + c];
      if (!std::isfinite(v)) throw Error(ErrorCode::kNonFiniteValue, "flow magnitude");
      if (v < 0.0) throw Error(ErrorCode::kOutOfRange, "negative flow magnitude");
      grid.push_back(v);
    }
  }
  return flow;
}

void write_flow_file(const fs::path& path, const FlowTrack& flow) {
  RawMatrix m;
  m.rows = static_cast<std::uint32_t>(flow.grids.size());
  m.cols = static_cast<std::uint32_t>(flow.cells);
  for (const auto& grid : flow.grids) {
    if (grid.size() != flow.cells) throw Error(ErrorCode::kShapeMismatch, "flow grid size");
    for (double v : grid) m.values.push_back(checked_float(v));
  }
  write_vbnf(path, m);
}

}  // namespace vgrade::interchange
