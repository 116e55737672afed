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

#include <png.h>

#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>
#include <memory>
#include <set>

#include "vgrade/error.hpp"
#include "vgrade/interchange.hpp"

namespace vgrade::interchange {
namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

Image read_png(const fs::path& path) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&image, path.c_str())) {
    throw Error(ErrorCode::kDecodeError, path.string() + ": " + image.message);
  }
  image.format = PNG_FORMAT_RGB;
  Image out(image.width, image.height);
  if (!png_image_finish_read(&image, nullptr, out.rgb.data(), 0, nullptr)) {
    const std::string msg = image.message;
    png_image_free(&image);
    throw Error(ErrorCode::kDecodeError, path.string() + ": " + msg);
  }
  return out;
}

// Binary PPM (P6, maxval 255) with optional '#' comments in the header.
Image read_ppm(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  const std::vector<char> bytes{std::istreambuf_iterator<char>(in),
                                std::istreambuf_iterator<char>()};
  std::size_t pos = 0;
  auto next_token = [&]() -> std::string {
    while (pos < bytes.size()) {
      if (bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(bytes[pos]))) {
        ++pos;
      } else {
        break;
      }
    }
    std::string token;
    while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
      token.push_back(bytes[pos++]);
    }
    return token;
  };
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::kDecodeError, path.string() + ": " + why);
  };
  if (next_token() != "P6") throw fail("not a binary PPM");
  unsigned long w = 0, h = 0, maxval = 0;
  try {
    w = std::stoul(next_token());
    h = std::stoul(next_token());
    maxval = std::stoul(next_token());
  } catch (const std::exception&) {
    throw fail("bad header");
  }
  if (maxval != 255 || w == 0 || h == 0) throw fail("unsupported PPM header");
  ++pos;  // single whitespace byte after maxval
  Image out(static_cast<std::uint32_t>(w), static_cast<std::uint32_t>(h));
  if (bytes.size() < pos + out.rgb.size()) throw fail("truncated pixel data");
  std::memcpy(out.rgb.data(), bytes.data() + pos, out.rgb.size());
  return out;
}

}  // namespace

std::string frame_file_stem(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "frame_%06zu", index);
  return buf;
}

Image read_image(const fs::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".png") return read_png(path);
  if (ext == ".ppm") return read_ppm(path);
  throw Error(ErrorCode::kDecodeError, "unsupported image type " + path.string());
}

void write_png(const fs::path& path, const Image& image, int compression_level) {
  FilePtr file(std::fopen(path.c_str(), "wb"));
  if (!file) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    throw Error(ErrorCode::kIoError, "libpng init failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw Error(ErrorCode::kIoError, "png encode failed for " + path.string());
  }
  png_init_io(png, file.get());
  png_set_compression_level(png, compression_level);
  png_set_IHDR(png, info, image.width, image.height, 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  const std::size_t stride = std::size_t{image.width} * 3;
  for (std::uint32_t y = 0; y < image.height; ++y) {
    png_write_row(png, const_cast<png_bytep>(image.rgb.data() + y * stride));
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

void write_ppm(const fs::path& path, const Image& image) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << "P6\n" << image.width << ' ' << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.rgb.data()),
            static_cast<std::streamsize>(image.rgb.size()));
}

std::vector<Image> load_frame_images(const fs::path& dir,
                                     std::optional<std::size_t> expected_count) {
  if (!fs::is_directory(dir)) {
    throw Error(ErrorCode::kMissingFrame, "frame directory " + dir.string() + " not found");
  }
  // index -> path; a duplicate index in two formats is ambiguous.
  std::map<std::size_t, fs::path> found;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    const auto ext = entry.path().extension().string();
    if (name.rfind("frame_", 0) != 0 || (ext != ".png" && ext != ".ppm")) continue;
    const auto digits = entry.path().stem().string().substr(6);
    if (digits.size() != 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      continue;
    }
    const std::size_t index = std::stoul(digits);
    if (!found.emplace(index, entry.path()).second) {
      throw Error(ErrorCode::kDecodeError, "frame " + std::to_string(index) + " stored twice");
    }
  }
  std::size_t count = 0;
  if (expected_count) {
    count = *expected_count;
    if (!found.empty() && found.rbegin()->first >= count) {
      throw Error(ErrorCode::kFrameCountMismatch, dir.string() + " holds frames past index " +
                                                      std::to_string(count - 1));
    }
  } else if (!found.empty()) {
    count = found.rbegin()->first + 1;
  }
  if (count == 0) throw Error(ErrorCode::kMissingFrame, "no frames in " + dir.string());
  std::vector<Image> frames;
  frames.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto it = found.find(i);
    if (it == found.end()) {
      throw Error(ErrorCode::kMissingFrame, frame_file_stem(i) + " missing in " + dir.string());
    }
    frames.push_back(read_image(it->second));
    if (!frames.back().same_shape(frames.front())) {
      throw Error(ErrorCode::kInconsistentResolution,
                  frame_file_stem(i) + " is " + std::to_string(frames.back().width) + "x" +
                      std::to_string(frames.back().height) + ", frame 0 is " +
                      std::to_string(frames.front().width) + "x" +
                      std::to_string(frames.front().height));
    }
  }
  if (expected_count && found.size() > count) {
    throw Error(ErrorCode::kFrameCountMismatch,
                std::to_string(found.size()) + " frame files, expected " + std::to_string(count));
  }
  return frames;
}

FrameSequence load_frames(const fs::path& dir, std::optional<std::size_t> expected_count) {
  FrameSequence seq;
  seq.frames = load_frame_images(dir, expected_count);
  return seq;
}

}  // namespace vgrade::interchange
