// Copyright 2026 The gt-forge Authors
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

#ifndef GTFORGE_COMMON_HPP_
#define GTFORGE_COMMON_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gtforge {

// Half-open [begin, end) byte range into a source buffer.
struct ByteSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return end == begin; }
  bool contains(const ByteSpan& other) const {
    return begin <= other.begin && other.end <= end;
  }
  friend bool operator==(const ByteSpan&, const ByteSpan&) = default;
};

inline std::string_view slice(std::string_view source, ByteSpan span) {
  return source.substr(span.begin, span.end - span.begin);
}

// Axis-aligned box, origin top-left, x0<=x1 and y0<=y1 for valid boxes.
struct Box {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double area() const {
    double w = x1 - x0, h = y1 - y0;
    return (w > 0 && h > 0) ? w * h : 0.0;
  }
  friend bool operator==(const Box&, const Box&) = default;
};

// TeX units. 1 pt = 1/72.27 inch; 1 pt = 65536 sp.
inline constexpr double kPointsPerInch = 72.27;
inline constexpr double kScaledPointsPerPoint = 65536.0;

inline double sp_to_pt(double sp) { return sp / kScaledPointsPerPoint; }
inline double pt_to_px(double pt, double dpi) { return pt * dpi / kPointsPerInch; }

// Deterministic round-half-up, the pinned pixel rounding mode.
inline long round_half_up(double v) {
  return static_cast<long>(std::floor(v + 0.5));
}

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// UTF-8 helpers. Decoding replaces invalid sequences with U+FFFD.
std::u32string decode_utf8(std::string_view bytes);
std::string encode_utf8(char32_t cp);

// Replaces invalid UTF-8 with U+FFFD; returns the number of replacements.
std::size_t sanitize_utf8(std::string& bytes);

// Whitespace split used for word-level tokenization throughout.
std::vector<std::string_view> split_whitespace(std::string_view text);

inline bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace gtforge

#endif  // GTFORGE_COMMON_HPP_
