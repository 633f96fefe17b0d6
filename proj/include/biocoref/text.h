// Copyright 2026 The biocoref Authors.
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

#ifndef BIOCOREF_TEXT_H_
#define BIOCOREF_TEXT_H_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace biocoref {

// Half-open [start, end) range of Unicode code point offsets.
struct Span {
  int start = 0;
  int end = 0;

  int length() const { return end - start; }
  bool empty() const { return end <= start; }
  bool Contains(const Span &other) const {
    return start <= other.start && other.end <= end;
  }
  bool Overlaps(const Span &other) const {
    return start < other.end && other.start < end;
  }

  friend bool operator==(const Span &, const Span &) = default;
  friend auto operator<=>(const Span &, const Span &) = default;
};

// UTF-8 string addressed by code point. Offsets in the standoff format count
// code points, so "GSK3β" has length 5.
class Utf8Text {
 public:
  Utf8Text() : offsets_{0} {}

  // Throws CorefError(kMalformedInput) on invalid UTF-8.
  explicit Utf8Text(std::string text);

  const std::string &str() const { return text_; }

  // Number of code points.
  int size() const { return static_cast<int>(offsets_.size()) - 1; }

  // UTF-8 bytes covered by a code point span. The span must be in bounds.
  std::string_view Slice(Span span) const;

  // Code point at position i, as UTF-8 bytes.
  std::string_view At(int i) const { return Slice({i, i + 1}); }

 private:
  std::string text_;
  std::vector<std::size_t> offsets_;
};

// Number of code points in a UTF-8 string; throws on invalid UTF-8.
int CodePointLength(std::string_view utf8);

// Full Unicode lowercasing.
std::string ToLower(std::string_view utf8);

// Unicode NFKC normalization.
std::string NormalizeNfkc(std::string_view utf8);

// True when every code point of the token is punctuation or a symbol.
bool IsPunctuation(std::string_view utf8);

// True for tokens made only of ASCII digits.
bool IsDigits(std::string_view token);

// Splits on ASCII whitespace, dropping empty pieces.
std::vector<std::string> SplitWhitespace(std::string_view text);

}  // namespace biocoref

#endif  // BIOCOREF_TEXT_H_
