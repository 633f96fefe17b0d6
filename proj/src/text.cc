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

#include "biocoref/text.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <cctype>
#include <string>

#include "biocoref/errors.h"

namespace biocoref {

namespace {

// Appends the byte offset of every code point start to offsets. Returns false
// on malformed input.
bool ScanUtf8(std::string_view s, std::vector<std::size_t> *offsets) {
  int32_t i = 0;
  const int32_t length = static_cast<int32_t>(s.size());
  while (i < length) {
    if (offsets != nullptr) offsets->push_back(i);
    UChar32 c;
    U8_NEXT(s.data(), i, length, c);
    if (c < 0) return false;
  }
  return true;
}

}  // namespace

Utf8Text::Utf8Text(std::string text) : text_(std::move(text)) {
  offsets_.reserve(text_.size() + 1);
  if (!ScanUtf8(text_, &offsets_)) {
    throw CorefError(ErrorCode::kMalformedInput, "text", "invalid UTF-8");
  }
  offsets_.push_back(text_.size());
}

std::string_view Utf8Text::Slice(Span span) const {
  std::size_t begin = offsets_[span.start];
  std::size_t end = offsets_[span.end];
  return std::string_view(text_).substr(begin, end - begin);
}

int CodePointLength(std::string_view utf8) {
  std::vector<std::size_t> offsets;
  if (!ScanUtf8(utf8, &offsets)) {
    throw CorefError(ErrorCode::kMalformedInput, std::string(utf8),
                     "invalid UTF-8");
  }
  return static_cast<int>(offsets.size());
}

std::string ToLower(std::string_view utf8) {
  bool ascii = true;
  for (char c : utf8) {
    if (static_cast<unsigned char>(c) >= 0x80) {
      ascii = false;
      break;
    }
  }
  std::string out;
  if (ascii) {
    out.reserve(utf8.size());
    for (char c : utf8) {
      out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a')
                                         : c);
    }
    return out;
  }
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  u.toLower(icu::Locale::getRoot());
  u.toUTF8String(out);
  return out;
}

std::string NormalizeNfkc(std::string_view utf8) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *nfkc = icu::Normalizer2::getNFKCInstance(status);
  if (U_FAILURE(status)) {
    throw CorefError(ErrorCode::kConfig, "icu", "NFKC normalizer unavailable");
  }
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  icu::UnicodeString normalized = nfkc->normalize(u, status);
  if (U_FAILURE(status)) {
    throw CorefError(ErrorCode::kMalformedInput, std::string(utf8),
                     "NFKC normalization failed");
  }
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

bool IsPunctuation(std::string_view utf8) {
  if (utf8.empty()) return false;
  int32_t i = 0;
  const int32_t length = static_cast<int32_t>(utf8.size());
  while (i < length) {
    UChar32 c;
    U8_NEXT(utf8.data(), i, length, c);
    if (c < 0) return false;
    if (!u_ispunct(c) && !(U_GET_GC_MASK(c) & U_GC_S_MASK)) return false;
  }
  return true;
}

bool IsDigits(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::vector<std::string> SplitWhitespace(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    if (j > i) parts.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return parts;
}

}  // namespace biocoref
