// Copyright 2026  The korpuskit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef KORPUSKIT_TEXT_H_
#define KORPUSKIT_TEXT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace korpuskit {

// Decodes UTF-8 into code points. Throws DataError on malformed input.
std::vector<char32_t> DecodeUtf8(std::string_view s);
std::string EncodeUtf8(const std::vector<char32_t> &cps);

// Token normalization used throughout the toolkit: compose combining
// diacritics (enough for German and neighboring Latin scripts), lower-case,
// and strip leading/trailing punctuation. Internal characters, including
// hyphens, survive. Punctuation-only input yields an empty string; callers
// drop such tokens. Idempotent.
std::string NormalizeToken(std::string_view raw);

// Normalizes a whitespace-separated line into tokens, dropping tokens that
// normalize to empty.
std::vector<std::string> NormalizeLine(std::string_view line);

// Calendar date (no time zone). Comparable; serialized as ISO YYYY-MM-DD.
struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  auto operator<=>(const Date &) const = default;

  // Days since 1970-01-01; exact for the proleptic Gregorian calendar.
  int64_t ToDays() const;
};

Date ParseDate(std::string_view s);  // strict ISO YYYY-MM-DD
std::string FormatDate(const Date &d);

}  // namespace korpuskit

#endif  // KORPUSKIT_TEXT_H_
