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

#include "korpuskit/text.h"

#include <array>
#include <unordered_map>
#include <unordered_set>

#include "korpuskit/util.h"

namespace korpuskit {

std::vector<char32_t> DecodeUtf8(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      throw DataError("malformed UTF-8 byte at offset " + std::to_string(i));
    }
    if (i + len > s.size())
      throw DataError("truncated UTF-8 sequence at offset " +
                      std::to_string(i));
    for (size_t k = 1; k < len; k++) {
      unsigned char b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80)
        throw DataError("malformed UTF-8 continuation at offset " +
                        std::to_string(i + k));
      cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong encodings and surrogates.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000) || (cp >= 0xD800 && cp <= 0xDFFF) ||
        cp > 0x10FFFF) {
      throw DataError("invalid UTF-8 code point at offset " +
                      std::to_string(i));
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string EncodeUtf8(const std::vector<char32_t> &cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

namespace {

// Composition table for the combining marks that show up in European text.
// Keyed on (base << 16) | combining mark. Not full NFC; umlauts and common
// accents are what the lexicon and corpus data need.
const std::unordered_map<uint64_t, char32_t> &CompositionTable() {
  static const auto *table = [] {
    auto *t = new std::unordered_map<uint64_t, char32_t>;
    auto put = [&](char32_t base, char32_t mark, char32_t composed) {
      (*t)[(static_cast<uint64_t>(base) << 16) | mark] = composed;
    };
    const char32_t kDiaeresis = 0x0308, kAcute = 0x0301, kGrave = 0x0300,
                   kCircumflex = 0x0302, kTilde = 0x0303, kRing = 0x030A,
                   kCedilla = 0x0327;
    put(U'a', kDiaeresis, U'ä');
    put(U'o', kDiaeresis, U'ö');
    put(U'u', kDiaeresis, U'ü');
    put(U'e', kDiaeresis, U'ë');
    put(U'i', kDiaeresis, U'ï');
    put(U'y', kDiaeresis, U'ÿ');
    put(U'A', kDiaeresis, U'Ä');
    put(U'O', kDiaeresis, U'Ö');
    put(U'U', kDiaeresis, U'Ü');
    put(U'E', kDiaeresis, U'Ë');
    put(U'I', kDiaeresis, U'Ï');
    put(U'a', kAcute, U'á');
    put(U'e', kAcute, U'é');
    put(U'i', kAcute, U'í');
    put(U'o', kAcute, U'ó');
    put(U'u', kAcute, U'ú');
    put(U'y', kAcute, U'ý');
    put(U'A', kAcute, U'Á');
    put(U'E', kAcute, U'É');
    put(U'I', kAcute, U'Í');
    put(U'O', kAcute, U'Ó');
    put(U'U', kAcute, U'Ú');
    put(U'a', kGrave, U'à');
    put(U'e', kGrave, U'è');
    put(U'i', kGrave, U'ì');
    put(U'o', kGrave, U'ò');
    put(U'u', kGrave, U'ù');
    put(U'A', kGrave, U'À');
    put(U'E', kGrave, U'È');
    put(U'a', kCircumflex, U'â');
    put(U'e', kCircumflex, U'ê');
    put(U'i', kCircumflex, U'î');
    put(U'o', kCircumflex, U'ô');
    put(U'u', kCircumflex, U'û');
    put(U'a', kTilde, U'ã');
    put(U'n', kTilde, U'ñ');
    put(U'o', kTilde, U'õ');
    put(U'A', kTilde, U'Ã');
    put(U'N', kTilde, U'Ñ');
    put(U'O', kTilde, U'Õ');
    put(U'a', kRing, U'å');
    put(U'A', kRing, U'Å');
    put(U'c', kCedilla, U'ç');
    put(U'C', kCedilla, U'Ç');
    return t;
  }();
  return *table;
}

char32_t LowerCp(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  // Latin-1 supplement, excluding the multiplication sign.
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
  // Latin Extended-A comes in upper/lower pairs.
  if (cp >= 0x0100 && cp <= 0x0177 && (cp % 2) == 0) return cp + 1;
  if (cp >= 0x0179 && cp <= 0x017E && (cp % 2) == 1) return cp + 1;
  if (cp == 0x1E9E) return 0x00DF;  // capital sharp s
  return cp;
}

bool IsEdgePunct(char32_t cp) {
  if (cp < 0x80) {
    unsigned char c = static_cast<unsigned char>(cp);
    return !(std::isalnum(c)) && std::isprint(c) && c != ' ';
  }
  static const std::unordered_set<char32_t> kPunct = {
      0x00A0, 0x00A1, 0x00AB, 0x00B7, 0x00BB, 0x00BF, 0x2010, 0x2011,
      0x2012, 0x2013, 0x2014, 0x2015, 0x2018, 0x2019, 0x201A, 0x201B,
      0x201C, 0x201D, 0x201E, 0x2026, 0x2039, 0x203A, 0x2022, 0x00B0,
      0x2032, 0x2033, 0x00A7, 0x2020, 0x2021,
  };
  return kPunct.count(cp) > 0;
}

}  // namespace

std::string NormalizeToken(std::string_view raw) {
  std::vector<char32_t> cps = DecodeUtf8(raw);

  // Compose base + combining mark pairs, then lower-case.
  std::vector<char32_t> composed;
  composed.reserve(cps.size());
  for (char32_t cp : cps) {
    if (!composed.empty()) {
      auto it = CompositionTable().find(
          (static_cast<uint64_t>(composed.back()) << 16) | cp);
      if (it != CompositionTable().end()) {
        composed.back() = it->second;
        continue;
      }
    }
    composed.push_back(cp);
  }
  for (char32_t &cp : composed) cp = LowerCp(cp);

  size_t begin = 0;
  size_t end = composed.size();
  while (begin < end && IsEdgePunct(composed[begin])) begin++;
  while (end > begin && IsEdgePunct(composed[end - 1])) end--;

  return EncodeUtf8(
      std::vector<char32_t>(composed.begin() + begin, composed.begin() + end));
}

std::vector<std::string> NormalizeLine(std::string_view line) {
  std::vector<std::string> out;
  for (const std::string &tok : SplitWhitespace(line)) {
    std::string norm = NormalizeToken(tok);
    if (!norm.empty()) out.push_back(std::move(norm));
  }
  return out;
}

int64_t Date::ToDays() const {
  // days_from_civil (proleptic Gregorian), epoch 1970-01-01.
  int y = year;
  const int m = month;
  const int d = day;
  y -= m <= 2;
  const int era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return static_cast<int64_t>(era) * 146097 + static_cast<int64_t>(doe) -
         719468;
}

Date ParseDate(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-')
    throw DataError("invalid ISO date: '" + std::string(s) + "'");
  Date d;
  d.year = static_cast<int>(ParseInt64(s.substr(0, 4), "date year"));
  d.month = static_cast<int>(ParseInt64(s.substr(5, 2), "date month"));
  d.day = static_cast<int>(ParseInt64(s.substr(8, 2), "date day"));
  static const std::array<int, 13> days_in_month = {0,  31, 28, 31, 30,
                                                    31, 30, 31, 31, 30,
                                                    31, 30, 31};
  bool leap = (d.year % 4 == 0 && d.year % 100 != 0) || d.year % 400 == 0;
  int max_day = days_in_month[d.month >= 1 && d.month <= 12 ? d.month : 0] +
                (d.month == 2 && leap ? 1 : 0);
  if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > max_day)
    throw DataError("invalid ISO date: '" + std::string(s) + "'");
  return d;
}

std::string FormatDate(const Date &d) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

}  // namespace korpuskit
