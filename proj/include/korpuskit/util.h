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

#ifndef KORPUSKIT_UTIL_H_
#define KORPUSKIT_UTIL_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace korpuskit {

// Error raised for malformed input data (files, formats, invalid values).
// Carries an optional 1-based line number for file diagnostics.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string &msg) : std::runtime_error(msg) {}
  DataError(const std::string &msg, int64_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  int64_t line() const { return line_; }

 private:
  int64_t line_ = 0;
};

// Splits on a single delimiter character; keeps empty fields.
std::vector<std::string> Split(std::string_view s, char delim);

// Splits on runs of ASCII whitespace; drops empty fields.
std::vector<std::string> SplitWhitespace(std::string_view s);

std::string Join(const std::vector<std::string> &parts,
                 std::string_view sep);

// Strict integer/float parsing; the whole field must be consumed.
int64_t ParseInt64(std::string_view s, const std::string &what);
double ParseDouble(std::string_view s, const std::string &what);

// Locale-independent fixed-point formatting ("%.*f").
std::string FormatFixed(double value, int digits);

// Shortest formatting that round-trips a double exactly ("%.17g" trimmed).
std::string FormatExact(double value);

std::string ReadFile(const std::string &path);

// Writes to <path>.tmp and renames, so readers never see partial files.
void WriteFileAtomic(const std::string &path, std::string_view content);

constexpr double kMsPerHour = 3.6e6;

inline double MsToHours(int64_t ms) {
  return static_cast<double>(ms) / kMsPerHour;
}

}  // namespace korpuskit

#endif  // KORPUSKIT_UTIL_H_
