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

#ifndef KORPUSKIT_CORPUS_H_
#define KORPUSKIT_CORPUS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "korpuskit/text.h"

namespace korpuskit {

// One transcript word. A word is aligned iff it carries both timestamps.
struct WordToken {
  std::string surface;  // normalized, non-empty
  std::optional<int64_t> start_ms;
  std::optional<int64_t> end_ms;

  bool aligned() const { return start_ms.has_value() && end_ms.has_value(); }
};

// A speech region between voice-activity boundaries, with its words.
// Aligned words lie inside [start_ms, end_ms], are non-overlapping and in
// temporal order.
struct VadSegment {
  int64_t start_ms = 0;
  int64_t end_ms = 0;
  std::vector<WordToken> words;

  int64_t duration_ms() const { return end_ms - start_ms; }
};

// One recording: ordered non-overlapping segments plus recording metadata.
struct AlignedArticle {
  std::string article_id;
  std::string speaker_id;
  std::optional<Date> recording_date;
  int64_t total_duration_ms = 0;
  std::vector<VadSegment> segments;
};

// Throws DataError if any type invariant is violated.
void ValidateArticle(const AlignedArticle &article);

struct AlignmentParseStats {
  int64_t segments = 0;
  int64_t words = 0;
  int64_t aligned_words = 0;
  int64_t dropped_tokens = 0;  // tokens that normalized to empty
};

// Parses the line-oriented alignment format:
//   #article <id> <speaker_id> <duration_ms> [<ISO-date>]
//   SEG <start_ms> <end_ms>
//   W <start_ms|-> <end_ms|-> <surface>
// Word surfaces are normalized on ingestion; tokens that normalize to empty
// (pure punctuation) are dropped. Errors carry the offending line number.
AlignedArticle ParseAlignmentFile(std::string_view text,
                                  AlignmentParseStats *stats = nullptr);

// Canonical serialization; ParseAlignmentFile is its inverse.
std::string SerializeAlignmentFile(const AlignedArticle &article);

struct ManifestRecord {
  std::string utterance_id;
  std::string speaker_id;
  std::string dataset_tag;
  std::optional<std::string> microphone;
  int64_t duration_ms = 0;
  std::vector<std::string> transcript;
};

struct Manifest {
  std::vector<ManifestRecord> records;
};

void ValidateManifest(const Manifest &manifest);

// Tab-separated, one record per line:
//   utterance_id speaker_id dataset_tag microphone duration_ms transcript
// with "-" for an absent microphone and space-separated transcript tokens.
Manifest ParseManifest(std::string_view text);
std::string SerializeManifest(const Manifest &manifest);

struct TagStats {
  int64_t total_ms = 0;
  int64_t speaker_count = 0;

  double hours() const { return static_cast<double>(total_ms) / 3.6e6; }
};

// Per-dataset totals; the grand total counts the union of speakers, so it can
// be smaller than the sum of per-tag speaker counts.
struct DatasetStats {
  std::map<std::string, TagStats> by_tag;
  TagStats total;
};

DatasetStats ManifestStats(const Manifest &manifest);

std::string StatsToTable(const DatasetStats &stats);
std::string StatsToKeyValue(const DatasetStats &stats);

// Histogram of per-speaker committed audio (sum of total_duration_ms over a
// speaker's articles). bin_edges_ms must be strictly increasing with at least
// two edges; values below the first edge land in the first bin and values at
// or above the last edge land in the last bin, so counts always sum to the
// number of distinct speakers.
std::vector<int64_t> SpeakerContributionHistogram(
    const std::vector<AlignedArticle> &articles,
    const std::vector<double> &bin_edges_ms);

struct GrowthPoint {
  Date date;
  double cumulative_hours = 0;
};

struct GrowthSeries {
  std::vector<GrowthPoint> points;  // one per distinct date, ascending
  int64_t skipped_undated = 0;
};

// Cumulative corpus hours over recording dates; articles without a date are
// skipped and counted.
GrowthSeries ComputeGrowthSeries(const std::vector<AlignedArticle> &articles);

}  // namespace korpuskit

#endif  // KORPUSKIT_CORPUS_H_
