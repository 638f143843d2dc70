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

#ifndef KORPUSKIT_SNIPPET_H_
#define KORPUSKIT_SNIPPET_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "korpuskit/corpus.h"

namespace korpuskit {

// Thresholds for both pruning strategies. Defaults reproduce the reference
// extraction behavior; all of them are overridable.
struct PruningRules {
  int64_t min_duration_ms = 600;
  double max_unaligned_fraction = 0.20;
  int64_t max_consecutive_unaligned = 2;
  bool require_aligned_endpoints = true;
  int64_t max_pause_ms = 1500;         // conservative only
  double min_aligned_fraction = 0.65;  // minimal only

  void Validate() const;  // throws DataError on nonsense thresholds
};

enum class PruningStrategy { kConservative, kMinimal };

std::string StrategyName(PruningStrategy strategy);
PruningStrategy StrategyFromName(const std::string &name);

// One extracted training utterance. The time span is always the span of a
// whole source VAD segment; the transcript keeps unaligned words too.
struct Snippet {
  std::string article_id;
  int64_t start_ms = 0;
  int64_t end_ms = 0;
  std::vector<std::string> tokens;
  double aligned_fraction = 0;
  PruningStrategy strategy = PruningStrategy::kConservative;
};

// Why each segment was kept or dropped, plus rule frequencies. For rejected
// segments `rule` names the first violated rule in the fixed evaluation order
// (empty, min_duration, max_unaligned_fraction, max_consecutive_unaligned,
// endpoint_unaligned, max_pause for conservative; empty, min_aligned_fraction
// for minimal).
struct SegmentDecision {
  std::string article_id;
  size_t segment_index = 0;
  bool accepted = false;
  std::string rule;  // empty when accepted
};

struct RejectionReport {
  std::vector<SegmentDecision> decisions;
  std::map<std::string, int64_t> rule_counts;
  int64_t accepted = 0;
  int64_t rejected = 0;

  void Merge(const RejectionReport &other);
};

struct ExtractionResult {
  std::vector<Snippet> snippets;
  RejectionReport report;
};

// Conservative pruning: a segment survives only if it is long enough, mostly
// aligned, has no long unaligned streak, starts and ends on aligned words and
// contains no long pause between consecutive aligned words.
ExtractionResult ExtractConservative(const AlignedArticle &article,
                                     const PruningRules &rules = {});

// Minimal pruning: keep any segment with at least min_aligned_fraction of its
// words aligned; endpoints and pauses do not matter.
ExtractionResult ExtractMinimal(const AlignedArticle &article,
                                const PruningRules &rules = {});

ExtractionResult Extract(const AlignedArticle &article,
                         PruningStrategy strategy,
                         const PruningRules &rules = {});

// Total snippet time in hours.
double RetainedDurationHours(const std::vector<Snippet> &snippets);

// Tab-separated lines:
//   article_id start_ms end_ms strategy aligned_fraction transcript
std::string SnippetsToTsv(const std::vector<Snippet> &snippets);
std::vector<Snippet> SnippetsFromTsv(std::string_view text);

std::string RejectionReportToKeyValue(const RejectionReport &report);

}  // namespace korpuskit

#endif  // KORPUSKIT_SNIPPET_H_
