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

#include "korpuskit/snippet.h"

#include <sstream>

#include "korpuskit/util.h"

namespace korpuskit {

void PruningRules::Validate() const {
  if (min_duration_ms <= 0) throw DataError("min_duration_ms must be > 0");
  if (!(max_unaligned_fraction > 0 && max_unaligned_fraction <= 1))
    throw DataError("max_unaligned_fraction must be in (0,1]");
  if (max_consecutive_unaligned <= 0)
    throw DataError("max_consecutive_unaligned must be > 0");
  if (max_pause_ms <= 0) throw DataError("max_pause_ms must be > 0");
  if (!(min_aligned_fraction > 0 && min_aligned_fraction <= 1))
    throw DataError("min_aligned_fraction must be in (0,1]");
}

std::string StrategyName(PruningStrategy strategy) {
  return strategy == PruningStrategy::kConservative ? "conservative"
                                                    : "minimal";
}

PruningStrategy StrategyFromName(const std::string &name) {
  if (name == "conservative") return PruningStrategy::kConservative;
  if (name == "minimal") return PruningStrategy::kMinimal;
  throw DataError("unknown pruning strategy: '" + name + "'");
}

void RejectionReport::Merge(const RejectionReport &other) {
  decisions.insert(decisions.end(), other.decisions.begin(),
                   other.decisions.end());
  for (const auto &[rule, count] : other.rule_counts)
    rule_counts[rule] += count;
  accepted += other.accepted;
  rejected += other.rejected;
}

namespace {

struct SegmentFacts {
  int64_t total_words = 0;
  int64_t unaligned_words = 0;
  int64_t max_consecutive_unaligned = 0;
  bool first_unaligned = false;
  bool last_unaligned = false;
  int64_t max_pause_ms = 0;  // between consecutive aligned words
  double aligned_fraction = 0;
};

SegmentFacts Inspect(const VadSegment &seg) {
  SegmentFacts f;
  f.total_words = static_cast<int64_t>(seg.words.size());
  int64_t run = 0;
  int64_t prev_aligned_end = -1;
  for (const WordToken &w : seg.words) {
    if (w.aligned()) {
      if (prev_aligned_end >= 0)
        f.max_pause_ms = std::max(f.max_pause_ms, *w.start_ms -
                                                      prev_aligned_end);
      prev_aligned_end = *w.end_ms;
      run = 0;
    } else {
      f.unaligned_words++;
      run++;
      f.max_consecutive_unaligned = std::max(f.max_consecutive_unaligned, run);
    }
  }
  if (f.total_words > 0) {
    f.first_unaligned = !seg.words.front().aligned();
    f.last_unaligned = !seg.words.back().aligned();
    f.aligned_fraction =
        static_cast<double>(f.total_words - f.unaligned_words) /
        static_cast<double>(f.total_words);
  }
  return f;
}

// Returns the first violated rule name, empty if the segment is accepted.
// Rule order is fixed so reports are deterministic.
std::string FirstViolation(const VadSegment &seg, const SegmentFacts &f,
                           PruningStrategy strategy,
                           const PruningRules &rules) {
  if (f.total_words == 0) return "empty";
  if (strategy == PruningStrategy::kMinimal) {
    if (f.aligned_fraction < rules.min_aligned_fraction)
      return "min_aligned_fraction";
    return "";
  }
  if (seg.duration_ms() < rules.min_duration_ms) return "min_duration";
  if (static_cast<double>(f.unaligned_words) /
          static_cast<double>(f.total_words) >
      rules.max_unaligned_fraction)
    return "max_unaligned_fraction";
  if (f.max_consecutive_unaligned > rules.max_consecutive_unaligned)
    return "max_consecutive_unaligned";
  if (rules.require_aligned_endpoints &&
      (f.first_unaligned || f.last_unaligned))
    return "endpoint_unaligned";
  if (f.max_pause_ms > rules.max_pause_ms) return "max_pause";
  return "";
}

ExtractionResult ExtractWith(const AlignedArticle &article,
                             PruningStrategy strategy,
                             const PruningRules &rules) {
  rules.Validate();
  ExtractionResult result;
  for (size_t i = 0; i < article.segments.size(); i++) {
    const VadSegment &seg = article.segments[i];
    SegmentFacts facts = Inspect(seg);
    std::string rule = FirstViolation(seg, facts, strategy, rules);
    SegmentDecision decision{article.article_id, i, rule.empty(), rule};
    if (decision.accepted) {
      result.report.accepted++;
      Snippet snip;
      snip.article_id = article.article_id;
      snip.start_ms = seg.start_ms;
      snip.end_ms = seg.end_ms;
      snip.tokens.reserve(seg.words.size());
      for (const WordToken &w : seg.words) snip.tokens.push_back(w.surface);
      snip.aligned_fraction = facts.aligned_fraction;
      snip.strategy = strategy;
      result.snippets.push_back(std::move(snip));
    } else {
      result.report.rejected++;
      result.report.rule_counts[rule]++;
    }
    result.report.decisions.push_back(std::move(decision));
  }
  return result;
}

}  // namespace

ExtractionResult ExtractConservative(const AlignedArticle &article,
                                     const PruningRules &rules) {
  return ExtractWith(article, PruningStrategy::kConservative, rules);
}

ExtractionResult ExtractMinimal(const AlignedArticle &article,
                                const PruningRules &rules) {
  return ExtractWith(article, PruningStrategy::kMinimal, rules);
}

ExtractionResult Extract(const AlignedArticle &article,
                         PruningStrategy strategy, const PruningRules &rules) {
  return ExtractWith(article, strategy, rules);
}

double RetainedDurationHours(const std::vector<Snippet> &snippets) {
  int64_t total_ms = 0;
  for (const Snippet &s : snippets) total_ms += s.end_ms - s.start_ms;
  return MsToHours(total_ms);
}

std::string SnippetsToTsv(const std::vector<Snippet> &snippets) {
  std::ostringstream out;
  for (const Snippet &s : snippets) {
    out << s.article_id << '\t' << s.start_ms << '\t' << s.end_ms << '\t'
        << StrategyName(s.strategy) << '\t'
        << FormatFixed(s.aligned_fraction, 6) << '\t' << Join(s.tokens, " ")
        << '\n';
  }
  return out.str();
}

std::vector<Snippet> SnippetsFromTsv(std::string_view text) {
  std::vector<Snippet> out;
  int64_t line_no = 0;
  for (const std::string &raw_line : Split(text, '\n')) {
    line_no++;
    std::string_view line = raw_line;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    std::vector<std::string> cols = Split(line, '\t');
    if (cols.size() != 6)
      throw DataError("expected 6 tab-separated columns", line_no);
    Snippet s;
    s.article_id = cols[0];
    s.start_ms = ParseInt64(cols[1], "start_ms");
    s.end_ms = ParseInt64(cols[2], "end_ms");
    s.strategy = StrategyFromName(cols[3]);
    s.aligned_fraction = ParseDouble(cols[4], "aligned_fraction");
    s.tokens = SplitWhitespace(cols[5]);
    if (s.tokens.empty()) throw DataError("snippet without tokens", line_no);
    out.push_back(std::move(s));
  }
  return out;
}

std::string RejectionReportToKeyValue(const RejectionReport &report) {
  std::ostringstream out;
  out << "segments.total\t" << report.accepted + report.rejected << '\n';
  out << "segments.accepted\t" << report.accepted << '\n';
  out << "segments.rejected\t" << report.rejected << '\n';
  for (const auto &[rule, count] : report.rule_counts)
    out << "rejected." << rule << '\t' << count << '\n';
  return out.str();
}

}  // namespace korpuskit
