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

#include "korpuskit/corpus.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "korpuskit/util.h"

namespace korpuskit {

void ValidateArticle(const AlignedArticle &article) {
  if (article.article_id.empty()) throw DataError("empty article id");
  if (article.speaker_id.empty()) throw DataError("empty speaker id");
  int64_t prev_seg_end = -1;
  for (const VadSegment &seg : article.segments) {
    if (seg.start_ms >= seg.end_ms)
      throw DataError("segment with non-positive duration in article " +
                      article.article_id);
    if (seg.start_ms < prev_seg_end)
      throw DataError("overlapping segments in article " + article.article_id);
    prev_seg_end = seg.end_ms;
    int64_t prev_word_end = -1;
    for (const WordToken &w : seg.words) {
      if (w.surface.empty()) throw DataError("empty word surface");
      if (w.start_ms.has_value() != w.end_ms.has_value())
        throw DataError("word with only one timestamp");
      if (!w.aligned()) continue;
      if (*w.start_ms >= *w.end_ms)
        throw DataError("non-monotonic timestamp on word '" + w.surface + "'");
      if (*w.start_ms < seg.start_ms || *w.end_ms > seg.end_ms)
        throw DataError("word '" + w.surface + "' outside segment bounds");
      if (*w.start_ms < prev_word_end)
        throw DataError("word '" + w.surface +
                        "' overlaps previous aligned word");
      prev_word_end = *w.end_ms;
    }
  }
  if (!article.segments.empty() &&
      article.total_duration_ms < article.segments.back().end_ms)
    throw DataError("article duration shorter than last segment in " +
                    article.article_id);
}

AlignedArticle ParseAlignmentFile(std::string_view text,
                                  AlignmentParseStats *stats) {
  AlignedArticle article;
  AlignmentParseStats local;
  bool have_header = false;
  int64_t line_no = 0;

  for (const std::string &raw_line : Split(text, '\n')) {
    line_no++;
    std::string_view line = raw_line;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t'))
      line.remove_suffix(1);
    if (line.empty()) continue;

    std::vector<std::string> fields = SplitWhitespace(line);
    const std::string &tag = fields[0];

    if (tag == "#article") {
      if (have_header) throw DataError("duplicate #article header", line_no);
      if (fields.size() != 4 && fields.size() != 5)
        throw DataError("malformed #article header", line_no);
      article.article_id = fields[1];
      article.speaker_id = fields[2];
      article.total_duration_ms = ParseInt64(fields[3], "article duration");
      if (fields.size() == 5) {
        try {
          article.recording_date = ParseDate(fields[4]);
        } catch (const DataError &e) {
          throw DataError(e.what(), line_no);
        }
      }
      have_header = true;
      continue;
    }
    if (!have_header)
      throw DataError("expected #article header before '" + tag + "'",
                      line_no);

    if (tag == "SEG") {
      if (fields.size() != 3) throw DataError("malformed SEG line", line_no);
      VadSegment seg;
      seg.start_ms = ParseInt64(fields[1], "segment start");
      seg.end_ms = ParseInt64(fields[2], "segment end");
      if (seg.start_ms >= seg.end_ms)
        throw DataError("non-monotonic timestamp: segment end before start",
                        line_no);
      if (!article.segments.empty() &&
          seg.start_ms < article.segments.back().end_ms)
        throw DataError("overlapping segments", line_no);
      article.segments.push_back(std::move(seg));
      local.segments++;
      continue;
    }

    if (tag == "W") {
      if (fields.size() < 4) throw DataError("malformed W line", line_no);
      if (article.segments.empty())
        throw DataError("word before any SEG line", line_no);
      VadSegment &seg = article.segments.back();
      WordToken tok;
      const bool start_absent = fields[1] == "-";
      const bool end_absent = fields[2] == "-";
      if (start_absent != end_absent)
        throw DataError("word must have both timestamps or neither", line_no);
      if (!start_absent) {
        tok.start_ms = ParseInt64(fields[1], "word start");
        tok.end_ms = ParseInt64(fields[2], "word end");
        if (*tok.start_ms >= *tok.end_ms)
          throw DataError("non-monotonic timestamp: word end before start",
                          line_no);
        if (*tok.start_ms < seg.start_ms || *tok.end_ms > seg.end_ms)
          throw DataError("word timestamps outside segment bounds", line_no);
        for (auto it = seg.words.rbegin(); it != seg.words.rend(); ++it) {
          if (!it->aligned()) continue;
          if (*tok.start_ms < *it->end_ms)
            throw DataError(
                "non-monotonic timestamp: word overlaps previous aligned word",
                line_no);
          break;
        }
      }
      std::vector<std::string> surface_fields(fields.begin() + 3,
                                              fields.end());
      std::string surface;
      try {
        surface = NormalizeToken(Join(surface_fields, " "));
      } catch (const DataError &e) {
        throw DataError(e.what(), line_no);
      }
      if (surface.empty()) {
        local.dropped_tokens++;
        continue;
      }
      tok.surface = std::move(surface);
      local.words++;
      if (tok.aligned()) local.aligned_words++;
      seg.words.push_back(std::move(tok));
      continue;
    }

    throw DataError("malformed line: unknown tag '" + tag + "'", line_no);
  }

  if (!have_header) throw DataError("missing #article header");
  ValidateArticle(article);
  if (stats) *stats = local;
  return article;
}

std::string SerializeAlignmentFile(const AlignedArticle &article) {
  std::ostringstream out;
  out << "#article " << article.article_id << ' ' << article.speaker_id << ' '
      << article.total_duration_ms;
  if (article.recording_date)
    out << ' ' << FormatDate(*article.recording_date);
  out << '\n';
  for (const VadSegment &seg : article.segments) {
    out << "SEG " << seg.start_ms << ' ' << seg.end_ms << '\n';
    for (const WordToken &w : seg.words) {
      out << "W ";
      if (w.aligned())
        out << *w.start_ms << ' ' << *w.end_ms;
      else
        out << "- -";
      out << ' ' << w.surface << '\n';
    }
  }
  return out.str();
}

void ValidateManifest(const Manifest &manifest) {
  std::unordered_set<std::string> seen;
  for (const ManifestRecord &rec : manifest.records) {
    if (rec.utterance_id.empty()) throw DataError("empty utterance id");
    if (!seen.insert(rec.utterance_id).second)
      throw DataError("duplicate utterance id: " + rec.utterance_id);
    if (rec.duration_ms <= 0)
      throw DataError("non-positive duration for utterance " +
                      rec.utterance_id);
  }
}

Manifest ParseManifest(std::string_view text) {
  Manifest manifest;
  int64_t line_no = 0;
  for (const std::string &raw_line : Split(text, '\n')) {
    line_no++;
    std::string_view line = raw_line;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    std::vector<std::string> cols = Split(line, '\t');
    if (cols.size() != 6)
      throw DataError("expected 6 tab-separated columns, got " +
                          std::to_string(cols.size()),
                      line_no);
    ManifestRecord rec;
    rec.utterance_id = cols[0];
    rec.speaker_id = cols[1];
    rec.dataset_tag = cols[2];
    if (cols[3] != "-") rec.microphone = cols[3];
    rec.duration_ms = ParseInt64(cols[4], "duration_ms");
    rec.transcript = SplitWhitespace(cols[5]);
    manifest.records.push_back(std::move(rec));
  }
  ValidateManifest(manifest);
  return manifest;
}

std::string SerializeManifest(const Manifest &manifest) {
  std::ostringstream out;
  for (const ManifestRecord &rec : manifest.records) {
    out << rec.utterance_id << '\t' << rec.speaker_id << '\t'
        << rec.dataset_tag << '\t' << (rec.microphone ? *rec.microphone : "-")
        << '\t' << rec.duration_ms << '\t' << Join(rec.transcript, " ")
        << '\n';
  }
  return out.str();
}

DatasetStats ManifestStats(const Manifest &manifest) {
  ValidateManifest(manifest);
  DatasetStats stats;
  std::map<std::string, std::set<std::string>> speakers_by_tag;
  std::set<std::string> all_speakers;
  for (const ManifestRecord &rec : manifest.records) {
    stats.by_tag[rec.dataset_tag].total_ms += rec.duration_ms;
    stats.total.total_ms += rec.duration_ms;
    speakers_by_tag[rec.dataset_tag].insert(rec.speaker_id);
    all_speakers.insert(rec.speaker_id);
  }
  for (auto &[tag, tag_stats] : stats.by_tag)
    tag_stats.speaker_count =
        static_cast<int64_t>(speakers_by_tag[tag].size());
  stats.total.speaker_count = static_cast<int64_t>(all_speakers.size());
  return stats;
}

std::string StatsToTable(const DatasetStats &stats) {
  std::ostringstream out;
  size_t width = 7;  // "dataset"
  for (const auto &[tag, unused] : stats.by_tag)
    width = std::max(width, tag.size());
  auto row = [&](const std::string &tag, const TagStats &s) {
    out << tag << std::string(width - tag.size() + 2, ' ')
        << FormatFixed(s.hours(), 2) << "h\t" << s.speaker_count
        << " speakers\n";
  };
  out << "dataset" << std::string(width - 7 + 2, ' ') << "hours\tspeakers\n";
  for (const auto &[tag, tag_stats] : stats.by_tag) row(tag, tag_stats);
  row("total", stats.total);
  return out.str();
}

std::string StatsToKeyValue(const DatasetStats &stats) {
  std::ostringstream out;
  for (const auto &[tag, tag_stats] : stats.by_tag) {
    out << "dataset." << tag << ".hours\t" << FormatFixed(tag_stats.hours(), 6)
        << '\n';
    out << "dataset." << tag << ".speakers\t" << tag_stats.speaker_count
        << '\n';
  }
  out << "total.hours\t" << FormatFixed(stats.total.hours(), 6) << '\n';
  out << "total.speakers\t" << stats.total.speaker_count << '\n';
  return out.str();
}

std::vector<int64_t> SpeakerContributionHistogram(
    const std::vector<AlignedArticle> &articles,
    const std::vector<double> &bin_edges_ms) {
  if (bin_edges_ms.size() < 2)
    throw DataError("histogram needs at least two bin edges");
  for (size_t i = 1; i < bin_edges_ms.size(); i++)
    if (!(bin_edges_ms[i - 1] < bin_edges_ms[i]))
      throw DataError("bin edges must be strictly increasing");

  std::unordered_map<std::string, int64_t> per_speaker_ms;
  for (const AlignedArticle &a : articles)
    per_speaker_ms[a.speaker_id] += a.total_duration_ms;

  const size_t nbins = bin_edges_ms.size() - 1;
  std::vector<int64_t> counts(nbins, 0);
  for (const auto &[speaker, ms] : per_speaker_ms) {
    const double v = static_cast<double>(ms);
    size_t bin = 0;
    while (bin + 1 < nbins && v >= bin_edges_ms[bin + 1]) bin++;
    counts[bin]++;
  }
  return counts;
}

GrowthSeries ComputeGrowthSeries(const std::vector<AlignedArticle> &articles) {
  GrowthSeries series;
  std::map<Date, int64_t> ms_by_date;
  for (const AlignedArticle &a : articles) {
    if (!a.recording_date) {
      series.skipped_undated++;
      continue;
    }
    ms_by_date[*a.recording_date] += a.total_duration_ms;
  }
  int64_t cumulative_ms = 0;
  for (const auto &[date, ms] : ms_by_date) {
    cumulative_ms += ms;
    series.points.push_back({date, MsToHours(cumulative_ms)});
  }
  return series;
}

}  // namespace korpuskit
