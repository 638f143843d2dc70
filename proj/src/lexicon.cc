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

#include "korpuskit/lexicon.h"

#include <algorithm>
#include <sstream>

#include "korpuskit/text.h"
#include "korpuskit/util.h"

namespace korpuskit {

void Lexicon::Validate() const {
  for (const auto &[word, prons] : entries) {
    if (word.empty()) throw DataError("lexicon entry with empty word");
    if (prons.empty())
      throw DataError("lexicon entry '" + word + "' has no pronunciations");
    for (const auto &pron : prons) {
      if (pron.empty())
        throw DataError("lexicon entry '" + word +
                        "' has an empty pronunciation");
      for (const std::string &ph : pron)
        if (!inventory.count(ph))
          throw DataError("phoneme '" + ph + "' of word '" + word +
                          "' not in inventory");
    }
  }
}

Lexicon ReadLexicon(std::string_view text,
                    const std::set<std::string> &inventory) {
  Lexicon lex;
  lex.inventory = inventory;
  const bool deriveoinventory = inventory.empty();
  int64_t line_no = 0;
  for (const std::string &raw_line : Split(text, '\n')) {
    line_no++;
    std::string_view line = raw_line;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    size_t tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw DataError("expected word<TAB>phonemes", line_no);
    std::string word = NormalizeToken(line.substr(0, tab));
    if (word.empty())
      throw DataError("lexicon word normalizes to empty", line_no);
    std::vector<std::string> phones = SplitWhitespace(line.substr(tab + 1));
    if (phones.empty())
      throw DataError("lexicon entry without phonemes", line_no);
    for (const std::string &ph : phones) {
      if (derive_inventory)
        lex.inventory.insert(ph);
      else if (!lex.inventory.count(ph))
        throw DataError("unknown phoneme symbol '" + ph + "'", line_no);
    }
    lex.entries[word].insert(std::move(phones));
  }
  return lex;
}

std::string WriteLexicon(const Lexicon &lexicon) {
  std::ostringstream out;
  for (const auto &[word, prons] : lexicon.entries)
    for (const auto &pron : prons) out << word << '\t' << Join(pron, " ")
                                       << '\n';
  return out.str();
}

void FrequencyTable::Add(const std::string &word, int64_t n) {
  counts[word] += n;
  total += n;
}

void FrequencyTable::AddTokens(const std::vector<std::string> &tokens) {
  for (const std::string &t : tokens) Add(t);
}

FrequencyTable ReadFrequencyTable(std::string_view text) {
  FrequencyTable freq;
  int64_t line_no = 0;
  for (const std::string &raw_line : Split(text, '\n')) {
    line_no++;
    std::string_view line = raw_line;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    size_t tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw DataError("expected word<TAB>count", line_no);
    std::string word(line.substr(0, tab));
    int64_t count = ParseInt64(line.substr(tab + 1), "count");
    if (count < 0) throw DataError("negative count", line_no);
    freq.Add(word, count);
  }
  return freq;
}

std::string WriteFrequencyTable(const FrequencyTable &freq) {
  std::vector<std::pair<std::string, int64_t>> items(freq.counts.begin(),
                                                     freq.counts.end());
  std::sort(items.begin(), items.end(), [](const auto &a, const auto &b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::ostringstream out;
  for (const auto &[word, count] : items) out << word << '\t' << count << '\n';
  return out.str();
}

std::vector<std::string> BuildVocab(const FrequencyTable &freq, int64_t n) {
  if (n < 1) throw DataError("vocabulary size must be >= 1");
  std::vector<std::pair<std::string, int64_t>> items(freq.counts.begin(),
                                                     freq.counts.end());
  std::sort(items.begin(), items.end(), [](const auto &a, const auto &b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (static_cast<int64_t>(items.size()) > n) items.resize(n);
  std::vector<std::string> vocab;
  vocab.reserve(items.size());
  for (auto &[word, unused] : items) vocab.push_back(std::move(word));
  return vocab;
}

G2PRuleTable G2PRuleTable::FromText(std::string_view text) {
  G2PRuleTable table;
  int64_t line_no = 0;
  for (const std::string &raw_line : Split(text, '\n')) {
    line_no++;
    std::string_view line = raw_line;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    G2PRule rule;
    if (tab == std::string_view::npos) {
      rule.grapheme = std::string(line);
    } else {
      rule.grapheme = std::string(line.substr(0, tab));
      rule.phonemes = SplitWhitespace(line.substr(tab + 1));
    }
    if (rule.grapheme.empty())
      throw DataError("rule with empty grapheme", line_no);
    table.rules_.push_back(std::move(rule));
  }
  // Longest grapheme first; stable sort keeps file order within a length.
  std::stable_sort(table.rules_.begin(), table.rules_.end(),
                   [](const G2PRule &a, const G2PRule &b) {
                     return a.grapheme.size() > b.grapheme.size();
                   });
  return table;
}

const G2PRuleTable &G2PRuleTable::DefaultGerman() {
  static const G2PRuleTable *table = [] {
    // SAM-PA-style output symbols. The vowel+h rules mark lengthening, the
    // multi-graphemes cover the usual digraphs; everything else falls through
    // to single letters.
    static const char kRules[] =
        "tsch\tt S\n"
        "dsch\td Z\n"
        "sch\tS\n"
        "chs\tk s\n"
        "ch\tC\n"
        "ck\tk\n"
        "dt\tt\n"
        "ng\tN\n"
        "nk\tN k\n"
        "ph\tf\n"
        "th\tt\n"
        "rh\tR\n"
        "sh\tS\n"
        "qu\tk v\n"
        "tz\tt s\n"
        "pf\tp f\n"
        "ei\ta I\n"
        "ai\ta I\n"
        "ey\ta I\n"
        "ay\ta I\n"
        "ie\ti:\n"
        "eu\tO Y\n"
        "äu\tO Y\n"
        "au\ta U\n"
        "aa\ta:\n"
        "ee\te:\n"
        "oo\to:\n"
        "ah\ta:\n"
        "eh\te:\n"
        "ih\ti:\n"
        "oh\to:\n"
        "uh\tu:\n"
        "äh\tE:\n"
        "öh\t2:\n"
        "üh\ty:\n"
        "a\ta\n"
        "b\tb\n"
        "c\tk\n"
        "d\td\n"
        "e\tE\n"
        "f\tf\n"
        "g\tg\n"
        "h\th\n"
        "i\tI\n"
        "j\tj\n"
        "k\tk\n"
        "l\tl\n"
        "m\tm\n"
        "n\tn\n"
        "o\tO\n"
        "p\tp\n"
        "q\tk\n"
        "r\tR\n"
        "s\ts\n"
        "t\tt\n"
        "u\tU\n"
        "v\tf\n"
        "w\tv\n"
        "x\tk s\n"
        "y\ty:\n"
        "z\tt s\n"
        "ä\tE\n"
        "ö\t9\n"
        "ü\tY\n"
        "ß\ts\n"
        "-\n"
        "'\n";
    return new G2PRuleTable(FromText(kRules));
  }();
  return *table;
}

std::set<std::string> G2PRuleTable::OutputInventory() const {
  std::set<std::string> inv;
  for (const G2PRule &rule : rules_)
    inv.insert(rule.phonemes.begin(), rule.phonemes.end());
  return inv;
}

void G2PRuleTable::ValidateAgainst(
    const std::set<std::string> &inventory) const {
  for (const G2PRule &rule : rules_)
    for (const std::string &ph : rule.phonemes)
      if (!inventory.count(ph))
        throw DataError("rule '" + rule.grapheme + "' emits phoneme '" + ph +
                        "' outside the inventory");
}

std::vector<std::string> ApplyG2P(const std::string &word,
                                  const G2PRuleTable &table) {
  if (word.empty()) throw DataError("empty word");
  std::vector<std::string> phones;
  size_t pos = 0;
  while (pos < word.size()) {
    const G2PRule *match = nullptr;
    for (const G2PRule &rule : table.rules()) {
      if (word.compare(pos, rule.grapheme.size(), rule.grapheme) == 0) {
        match = &rule;
        break;
      }
    }
    if (!match) {
      size_t cp_pos = DecodeUtf8(std::string_view(word).substr(0, pos)).size();
      std::vector<char32_t> rest =
          DecodeUtf8(std::string_view(word).substr(pos));
      throw DataError("no rule covers character '" +
                      EncodeUtf8({rest.front()}) + "' at position " +
                      std::to_string(cp_pos) + " of word '" + word + "'");
    }
    phones.insert(phones.end(), match->phonemes.begin(),
                  match->phonemes.end());
    pos += match->grapheme.size();
  }
  if (phones.empty())
    throw DataError("word '" + word + "' produces an empty pronunciation");
  return phones;
}

Lexicon ExtendLexicon(const Lexicon &base,
                      const std::vector<std::string> &words,
                      const G2PRuleTable &table) {
  Lexicon out = base;
  std::set<std::string> inv = table.OutputInventory();
  out.inventory.insert(inv.begin(), inv.end());
  for (const std::string &word : words) {
    if (out.Contains(word)) continue;
    try {
      out.entries[word].insert(ApplyG2P(word, table));
    } catch (const DataError &e) {
      out.entries.erase(word);
      throw DataError(std::string(e.what()) + " (while extending lexicon)");
    }
  }
  return out;
}

double OovRate(const std::vector<std::string> &tokens,
               const Lexicon &lexicon) {
  if (tokens.empty()) return 0.0;
  int64_t oov = 0;
  for (const std::string &t : tokens)
    if (!lexicon.Contains(t)) oov++;
  return static_cast<double>(oov) / static_cast<double>(tokens.size());
}

}  // namespace korpuskit
