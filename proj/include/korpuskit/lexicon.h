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

#ifndef KORPUSKIT_LEXICON_H_
#define KORPUSKIT_LEXICON_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace korpuskit {

// Pronunciation lexicon: word -> set of phoneme sequences, with the permitted
// phoneme inventory (SAM-PA-style ASCII symbols).
struct Lexicon {
  std::map<std::string, std::set<std::vector<std::string>>> entries;
  std::set<std::string> inventory;

  int64_t size() const { return static_cast<int64_t>(entries.size()); }
  bool Contains(const std::string &word) const {
    return entries.count(word) > 0;
  }
  void Validate() const;  // every symbol in inventory, no empty entries
};

// Lexicon file: one "word<TAB>phoneme phoneme ..." per line. Duplicate lines
// are deduplicated. With an explicit inventory, unknown symbols are an error;
// with an empty one the inventory is derived from the file.
Lexicon ReadLexicon(std::string_view text,
                    const std::set<std::string> &inventory = {});

// Entries sorted by word, pronunciations sorted; inverse of ReadLexicon.
std::string WriteLexicon(const Lexicon &lexicon);

struct FrequencyTable {
  std::unordered_map<std::string, int64_t> counts;
  int64_t total = 0;

  void Add(const std::string &word, int64_t n = 1);
  void AddTokens(const std::vector<std::string> &tokens);
};

// "word<TAB>count" lines.
FrequencyTable ReadFrequencyTable(std::string_view text);
std::string WriteFrequencyTable(const FrequencyTable &freq);

// The n most frequent words, ties broken lexicographically ascending. Fewer
// than n types yields all of them.
std::vector<std::string> BuildVocab(const FrequencyTable &freq, int64_t n);

// One grapheme-to-phoneme rewrite rule. An empty phoneme list deletes the
// grapheme (used for hyphens and apostrophes).
struct G2PRule {
  std::string grapheme;
  std::vector<std::string> phonemes;
};

// Ordered rewrite rules applied by repeated longest-prefix match, left to
// right. Priority is grapheme length first, then order of appearance.
class G2PRuleTable {
 public:
  // Rule file: "grapheme<TAB>phoneme phoneme ..." per line.
  static G2PRuleTable FromText(std::string_view text);

  // Built-in table for German: multi-graphemes (sch, tsch, ch, ei, ie, eu,
  // äu, au, ck, tz, qu, ph, th, ...) plus every single letter a-z, ä, ö, ü, ß.
  static const G2PRuleTable &DefaultGerman();

  const std::vector<G2PRule> &rules() const { return rules_; }
  std::set<std::string> OutputInventory() const;

  // Throws if some rule emits a symbol outside the given inventory.
  void ValidateAgainst(const std::set<std::string> &inventory) const;

 private:
  std::vector<G2PRule> rules_;  // in priority order
};

// Deterministic grapheme-to-phoneme conversion. Throws DataError on an empty
// word, on a character no rule covers (reporting the character and its
// code-point position) and on a word whose rules all delete.
std::vector<std::string> ApplyG2P(const std::string &word,
                                  const G2PRuleTable &table);

// Adds a G2P pronunciation for every input word missing from base; existing
// entries are never touched, so the lexicon only grows.
Lexicon ExtendLexicon(const Lexicon &base,
                      const std::vector<std::string> &words,
                      const G2PRuleTable &table);

// Fraction of tokens not present in the lexicon; 0 for empty input.
double OovRate(const std::vector<std::string> &tokens, const Lexicon &lexicon);

}  // namespace korpuskit

#endif  // KORPUSKIT_LEXICON_H_
