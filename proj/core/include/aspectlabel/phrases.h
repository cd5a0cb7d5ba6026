// Copyright 2026 The aspectlabel Authors.
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

// Quality phrases: the candidate aspect terms.
//
// A phrase list maps lowercase n-grams to a quality value q in [0,1]. The
// usual source is an external phrase miner's ranked output (loaded with
// LoadPhraseList); MinePhrases is a self-contained frequency/NPMI fallback.
// Pruning at a threshold q_th keeps the high-quality head of the list.

#ifndef ASPECTLABEL_PHRASES_H_
#define ASPECTLABEL_PHRASES_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aspectlabel/corpus.h"

namespace aspectlabel {

// Laptop-domain threshold; also the general default.
inline constexpr double kDefaultQualityThreshold = 0.7;
inline constexpr double kRestaurantQualityThreshold = 0.6;

inline constexpr int kDefaultMinSupport = 10;
inline constexpr int kDefaultMaxN = 3;

struct QualityPhrase {
  std::string text;
  double q = 0.0;

  bool operator==(const QualityPhrase &) const = default;
};

class PhraseList {
 public:
  enum class Source { kLoaded, kMined };

  PhraseList() = default;
  explicit PhraseList(Source source) : source_(source) {}

  // Normalizes `text` (lowercase, single spaces). Keeps the larger q when
  // the phrase is already present. Throws Error on an empty phrase or q
  // outside [0,1].
  void Insert(std::string_view text, double q);

  bool Contains(std::string_view normalized_text) const {
    return entries_.find(normalized_text) != entries_.end();
  }
  std::optional<double> Quality(std::string_view normalized_text) const;

  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Sorted by q descending, ties by text ascending.
  std::vector<QualityPhrase> Ranked() const;

  // Keyed by text.
  const std::map<std::string, double, std::less<>> &entries() const {
    return entries_;
  }

  Source source() const { return source_; }
  std::optional<int> min_support() const { return min_support_; }
  void set_min_support(int min_support) { min_support_ = min_support; }

  bool operator==(const PhraseList &) const = default;

 private:
  std::map<std::string, double, std::less<>> entries_;
  Source source_ = Source::kLoaded;
  std::optional<int> min_support_;
};

// Reads one phrase per non-empty line, either "q<TAB>phrase" or
// "phrase<TAB>q"; the orientation is fixed by the first line. Throws
// ParseError with the line number on unparsable lines or q outside [0,1].
PhraseList LoadPhraseList(std::istream &in);

// Writes "q<TAB>phrase" lines in Ranked() order with six decimals.
void WritePhraseList(const PhraseList &list, std::ostream &out);

// Entries with q >= q_th. Throws Error if q_th is outside [0,1].
PhraseList Prune(const PhraseList &list, double q_th);

// Counts lowercased n-grams (1 <= n <= max_n) inside sentence boundaries,
// skipping any n-gram that contains a punctuation-only token, and keeps
// those seen at least min_support times.
//
//   unigram:  q = f(w) / f_max
//   n >= 2:   pmi  = log(p(gram) / prod_i p(w_i))
//             npmi = pmi / -log p(gram)         (1 when p(gram) = 1)
//             q    = (clamp(npmi, -1, 1) + 1) / 2
//
// p(gram) is the maximum-likelihood estimate among n-grams of the same
// length and p(w_i) among unigrams. Throws Error when min_support < 1,
// max_n < 1, or the corpus has no sentences.
PhraseList MinePhrases(const Corpus &corpus, int min_support, int max_n);

}  // namespace aspectlabel

#endif  // ASPECTLABEL_PHRASES_H_
