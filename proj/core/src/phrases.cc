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

#include "aspectlabel/phrases.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "aspectlabel/text.h"

namespace aspectlabel {

namespace {

bool InUnitInterval(double q) { return q >= 0.0 && q <= 1.0; }

}  // namespace

void PhraseList::Insert(std::string_view text, double q) {
  std::string normalized = NormalizeSpaces(ToLower(text));
  if (normalized.empty()) throw Error("empty phrase");
  if (!InUnitInterval(q)) {
    throw Error("quality " + std::to_string(q) + " for '" + normalized +
                "' is outside [0,1]");
  }
  auto [it, inserted] = entries_.emplace(std::move(normalized), q);
  if (!inserted) it->second = std::max(it->second, q);
}

std::optional<double> PhraseList::Quality(
    std::string_view normalized_text) const {
  auto it = entries_.find(normalized_text);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::vector<QualityPhrase> PhraseList::Ranked() const {
  std::vector<QualityPhrase> ranked;
  ranked.reserve(entries_.size());
  for (const auto &[text, q] : entries_) ranked.push_back({text, q});
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const QualityPhrase &a, const QualityPhrase &b) {
                     return a.q > b.q;
                   });
  return ranked;
}

PhraseList LoadPhraseList(std::istream &in) {
  enum class Layout { kUnknown, kQualityFirst, kPhraseFirst };
  Layout layout = Layout::kUnknown;
  PhraseList list(PhraseList::Source::kLoaded);
  std::string raw;
  size_t line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    std::string_view line = Trim(StripCarriageReturn(raw));
    if (line.empty()) continue;
    std::vector<std::string_view> cols = Split(line, '\t');
    if (cols.size() != 2) {
      throw ParseError(line_number, "expected 'q<TAB>phrase' or 'phrase<TAB>q'");
    }
    double q = 0.0;
    if (layout == Layout::kUnknown) {
      if (ParseDouble(Trim(cols[0]), &q)) {
        layout = Layout::kQualityFirst;
      } else if (ParseDouble(Trim(cols[1]), &q)) {
        layout = Layout::kPhraseFirst;
      } else {
        throw ParseError(line_number, "no numeric quality column");
      }
    }
    std::string_view q_field =
        layout == Layout::kQualityFirst ? cols[0] : cols[1];
    std::string_view phrase =
        layout == Layout::kQualityFirst ? cols[1] : cols[0];
    if (!ParseDouble(Trim(q_field), &q)) {
      throw ParseError(line_number,
                       "unparsable quality '" + std::string(q_field) + "'");
    }
    if (!InUnitInterval(q)) {
      throw ParseError(line_number, "quality " + std::string(Trim(q_field)) +
                                        " is outside [0,1]");
    }
    if (NormalizeSpaces(phrase).empty()) {
      throw ParseError(line_number, "empty phrase");
    }
    list.Insert(phrase, q);
  }
  return list;
}

void WritePhraseList(const PhraseList &list, std::ostream &out) {
  char buffer[32];
  for (const QualityPhrase &phrase : list.Ranked()) {
    std::snprintf(buffer, sizeof(buffer), "%.6f", phrase.q);
    out << buffer << '\t' << phrase.text << '\n';
  }
}

PhraseList Prune(const PhraseList &list, double q_th) {
  if (!InUnitInterval(q_th)) {
    throw Error("quality threshold " + std::to_string(q_th) +
                " is outside [0,1]");
  }
  PhraseList pruned(list.source());
  if (list.min_support()) pruned.set_min_support(*list.min_support());
  for (const auto &[text, q] : list.entries()) {
    if (q >= q_th) pruned.Insert(text, q);
  }
  return pruned;
}

PhraseList MinePhrases(const Corpus &corpus, int min_support, int max_n) {
  if (min_support < 1) throw Error("min_support must be >= 1");
  if (max_n < 1) throw Error("max_n must be >= 1");
  if (corpus.sentences.empty()) throw Error("cannot mine an empty corpus");

  // counts[n-1][gram] and totals[n-1] over qualifying n-grams.
  std::vector<std::unordered_map<std::string, long>> counts(max_n);
  std::vector<long> totals(max_n, 0);
  for (const Sentence &sentence : corpus.sentences) {
    std::vector<std::string> words;
    words.reserve(sentence.tokens.size());
    for (const Token &t : sentence.tokens) words.push_back(ToLower(t.form));
    for (size_t start = 0; start < words.size(); ++start) {
      std::string gram;
      for (int n = 1; n <= max_n && start + n <= words.size(); ++n) {
        const std::string &word = words[start + n - 1];
        if (IsPunctuation(word) || word.empty()) break;
        if (n > 1) gram.push_back(' ');
        gram += word;
        ++counts[n - 1][gram];
        ++totals[n - 1];
      }
    }
  }

  PhraseList mined(PhraseList::Source::kMined);
  mined.set_min_support(min_support);

  long max_unigram = 0;
  for (const auto &[word, count] : counts[0]) {
    max_unigram = std::max(max_unigram, count);
  }
  for (const auto &[word, count] : counts[0]) {
    if (count < min_support) continue;
    double q = static_cast<double>(count) / static_cast<double>(max_unigram);
    mined.Insert(word, std::clamp(q, 0.0, 1.0));
  }

  for (int n = 2; n <= max_n; ++n) {
    for (const auto &[gram, count] : counts[n - 1]) {
      if (count < min_support) continue;
      double p_gram =
          static_cast<double>(count) / static_cast<double>(totals[n - 1]);
      double npmi = 1.0;
      if (p_gram < 1.0) {
        double log_independent = 0.0;
        for (std::string_view word : Split(gram, ' ')) {
          auto it = counts[0].find(std::string(word));
          log_independent += std::log(static_cast<double>(it->second) /
                                      static_cast<double>(totals[0]));
        }
        double pmi = std::log(p_gram) - log_independent;
        npmi = std::clamp(pmi / -std::log(p_gram), -1.0, 1.0);
      }
      mined.Insert(gram, (npmi + 1.0) / 2.0);
    }
  }
  return mined;
}

}  // namespace aspectlabel
