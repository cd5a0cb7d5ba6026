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

#ifndef ASPECTLABEL_LEXICON_H_
#define ASPECTLABEL_LEXICON_H_

#include <iosfwd>
#include <set>
#include <string>
#include <string_view>

#include "aspectlabel/corpus.h"

namespace aspectlabel {

// Positive and negative opinion words. Only membership matters; a word may
// sit in both sets.
class SentimentLexicon {
 public:
  void AddPositive(std::string_view word);
  void AddNegative(std::string_view word);

  bool Contains(std::string_view lowercase_word) const {
    return positive_.contains(lowercase_word) ||
           negative_.contains(lowercase_word);
  }

  const std::set<std::string, std::less<>> &positive() const {
    return positive_;
  }
  const std::set<std::string, std::less<>> &negative() const {
    return negative_;
  }
  bool empty() const { return positive_.empty() && negative_.empty(); }

  bool operator==(const SentimentLexicon &) const = default;

 private:
  std::set<std::string, std::less<>> positive_;
  std::set<std::string, std::less<>> negative_;
};

// Word lists in the Bing Liu opinion-lexicon layout: one word per line,
// lines starting with ';' and blank lines ignored. Entries are trimmed and
// lowercased.
SentimentLexicon LoadLexicon(std::istream &positive, std::istream &negative);

// Reads a one-word-per-line list into `out`, skipping blank lines and lines
// starting with ';' or '#'. Shared by the lexicon and stopword loaders.
void ReadWordList(std::istream &in, std::set<std::string, std::less<>> *out);

// True when the lowercased surface form or the lemma is a lexicon entry.
bool IsOpinionWord(const SentimentLexicon &lexicon, const Token &token);

}  // namespace aspectlabel

#endif  // ASPECTLABEL_LEXICON_H_
