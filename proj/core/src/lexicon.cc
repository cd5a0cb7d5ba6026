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

#include "aspectlabel/lexicon.h"

#include <istream>

#include "aspectlabel/text.h"

namespace aspectlabel {

void SentimentLexicon::AddPositive(std::string_view word) {
  std::string w = ToLower(Trim(word));
  if (!w.empty()) positive_.insert(std::move(w));
}

void SentimentLexicon::AddNegative(std::string_view word) {
  std::string w = ToLower(Trim(word));
  if (!w.empty()) negative_.insert(std::move(w));
}

void ReadWordList(std::istream &in, std::set<std::string, std::less<>> *out) {
  std::string raw;
  while (std::getline(in, raw)) {
    std::string_view line = Trim(StripCarriageReturn(raw));
    if (line.empty() || line.front() == ';' || line.front() == '#') continue;
    out->insert(ToLower(line));
  }
  if (in.bad()) throw Error("I/O error while reading word list");
}

SentimentLexicon LoadLexicon(std::istream &positive, std::istream &negative) {
  std::set<std::string, std::less<>> words;
  SentimentLexicon lexicon;
  ReadWordList(positive, &words);
  for (const std::string &w : words) lexicon.AddPositive(w);
  words.clear();
  ReadWordList(negative, &words);
  for (const std::string &w : words) lexicon.AddNegative(w);
  return lexicon;
}

bool IsOpinionWord(const SentimentLexicon &lexicon, const Token &token) {
  return lexicon.Contains(ToLower(token.form)) || lexicon.Contains(token.lemma);
}

}  // namespace aspectlabel
