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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

namespace aspectlabel {
namespace {

SentimentLexicon Load(const std::string &pos, const std::string &neg) {
  std::istringstream p(pos);
  std::istringstream n(neg);
  return LoadLexicon(p, n);
}

Token Word(std::string form, std::string lemma) {
  return Token{1, std::move(form), std::move(lemma), "X", 0, "root"};
}

TEST(LoadLexiconTest, CountsEntries) {
  SentimentLexicon lex = Load("great\namazing\n", "awful\n");
  EXPECT_EQ(lex.positive().size(), 2u);
  EXPECT_EQ(lex.negative().size(), 1u);
}

TEST(LoadLexiconTest, CommentsOnly) {
  SentimentLexicon lex = Load(";\n; Opinion Lexicon\n;\n", "\n;x\n");
  EXPECT_TRUE(lex.empty());
}

TEST(LoadLexiconTest, TrimsAndLowercases) {
  SentimentLexicon lex = Load(" Perfectly \r\n", "");
  EXPECT_TRUE(lex.positive().contains("perfectly"));
}

TEST(LoadLexiconTest, WordMayBeInBothLists) {
  SentimentLexicon lex = Load("cheap\n", "cheap\n");
  EXPECT_TRUE(lex.positive().contains("cheap"));
  EXPECT_TRUE(lex.negative().contains("cheap"));
}

TEST(LoadLexiconTest, LineOrderDoesNotMatter) {
  std::vector<std::string> words = {"good", "nice", "fast", "; c", "", "Sharp"};
  std::mt19937 rng(2);
  SentimentLexicon first;
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(words.begin(), words.end(), rng);
    std::string text;
    for (const auto &w : words) text += w + "\n";
    SentimentLexicon lex = Load(text, "slow\n");
    if (trial == 0) first = lex;
    EXPECT_EQ(lex, first);
  }
}

TEST(OpinionWordTest, FormAndLemmaLookup) {
  SentimentLexicon lex = Load("great\namazing\nlove\n", "awful\n");
  EXPECT_TRUE(IsOpinionWord(lex, Word("amazing", "amazing")));
  EXPECT_FALSE(IsOpinionWord(lex, Word("speakers", "speaker")));
  EXPECT_TRUE(IsOpinionWord(lex, Word("Loved", "love")));
  EXPECT_TRUE(IsOpinionWord(lex, Word("awful", "awful")));
}

TEST(OpinionWordTest, CaseInsensitiveForm) {
  SentimentLexicon lex = Load("great\n", "");
  for (const char *form : {"great", "Great", "GREAT", "gReAt"}) {
    EXPECT_TRUE(IsOpinionWord(lex, Word(form, "_unrelated")));
  }
  EXPECT_EQ(IsOpinionWord(lex, Word("screen", "screen")),
            IsOpinionWord(lex, Word("SCREEN", "screen")));
}

}  // namespace
}  // namespace aspectlabel
