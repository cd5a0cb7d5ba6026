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

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <sstream>

#include "aspectlabel/text.h"

namespace aspectlabel {
namespace {

PhraseList Load(const std::string &text) {
  std::istringstream in(text);
  return LoadPhraseList(in);
}

Corpus SentencesOf(const std::vector<std::vector<std::string>> &words) {
  Corpus corpus;
  for (size_t s = 0; s < words.size(); ++s) {
    Sentence sentence;
    sentence.id = std::to_string(s + 1);
    for (size_t i = 0; i < words[s].size(); ++i) {
      int index = static_cast<int>(i) + 1;
      sentence.tokens.push_back({index, words[s][i], ToLower(words[s][i]),
                                 "X", index == 1 ? 0 : 1, "dep"});
    }
    corpus.sentences.push_back(std::move(sentence));
  }
  return corpus;
}

TEST(LoadPhraseListTest, QualityFirst) {
  PhraseList list = Load("0.95\ttouch pad\n0.67\tcouch\n0.32\tset up\n");
  EXPECT_EQ(list.size(), 3u);
  EXPECT_EQ(list.Quality("touch pad"), 0.95);
  EXPECT_EQ(list.Quality("couch"), 0.67);
  EXPECT_EQ(list.Quality("set up"), 0.32);
  EXPECT_EQ(list.source(), PhraseList::Source::kLoaded);
}

TEST(LoadPhraseListTest, PhraseFirstAndNormalization) {
  PhraseList list = Load("Touch   Pad\t0.95\r\n\n  couch \t0.67\n");
  EXPECT_TRUE(list.Contains("touch pad"));
  EXPECT_TRUE(list.Contains("couch"));
}

TEST(LoadPhraseListTest, EmptyInput) { EXPECT_TRUE(Load("").empty()); }

TEST(LoadPhraseListTest, DuplicatesKeepMaximum) {
  PhraseList list = Load("screen\t0.4\nscreen\t0.8\nSCREEN\t0.5\n");
  EXPECT_EQ(list.size(), 1u);
  EXPECT_EQ(list.Quality("screen"), 0.8);
}

TEST(LoadPhraseListTest, Errors) {
  try {
    Load("0.9\tscreen\n1.5\tcouch\n");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(Load("-0.1\tcouch\n"), ParseError);
  EXPECT_THROW(Load("screen\n"), ParseError);
  EXPECT_THROW(Load("0.9\tscreen\nabc\tcouch\n"), ParseError);
  EXPECT_THROW(Load("foo\tbar\n"), ParseError);
}

TEST(PruneTest, KeepsTouchPadAtLaptopThreshold) {
  PhraseList list = Load("0.95\ttouch pad\n0.67\tcouch\n0.32\tset up\n");
  PhraseList pruned = Prune(list, 0.7);
  EXPECT_EQ(pruned.size(), 1u);
  EXPECT_TRUE(pruned.Contains("touch pad"));
  EXPECT_EQ(list.size(), 3u);  // input untouched
}

TEST(PruneTest, BoundaryCases) {
  PhraseList list = Load("0.95\ttouch pad\n0.67\tcouch\n0.32\tset up\n");
  EXPECT_EQ(Prune(list, 0.0), list);
  EXPECT_TRUE(Prune(list, std::nextafter(0.95, 1.0)).empty());
  EXPECT_EQ(Prune(list, 0.67).size(), 2u);  // q >= q_th is kept
  EXPECT_THROW(Prune(list, 1.01), Error);
  EXPECT_THROW(Prune(list, -0.01), Error);
}

TEST(PruneTest, MonotoneAndComposable) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    PhraseList list;
    int n = static_cast<int>(rng() % 20);
    for (int i = 0; i < n; ++i) {
      list.Insert("p" + std::to_string(rng() % 30), unit(rng));
    }
    double a = unit(rng);
    double b = unit(rng);
    double lo = std::min(a, b);
    double hi = std::max(a, b);
    PhraseList strict = Prune(list, hi);
    PhraseList loose = Prune(list, lo);
    for (const auto &[text, q] : strict.entries()) {
      EXPECT_TRUE(loose.Contains(text));
    }
    EXPECT_EQ(Prune(Prune(list, a), b), Prune(list, std::max(a, b)));
  }
}

TEST(WritePhraseListTest, RankedByQualityThenText) {
  PhraseList list = Load("0.5\tb\n0.9\tz\n0.5\ta\n");
  std::ostringstream out;
  WritePhraseList(list, out);
  EXPECT_EQ(out.str(), "0.900000\tz\n0.500000\ta\n0.500000\tb\n");
}

// Two sentences, punctuation excluded from counting:
//   unigrams (N1 = 10): the 3, touch 2, pad 2, works 1, and 1, screen 1
//   bigrams  (N2 = 8):  the touch 2, touch pad 2, the others 1
// Expected q values were computed independently from the NPMI definition;
// e.g. "pad works": ln((1/8) / (2/10 * 1/10)) / ln 8 = 0.881285... -> 0.940643.
TEST(MinePhrasesTest, HandComputedToyCorpus) {
  Corpus corpus = SentencesOf({{"The", "touch", "pad", "works", "."},
                               {"the", "touch", "pad", "and", "the", "screen"}});
  PhraseList mined = MinePhrases(corpus, 1, 2);
  const std::map<std::string, double> expected = {
      {"the", 1.0},
      {"touch", 2.0 / 3.0},
      {"pad", 2.0 / 3.0},
      {"works", 1.0 / 3.0},
      {"and", 1.0 / 3.0},
      {"screen", 1.0 / 3.0},
      {"the touch", 1.0},  // raw npmi 1.0294 clipped
      {"touch pad", 1.0},  // raw npmi 1.3219 clipped
      {"pad works", 0.9406426982957874},
      {"pad and", 0.9406426982957874},
      {"and the", 0.8431489481755948},
      {"the screen", 0.8431489481755948},
  };
  ASSERT_EQ(mined.size(), expected.size());
  for (const auto &[text, q] : expected) {
    ASSERT_TRUE(mined.Contains(text)) << text;
    EXPECT_NEAR(*mined.Quality(text), q, 1e-12) << text;
  }
  EXPECT_EQ(mined.source(), PhraseList::Source::kMined);
  EXPECT_EQ(mined.min_support(), 1);
}

TEST(MinePhrasesTest, PerfectCollocationHasQualityOne) {
  Corpus corpus = SentencesOf({{"touch", "pad"}, {"touch", "pad"}});
  PhraseList mined = MinePhrases(corpus, 2, 2);
  EXPECT_EQ(mined.Quality("touch pad"), 1.0);
}

TEST(MinePhrasesTest, UniqueTokensBelowSupport) {
  Corpus corpus = SentencesOf({{"a", "b", "c"}, {"d", "e"}});
  EXPECT_TRUE(MinePhrases(corpus, 2, 3).empty());
}

TEST(MinePhrasesTest, NgramsStayInsideSentences) {
  Corpus corpus = SentencesOf({{"x", "y"}, {"z", "w"}});
  PhraseList mined = MinePhrases(corpus, 1, 2);
  EXPECT_FALSE(mined.Contains("y z"));
}

TEST(MinePhrasesTest, InvalidArguments) {
  Corpus corpus = SentencesOf({{"a"}});
  EXPECT_THROW(MinePhrases(corpus, 0, 2), Error);
  EXPECT_THROW(MinePhrases(corpus, 1, 0), Error);
  EXPECT_THROW(MinePhrases(Corpus(), 1, 1), Error);
}

// Recount every mined phrase by brute force and check support and range.
TEST(MinePhrasesTest, SupportAndRangeHoldOnRandomCorpora) {
  std::mt19937 rng(17);
  const std::vector<std::string> vocab = {"a", "b", "c", "d", ",", "e"};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<std::string>> words(1 + rng() % 6);
    for (auto &s : words) {
      s.resize(1 + rng() % 8);
      for (auto &w : s) w = vocab[rng() % vocab.size()];
    }
    int min_support = 1 + static_cast<int>(rng() % 3);
    int max_n = 1 + static_cast<int>(rng() % 3);
    PhraseList mined = MinePhrases(SentencesOf(words), min_support, max_n);
    for (const auto &[text, q] : mined.entries()) {
      EXPECT_GE(q, 0.0);
      EXPECT_LE(q, 1.0);
      std::vector<std::string_view> gram = Split(text, ' ');
      ASSERT_LE(static_cast<int>(gram.size()), max_n);
      int count = 0;
      for (const auto &s : words) {
        for (size_t i = 0; i + gram.size() <= s.size(); ++i) {
          bool match = true;
          for (size_t k = 0; k < gram.size(); ++k) {
            match = match && s[i + k] == gram[k];
          }
          count += match ? 1 : 0;
        }
      }
      EXPECT_GE(count, min_support) << text;
      EXPECT_EQ(text.find(','), std::string::npos);
    }
  }
}

}  // namespace
}  // namespace aspectlabel
