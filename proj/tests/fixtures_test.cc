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


#include "aspectlabel/fixtures.h"

#include <gtest/gtest.h>

#include "aspectlabel/text.h"

namespace aspectlabel {
namespace {

TEST(FixturesTest, ShipsEveryCase) {
  std::vector<FixtureCase> cases = LoadFixtures();
  std::vector<std::string> names;
  for (const FixtureCase &fc : cases) names.push_back(fc.name);
  EXPECT_EQ(names, (std::vector<std::string>{
                       "dobj-opinion", "nsubj-acomp", "nsubj-advmod",
                       "obj-amod", "conj-propagation", "compound-propagation",
                       "iob-example"}));
  for (const FixtureCase &fc : cases) {
    EXPECT_NO_THROW(ValidateSentence(fc.sentence)) << fc.name;
    // Each case's own block parses back to the same sentence.
    Corpus own = ParseConlluString(fc.conllu);
    ASSERT_EQ(own.sentences.size(), 1u);
    EXPECT_EQ(own.sentences[0], fc.sentence);
  }
}

TEST(FixturesTest, TableTargets) {
  std::vector<std::vector<std::string>> targets;
  for (const FixtureCase &fc : LoadFixtures()) {
    targets.push_back(fc.expected_targets);
  }
  EXPECT_EQ(targets, (std::vector<std::vector<std::string>>{
                         {"screen"},
                         {"internal speakers"},
                         {"touchpad"},
                         {"price"},
                         {"screen", "speakers"},
                         {"wifi card"},
                         {"internal speakers"}}));
}

TEST(FixturesTest, CorpusLexiconAndPhrases) {
  Corpus corpus = FixtureCorpus();
  EXPECT_EQ(corpus.sentences.size(), LoadFixtures().size());
  SentimentLexicon lex = FixtureLexicon();
  EXPECT_TRUE(lex.positive().contains("amazing"));
  EXPECT_TRUE(lex.negative().contains("awful"));
  PhraseList phrases = FixturePhrases();
  EXPECT_EQ(phrases.Quality("touch pad"), 0.95);
  EXPECT_EQ(phrases.Quality("couch"), 0.67);
  EXPECT_EQ(phrases.Quality("set up"), 0.32);
}

TEST(ParseInlineTest, ReadsPairs) {
  auto items = ParseInline("(The|O) (internal|B)(a|b|I)");
  ASSERT_EQ(items.size(), 3u);
  EXPECT_EQ(items[0], (std::pair<std::string, IobTag>{"The", IobTag::kO}));
  EXPECT_EQ(items[1].second, IobTag::kB);
  EXPECT_EQ(items[2].first, "a|b");
  EXPECT_THROW(ParseInline("The|O"), Error);
  EXPECT_THROW(ParseInline("(The|X)"), Error);
  EXPECT_TRUE(ParseInline("").empty());
}

TEST(TargetTextsTest, LowercasedSpanText) {
  LabelledSentence ls;
  ls.sentence = FixtureCorpus().sentences[4];  // Screen and speakers ...
  ls.tags = {IobTag::kB, IobTag::kO, IobTag::kB, IobTag::kO, IobTag::kO};
  EXPECT_EQ(TargetTexts(ls), (std::vector<std::string>{"screen", "speakers"}));
}

}  // namespace
}  // namespace aspectlabel
