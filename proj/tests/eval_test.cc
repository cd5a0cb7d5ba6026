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


#include "aspectlabel/eval.h"

#include <gtest/gtest.h>

#include <random>

#include "aspectlabel/text.h"
#include "span_oracle.h"

namespace aspectlabel {
namespace {

using T = IobTag;

LabelledSentence Tagged(std::string id, std::vector<T> tags) {
  LabelledSentence ls;
  ls.sentence.id = std::move(id);
  for (size_t i = 0; i < tags.size(); ++i) {
    int index = static_cast<int>(i) + 1;
    ls.sentence.tokens.push_back(
        {index, "t", "t", "X", index == 1 ? 0 : 1, index == 1 ? "root" : "dep"});
  }
  ls.tags = std::move(tags);
  return ls;
}

std::vector<Span> Spans(std::vector<T> tags,
                        SpanMode mode = SpanMode::kLenient) {
  return ExtractSpans(Tagged("x", std::move(tags)), mode);
}

TEST(ExtractSpansTest, Examples) {
  EXPECT_EQ(Spans({T::kO, T::kB, T::kI, T::kO, T::kO, T::kO}),
            (std::vector<Span>{{"x", 2, 3}}));
  EXPECT_EQ(Spans({T::kB, T::kI, T::kB}),
            (std::vector<Span>{{"x", 1, 2}, {"x", 3, 3}}));
  EXPECT_TRUE(Spans({T::kO, T::kO}).empty());
  EXPECT_TRUE(Spans({}).empty());
  // OB: every B is its own span.
  EXPECT_EQ(Spans({T::kB, T::kB, T::kO, T::kB}),
            (std::vector<Span>{{"x", 1, 1}, {"x", 2, 2}, {"x", 4, 4}}));
}

TEST(ExtractSpansTest, DanglingInsideLenientVersusStrict) {
  EXPECT_EQ(Spans({T::kO, T::kI, T::kI, T::kO, T::kI}),
            (std::vector<Span>{{"x", 2, 3}, {"x", 5, 5}}));
  EXPECT_THROW(Spans({T::kO, T::kI}, SpanMode::kStrict), Error);
  EXPECT_EQ(Spans({T::kB, T::kI}, SpanMode::kStrict),
            (std::vector<Span>{{"x", 1, 2}}));
}

TEST(EvaluateTest, HandCase) {
  // gold: (1,1) (3,4) (6,6); predicted: (1,1) (4,5).
  std::vector<LabelledSentence> gold = {
      Tagged("a", {T::kB, T::kO, T::kB, T::kI, T::kO, T::kB})};
  std::vector<LabelledSentence> pred = {
      Tagged("a", {T::kB, T::kO, T::kO, T::kB, T::kI, T::kO})};
  EvalReport r = Evaluate(pred, gold);
  EXPECT_EQ(r.true_positives, 1);
  EXPECT_EQ(r.predicted_count, 2);
  EXPECT_EQ(r.gold_count, 3);
  EXPECT_NEAR(r.precision, 50.0, 0.01);
  EXPECT_NEAR(r.recall, 33.33, 0.01);
  EXPECT_NEAR(r.f1, 40.0, 0.01);
  EXPECT_EQ(r.Summary(), "tp=1 pred=2 gold=3 P=50.00 R=33.33 F1=40.00");
  EXPECT_EQ(r.ToJson(),
            R"({"tp":1,"pred":2,"gold":3,"precision":50.0,"recall":33.33,"f1":40.0})");
}

TEST(EvaluateTest, NoSpansAnywhereIsAllZero) {
  std::vector<LabelledSentence> x = {Tagged("a", {T::kO, T::kO})};
  EvalReport r = Evaluate(x, x);
  EXPECT_EQ(r.precision, 0.0);
  EXPECT_EQ(r.recall, 0.0);
  EXPECT_EQ(r.f1, 0.0);
}

TEST(EvaluateTest, SelfComparisonIsPerfect) {
  std::mt19937_64 rng(31);
  std::vector<LabelledSentence> pred;
  std::vector<LabelledSentence> gold;
  for (int trial = 0; trial < 500; ++trial) {
    testing::RandomTagPair(rng, &pred, &gold);
    EvalReport r = Evaluate(gold, gold);
    if (r.gold_count == 0) continue;
    EXPECT_EQ(r.precision, 100.0);
    EXPECT_EQ(r.recall, 100.0);
    EXPECT_EQ(r.f1, 100.0);
  }
}

TEST(EvaluateTest, MismatchesAreErrors) {
  std::vector<LabelledSentence> one = {Tagged("a", {T::kO})};
  std::vector<LabelledSentence> two = {Tagged("a", {T::kO}),
                                       Tagged("b", {T::kO})};
  EXPECT_THROW(Evaluate(one, two), Error);
  std::vector<LabelledSentence> longer = {Tagged("a", {T::kO, T::kO})};
  EXPECT_THROW(Evaluate(one, longer), Error);
  std::vector<LabelledSentence> renamed = {Tagged("z", {T::kO})};
  EXPECT_THROW(Evaluate(one, renamed), Error);
}

TEST(EvaluateTest, AgreesWithBruteForceOracle) {
  std::mt19937_64 rng(1234);
  std::vector<LabelledSentence> pred;
  std::vector<LabelledSentence> gold;
  for (int trial = 0; trial < 3000; ++trial) {
    testing::RandomTagPair(rng, &pred, &gold);
    EvalReport r = Evaluate(pred, gold);
    testing::OracleCounts c = testing::OracleCount(pred, gold);
    ASSERT_EQ(r.true_positives, c.tp);
    ASSERT_EQ(r.predicted_count, c.pred);
    ASSERT_EQ(r.gold_count, c.gold);
    EvalReport expected = MakeReport(c.tp, c.pred, c.gold);
    EXPECT_DOUBLE_EQ(r.f1, expected.f1);
  }
}

TEST(EvaluateTest, MetricsStayInRange) {
  std::mt19937_64 rng(77);
  std::vector<LabelledSentence> pred;
  std::vector<LabelledSentence> gold;
  for (int trial = 0; trial < 1000; ++trial) {
    testing::RandomTagPair(rng, &pred, &gold);
    EvalReport r = Evaluate(pred, gold);
    for (double v : {r.precision, r.recall, r.f1}) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 100.0);
    }
    EXPECT_LE(r.true_positives, std::min(r.predicted_count, r.gold_count));
    EXPECT_LE(r.f1, std::max(r.precision, r.recall) + 1e-9);
    EXPECT_GE(r.f1, std::min(r.precision, r.recall) - 1e-9);
  }
}

}  // namespace
}  // namespace aspectlabel
