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

// Exact-span chunk scoring in the style of the CoNLL-2003 evaluation script.

#ifndef ASPECTLABEL_EVAL_H_
#define ASPECTLABEL_EVAL_H_

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "aspectlabel/labelling.h"

namespace aspectlabel {

struct Span {
  std::string sentence_id;
  int start = 0;  // 1-based
  int end = 0;    // inclusive

  auto operator<=>(const Span &) const = default;
};

// Lenient: an I after O (or at sentence start) opens a new chunk, as the
// reference conlleval script does. Strict: such an I is an error.
enum class SpanMode { kLenient, kStrict };

struct EvalReport {
  long true_positives = 0;
  long predicted_count = 0;
  long gold_count = 0;
  double precision = 0.0;  // percentages in [0,100]
  double recall = 0.0;
  double f1 = 0.0;

  // {"tp":..,"pred":..,"gold":..,"precision":..,"recall":..,"f1":..} with
  // percentages rounded to two decimals.
  std::string ToJson() const;
  // "tp=1 pred=2 gold=3 P=50.00 R=33.33 F1=40.00"
  std::string Summary() const;
};

// Builds a report from counts with the zero conventions (P = 0 when nothing
// is predicted, R = 0 when there is no gold, F1 = 0 when P + R = 0).
EvalReport MakeReport(long true_positives, long predicted_count,
                      long gold_count);

// A chunk is B I*, or a stray I I* in lenient mode. Throws Error for a stray
// I in strict mode.
std::vector<Span> ExtractSpans(const LabelledSentence &labelled,
                               SpanMode mode = SpanMode::kLenient);

// Sentences are paired by position; ids and token counts must agree, else an
// Error names the first offending sentence.
EvalReport Evaluate(std::span<const LabelledSentence> predicted,
                    std::span<const LabelledSentence> gold,
                    SpanMode mode = SpanMode::kLenient);

}  // namespace aspectlabel

#endif  // ASPECTLABEL_EVAL_H_
