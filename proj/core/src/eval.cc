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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>

#include "aspectlabel/text.h"
#include "json.hpp"

namespace aspectlabel {

namespace {

double Round2(double x) { return std::round(x * 100.0) / 100.0; }

}  // namespace

EvalReport MakeReport(long true_positives, long predicted_count,
                      long gold_count) {
  EvalReport report;
  report.true_positives = true_positives;
  report.predicted_count = predicted_count;
  report.gold_count = gold_count;
  if (predicted_count > 0) {
    report.precision = 100.0 * static_cast<double>(true_positives) /
                       static_cast<double>(predicted_count);
  }
  if (gold_count > 0) {
    report.recall = 100.0 * static_cast<double>(true_positives) /
                    static_cast<double>(gold_count);
  }
  if (report.precision + report.recall > 0.0) {
    report.f1 = 2.0 * report.precision * report.recall /
                (report.precision + report.recall);
  }
  return report;
}

std::string EvalReport::ToJson() const {
  nlohmann::ordered_json j;
  j["tp"] = true_positives;
  j["pred"] = predicted_count;
  j["gold"] = gold_count;
  j["precision"] = Round2(precision);
  j["recall"] = Round2(recall);
  j["f1"] = Round2(f1);
  return j.dump();
}

std::string EvalReport::Summary() const {
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer),
                "tp=%ld pred=%ld gold=%ld P=%.2f R=%.2f F1=%.2f",
                true_positives, predicted_count, gold_count, precision, recall,
                f1);
  return buffer;
}

std::vector<Span> ExtractSpans(const LabelledSentence &labelled,
                               SpanMode mode) {
  std::vector<Span> spans;
  const auto &tags = labelled.tags;
  const int n = static_cast<int>(tags.size());
  int start = 0;  // open chunk start, 0 when none
  for (int i = 1; i <= n; ++i) {
    IobTag tag = tags[i - 1];
    if (tag == IobTag::kI && start == 0) {
      if (mode == SpanMode::kStrict) {
        throw Error("sentence '" + labelled.sentence.id + "': I tag at token " +
                    std::to_string(i) + " does not continue a chunk");
      }
      start = i;
      continue;
    }
    if (tag == IobTag::kI) continue;
    if (start != 0) spans.push_back({labelled.sentence.id, start, i - 1});
    start = tag == IobTag::kB ? i : 0;
  }
  if (start != 0) spans.push_back({labelled.sentence.id, start, n});
  return spans;
}

EvalReport Evaluate(std::span<const LabelledSentence> predicted,
                    std::span<const LabelledSentence> gold, SpanMode mode) {
  if (predicted.size() != gold.size()) {
    throw Error("predicted has " + std::to_string(predicted.size()) +
                " sentences but gold has " + std::to_string(gold.size()));
  }
  long tp = 0;
  long n_pred = 0;
  long n_gold = 0;
  for (size_t s = 0; s < gold.size(); ++s) {
    const LabelledSentence &p = predicted[s];
    const LabelledSentence &g = gold[s];
    if (p.sentence.id != g.sentence.id) {
      throw Error("sentence " + std::to_string(s + 1) + ": predicted id '" +
                  p.sentence.id + "' does not match gold id '" +
                  g.sentence.id + "'");
    }
    if (p.tags.size() != g.tags.size()) {
      throw Error("sentence '" + g.sentence.id + "': predicted has " +
                  std::to_string(p.tags.size()) + " tokens, gold has " +
                  std::to_string(g.tags.size()));
    }
    std::vector<Span> pred_spans = ExtractSpans(p, mode);
    std::vector<Span> gold_spans = ExtractSpans(g, mode);
    // Both lists come out sorted by start.
    std::vector<Span> common;
    std::set_intersection(pred_spans.begin(), pred_spans.end(),
                          gold_spans.begin(), gold_spans.end(),
                          std::back_inserter(common));
    tp += static_cast<long>(common.size());
    n_pred += static_cast<long>(pred_spans.size());
    n_gold += static_cast<long>(gold_spans.size());
  }
  return MakeReport(tp, n_pred, n_gold);
}

}  // namespace aspectlabel
