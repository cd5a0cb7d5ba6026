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

// Greedy left-to-right IOB tagger trained as an averaged perceptron over
// sparse binary features.
//
// Feature template (version 1), each key namespaced by slot:
//   bias, w=<lowercased form>, lemma=<lemma>, pre1..pre4=, suf1..suf4=
//   (of the lowercased form, only lengths that fit), has_digit, has_hyphen,
//   shape={all-lower,init-cap,all-caps,mixed}, prev_w=, next_w= (with "<s>"
//   and "</s>" at the edges) and prev_tag= ("<s>" for the first token).
//
// Training conditions on the gold previous tag; decoding on the predicted
// one. The template version is stored in the model file and checked on load.

#ifndef ASPECTLABEL_TAGGER_H_
#define ASPECTLABEL_TAGGER_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "aspectlabel/corpus.h"
#include "aspectlabel/labelling.h"

namespace aspectlabel {

inline constexpr int kFeatureTemplateVersion = 1;

struct FeatureVector {
  std::vector<std::string> keys;  // unique, non-empty
};

// `position` is 1-based. Throws Error when it is outside 1..size.
FeatureVector ExtractFeatures(const Sentence &sentence, int position,
                              IobTag prev_tag);

struct TrainConfig {
  int epochs = 10;
  uint64_t seed = 0;
  bool shuffle = true;
  LabelScheme scheme = LabelScheme::kIob;

  void Validate() const;  // throws Error when epochs < 1
};

class TaggerModel {
 public:
  using Weights = std::array<double, kNumTags>;  // indexed by IobTag

  TaggerModel() = default;

  const std::vector<IobTag> &tagset() const { return tagset_; }
  LabelScheme scheme() const { return config_.scheme; }
  const TrainConfig &config() const { return config_; }
  int template_version() const { return template_version_; }
  bool uses_lemmas() const { return uses_lemmas_; }

  // Sorted copies, for inspection and comparison.
  std::map<std::string, Weights> weights() const;
  std::map<std::string, Weights> averaged_weights() const;

  // Sum of averaged weights of `features` for `tag`.
  double Score(const FeatureVector &features, IobTag tag) const;

  // Greedy decoding; ties go to the earliest tag in O, B, I order. The
  // result is repaired to well-formed IOB.
  std::vector<IobTag> Predict(const Sentence &sentence) const;

  // Self-describing JSON with sorted keys; byte-identical for equal models.
  void Save(std::ostream &out) const;
  // Throws ParseError on malformed files, unknown format or template
  // version, tag sets that disagree with the scheme, or non-finite weights.
  static TaggerModel Load(std::istream &in);

 private:
  friend TaggerModel Train(std::span<const LabelledSentence> data,
                           const TrainConfig &config);

  std::vector<IobTag> tagset_ = {IobTag::kO, IobTag::kB, IobTag::kI};
  TrainConfig config_;
  int template_version_ = kFeatureTemplateVersion;
  bool uses_lemmas_ = true;
  std::unordered_map<std::string, Weights> weights_;
  std::unordered_map<std::string, Weights> averaged_;
};

// Throws Error on empty data, a tag/token count mismatch, or I tags in data
// declared as OB. Deterministic for a fixed config.
TaggerModel Train(std::span<const LabelledSentence> data,
                  const TrainConfig &config);

}  // namespace aspectlabel

#endif  // ASPECTLABEL_TAGGER_H_
