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

#include "aspectlabel/tagger.h"

#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>

#include "aspectlabel/text.h"
#include "json.hpp"

namespace aspectlabel {

namespace {

constexpr char kModelFormat[] = "aspectlabel-tagger";
constexpr int kModelFormatVersion = 1;
constexpr int kMaxAffix = 4;

bool IsUpper(char c) { return c >= 'A' && c <= 'Z'; }
bool IsLower(char c) { return c >= 'a' && c <= 'z'; }

std::string_view Shape(std::string_view form) {
  int upper = 0;
  int letters = 0;
  for (char c : form) {
    if (IsUpper(c)) ++upper;
    if (IsUpper(c) || IsLower(c)) ++letters;
  }
  if (upper == 0) return "all-lower";
  if (upper == letters && letters > 1) return "all-caps";
  if (upper == 1 && IsUpper(form.front())) return "init-cap";
  return "mixed";
}

std::string TagKey(IobTag tag) { return std::string(1, TagChar(tag)); }

std::vector<IobTag> TagsetFor(LabelScheme scheme) {
  if (scheme == LabelScheme::kOb) return {IobTag::kO, IobTag::kB};
  return {IobTag::kO, IobTag::kB, IobTag::kI};
}

// Unbiased draw from [0, bound) that does not depend on the standard
// library's distribution implementation.
uint64_t Bounded(std::mt19937_64 &rng, uint64_t bound) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

bool SentenceHasRealLemmas(const Sentence &sentence) {
  for (const Token &t : sentence.tokens) {
    if (t.lemma != ToLower(t.form)) return true;
  }
  return false;
}

// Perceptron weights with lazy accumulation for the running average.
class AveragingWeights {
 public:
  struct Cell {
    TaggerModel::Weights current{};
    TaggerModel::Weights total{};
    std::array<long, kNumTags> stamp{};
  };

  double Score(const FeatureVector &features, IobTag tag) const {
    double score = 0.0;
    const int t = static_cast<int>(tag);
    for (const std::string &key : features.keys) {
      auto it = cells_.find(key);
      if (it != cells_.end()) score += it->second.current[t];
    }
    return score;
  }

  void Update(const FeatureVector &features, IobTag tag, double delta) {
    const int t = static_cast<int>(tag);
    for (const std::string &key : features.keys) {
      Cell &cell = cells_[key];
      cell.total[t] += static_cast<double>(step_ - cell.stamp[t]) *
                       cell.current[t];
      cell.stamp[t] = step_;
      cell.current[t] += delta;
    }
  }

  void Tick() { ++step_; }

  void Finish(std::unordered_map<std::string, TaggerModel::Weights> *current,
              std::unordered_map<std::string, TaggerModel::Weights> *averaged) {
    const double steps = static_cast<double>(std::max<long>(step_, 1));
    for (auto &[key, cell] : cells_) {
      TaggerModel::Weights avg{};
      bool any = false;
      for (int t = 0; t < kNumTags; ++t) {
        cell.total[t] += static_cast<double>(step_ - cell.stamp[t]) *
                         cell.current[t];
        avg[t] = cell.total[t] / steps;
        any = any || avg[t] != 0.0;
      }
      (*current)[key] = cell.current;
      if (any) (*averaged)[key] = avg;
    }
  }

 private:
  std::unordered_map<std::string, Cell> cells_;
  long step_ = 0;
};

template <typename ScoreFn>
IobTag BestTag(const std::vector<IobTag> &tagset, ScoreFn score) {
  IobTag best = tagset.front();
  double best_score = score(best);
  for (size_t i = 1; i < tagset.size(); ++i) {
    double s = score(tagset[i]);
    if (s > best_score) {
      best = tagset[i];
      best_score = s;
    }
  }
  return best;
}

}  // namespace

FeatureVector ExtractFeatures(const Sentence &sentence, int position,
                              IobTag prev_tag) {
  if (position < 1 || position > sentence.size()) {
    throw Error("feature position " + std::to_string(position) +
                " outside sentence of " + std::to_string(sentence.size()) +
                " tokens");
  }
  const Token &token = sentence.at(position);
  const std::string word = ToLower(token.form);
  FeatureVector fv;
  auto &keys = fv.keys;
  keys.reserve(20);
  keys.emplace_back("bias");
  keys.push_back("w=" + word);
  keys.push_back("lemma=" + token.lemma);
  for (int len = 1; len <= kMaxAffix && len <= static_cast<int>(word.size());
       ++len) {
    keys.push_back("pre" + std::to_string(len) + "=" + word.substr(0, len));
    keys.push_back("suf" + std::to_string(len) + "=" +
                   word.substr(word.size() - len));
  }
  if (word.find_first_of("0123456789") != std::string::npos) {
    keys.emplace_back("has_digit");
  }
  if (word.find('-') != std::string::npos) keys.emplace_back("has_hyphen");
  keys.push_back("shape=" + std::string(Shape(token.form)));
  keys.push_back("prev_w=" + (position > 1
                                  ? ToLower(sentence.at(position - 1).form)
                                  : std::string("<s>")));
  keys.push_back("next_w=" + (position < sentence.size()
                                  ? ToLower(sentence.at(position + 1).form)
                                  : std::string("</s>")));
  keys.push_back("prev_tag=" +
                 (position > 1 ? TagKey(prev_tag) : std::string("<s>")));
  return fv;
}

void TrainConfig::Validate() const {
  if (epochs < 1) throw Error("epochs must be >= 1");
}

std::map<std::string, TaggerModel::Weights> TaggerModel::weights() const {
  return {weights_.begin(), weights_.end()};
}

std::map<std::string, TaggerModel::Weights> TaggerModel::averaged_weights()
    const {
  return {averaged_.begin(), averaged_.end()};
}

double TaggerModel::Score(const FeatureVector &features, IobTag tag) const {
  double score = 0.0;
  const int t = static_cast<int>(tag);
  for (const std::string &key : features.keys) {
    auto it = averaged_.find(key);
    if (it != averaged_.end()) score += it->second[t];
  }
  return score;
}

std::vector<IobTag> TaggerModel::Predict(const Sentence &sentence) const {
  Sentence normalized;
  const Sentence *input = &sentence;
  if (!uses_lemmas_) {
    normalized = sentence;
    for (Token &t : normalized.tokens) t.lemma = ToLower(t.form);
    input = &normalized;
  }
  std::vector<IobTag> tags;
  tags.reserve(sentence.tokens.size());
  IobTag prev = IobTag::kO;
  for (int i = 1; i <= input->size(); ++i) {
    FeatureVector fv = ExtractFeatures(*input, i, prev);
    prev = BestTag(tagset_, [&](IobTag tag) { return Score(fv, tag); });
    tags.push_back(prev);
  }
  RepairIob(&tags);
  return tags;
}

void TaggerModel::Save(std::ostream &out) const {
  nlohmann::json j;
  j["format"] = kModelFormat;
  j["format_version"] = kModelFormatVersion;
  j["template_version"] = template_version_;
  j["scheme"] = std::string(SchemeName(config_.scheme));
  std::vector<std::string> tags;
  for (IobTag tag : tagset_) tags.push_back(TagKey(tag));
  j["tagset"] = tags;
  j["uses_lemmas"] = uses_lemmas_;
  j["train"] = {{"epochs", config_.epochs},
                {"seed", config_.seed},
                {"shuffle", config_.shuffle}};
  nlohmann::json weights = nlohmann::json::object();
  for (const auto &[key, w] : averaged_weights()) {
    nlohmann::json row = nlohmann::json::array();
    for (IobTag tag : tagset_) row.push_back(w[static_cast<int>(tag)]);
    weights[key] = std::move(row);
  }
  j["weights"] = std::move(weights);
  out << j.dump(1) << '\n';
}

TaggerModel TaggerModel::Load(std::istream &in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(0, std::string("model file is not valid JSON: ") +
                            e.what());
  }
  TaggerModel model;
  try {
    if (j.at("format").get<std::string>() != kModelFormat ||
        j.at("format_version").get<int>() != kModelFormatVersion) {
      throw ParseError(0, "not an aspectlabel tagger model (format/version)");
    }
    model.template_version_ = j.at("template_version").get<int>();
    if (model.template_version_ != kFeatureTemplateVersion) {
      throw ParseError(0, "model uses feature template version " +
                              std::to_string(model.template_version_) +
                              ", this build extracts version " +
                              std::to_string(kFeatureTemplateVersion));
    }
    auto scheme = ParseScheme(j.at("scheme").get<std::string>());
    if (!scheme) throw ParseError(0, "unknown scheme in model");
    model.config_.scheme = *scheme;
    model.config_.epochs = j.at("train").at("epochs").get<int>();
    model.config_.seed = j.at("train").at("seed").get<uint64_t>();
    model.config_.shuffle = j.at("train").at("shuffle").get<bool>();
    model.uses_lemmas_ = j.at("uses_lemmas").get<bool>();

    model.tagset_.clear();
    for (const auto &name : j.at("tagset")) {
      auto tag = ParseTag(name.get<std::string>());
      if (!tag) throw ParseError(0, "unknown tag in model tagset");
      model.tagset_.push_back(*tag);
    }
    if (model.tagset_ != TagsetFor(model.config_.scheme)) {
      throw ParseError(0, "model tagset does not match its scheme");
    }
    for (const auto &[key, row] : j.at("weights").items()) {
      if (!row.is_array() || row.size() != model.tagset_.size()) {
        throw ParseError(0, "weight row for '" + key + "' has wrong size");
      }
      Weights w{};
      for (size_t t = 0; t < model.tagset_.size(); ++t) {
        double value = row[t].get<double>();
        if (!std::isfinite(value)) {
          throw ParseError(0, "non-finite weight for '" + key + "'");
        }
        w[static_cast<int>(model.tagset_[t])] = value;
      }
      model.averaged_[key] = w;
    }
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(0, std::string("malformed model file: ") + e.what());
  }
  // Raw weights are not persisted; a loaded model only predicts.
  model.weights_ = model.averaged_;
  return model;
}

TaggerModel Train(std::span<const LabelledSentence> data,
                  const TrainConfig &config) {
  config.Validate();
  if (data.empty()) throw Error("no training sentences");
  bool uses_lemmas = false;
  for (const LabelledSentence &ls : data) {
    if (ls.tags.size() != ls.sentence.tokens.size()) {
      throw Error("sentence '" + ls.sentence.id + "' has " +
                  std::to_string(ls.tags.size()) + " tags for " +
                  std::to_string(ls.sentence.tokens.size()) + " tokens");
    }
    if (config.scheme == LabelScheme::kOb) {
      for (IobTag tag : ls.tags) {
        if (tag == IobTag::kI) {
          throw Error("sentence '" + ls.sentence.id +
                      "' has I tags but the scheme is OB");
        }
      }
    }
    uses_lemmas = uses_lemmas || SentenceHasRealLemmas(ls.sentence);
  }

  TaggerModel model;
  model.config_ = config;
  model.tagset_ = TagsetFor(config.scheme);
  model.uses_lemmas_ = uses_lemmas;

  // Lemma-less data trains on the same lemma view Predict() will use.
  std::vector<Sentence> views;
  views.reserve(data.size());
  for (const LabelledSentence &ls : data) {
    views.push_back(ls.sentence);
    if (!uses_lemmas) {
      for (Token &t : views.back().tokens) t.lemma = ToLower(t.form);
    }
  }

  AveragingWeights weights;
  std::mt19937_64 rng(config.seed);
  std::vector<size_t> order(data.size());
  std::iota(order.begin(), order.end(), 0);
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    if (config.shuffle) {
      for (size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[Bounded(rng, i)]);
      }
    }
    for (size_t idx : order) {
      const Sentence &sentence = views[idx];
      const std::vector<IobTag> &gold = data[idx].tags;
      IobTag prev = IobTag::kO;
      for (int i = 1; i <= sentence.size(); ++i) {
        FeatureVector fv = ExtractFeatures(sentence, i, prev);
        IobTag truth = gold[i - 1];
        // A wrong tag that merely ties with the gold one still counts as a
        // mistake, so a converged model separates with a positive margin.
        const double truth_score = weights.Score(fv, truth);
        IobTag guess = truth;
        double guess_score = truth_score;
        for (IobTag tag : model.tagset_) {
          if (tag == truth) continue;
          double score = weights.Score(fv, tag);
          if (guess == truth ? score >= truth_score : score > guess_score) {
            guess = tag;
            guess_score = score;
          }
        }
        if (guess != truth) {
          weights.Update(fv, truth, 1.0);
          weights.Update(fv, guess, -1.0);
        }
        weights.Tick();
        prev = truth;
      }
    }
  }
  weights.Finish(&model.weights_, &model.averaged_);
  return model;
}

}  // namespace aspectlabel
