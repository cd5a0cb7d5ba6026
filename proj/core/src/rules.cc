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

#include "aspectlabel/rules.h"

#include <istream>
#include <optional>
#include <sstream>

#include "aspectlabel/text.h"
#include "embedded_data.h"
#include "json.hpp"

namespace aspectlabel {

namespace {

bool IsNoun(const Token &token) {
  return token.upos == "NOUN" || token.upos == "PROPN";
}

// Dependents of every token, 1-based, in index order.
std::vector<std::vector<int>> Children(const Sentence &sentence) {
  std::vector<std::vector<int>> children(sentence.size() + 1);
  for (const Token &t : sentence.tokens) children[t.head].push_back(t.index);
  return children;
}

// Lowest-index dependent of `head` with `relation` that is an opinion word.
std::optional<int> OpinionDependent(const Sentence &sentence,
                                    const std::vector<int> &children,
                                    std::string_view relation,
                                    const SentimentLexicon &lexicon) {
  for (int k : children) {
    const Token &t = sentence.at(k);
    if (t.deprel == relation && IsOpinionWord(lexicon, t)) return k;
  }
  return std::nullopt;
}

std::optional<RuleMatch> MatchOpinionRules(
    const Sentence &sentence, const Token &token,
    const std::vector<std::vector<int>> &children,
    const SentimentLexicon &lexicon) {
  const int i = token.index;
  if (token.head == 0) return std::nullopt;
  const int j = token.head;
  const Token &head = sentence.at(j);

  if (token.deprel == "dobj" && IsOpinionWord(lexicon, head)) {
    return RuleMatch{i, RuleId::kDobjOpinion, j};
  }
  if (token.deprel == "nsubj") {
    if (auto k = OpinionDependent(sentence, children[j], "acomp", lexicon)) {
      return RuleMatch{i, RuleId::kSubjectComplement, *k};
    }
    if (auto k = OpinionDependent(sentence, children[j], "advmod", lexicon)) {
      return RuleMatch{i, RuleId::kSubjectAdverb, *k};
    }
  }
  if (token.deprel == "pobj" || token.deprel == "dobj") {
    if (auto k = OpinionDependent(sentence, children[i], "amod", lexicon)) {
      return RuleMatch{i, RuleId::kObjectModifier, *k};
    }
  }
  return std::nullopt;
}

bool IsConjunctArc(const Token &dependent) {
  return dependent.deprel == "cc" || dependent.deprel == "conj";
}

bool IsCompoundArc(const Token &dependent) {
  return dependent.deprel == "compound";
}

// Lowest-index marked neighbour of `token` over an arc accepted by `arc`
// (checked on the dependent side), looking both up and down.
template <typename ArcPredicate>
std::optional<int> MarkedNeighbour(const Sentence &sentence, const Token &token,
                                   const std::vector<int> &children,
                                   const std::set<int> &marked,
                                   ArcPredicate arc) {
  std::optional<int> best;
  if (token.head != 0 && arc(token) && marked.contains(token.head)) {
    best = token.head;
  }
  for (int c : children) {
    if (best && c > *best) break;
    if (arc(sentence.at(c)) && marked.contains(c)) {
      best = c;
      break;
    }
  }
  return best;
}

}  // namespace

std::string_view RuleName(RuleId rule) {
  switch (rule) {
    case RuleId::kDobjOpinion:
      return "R1";
    case RuleId::kSubjectComplement:
      return "R2";
    case RuleId::kSubjectAdverb:
      return "R3";
    case RuleId::kObjectModifier:
      return "R4";
    case RuleId::kConjunctPropagation:
      return "R5";
    case RuleId::kCompoundPropagation:
      return "R6";
  }
  return "?";
}

CandidateFilter CandidateFilter::Default() {
  CandidateFilter filter;
  std::istringstream in{std::string(embedded::kStopwordsEn)};
  ReadWordList(in, &filter.stopwords);
  return filter;
}

void CandidateFilter::Validate() const {
  if (allowed_pos.empty()) throw Error("candidate filter has no allowed POS");
}

bool CandidateFilter::IsStopword(const Token &token) const {
  return stopwords.contains(ToLower(token.form));
}

void LoadStopwords(std::istream &in, CandidateFilter *filter) {
  filter->stopwords.clear();
  ReadWordList(in, &filter->stopwords);
}

bool Depends(std::string_view relation, const Token &dependent,
             const Token &head) {
  return dependent.head == head.index && dependent.deprel == relation;
}

bool IsCandidate(const Token &token, const PhraseList &candidates,
                 const CandidateFilter &filter) {
  std::string form = ToLower(token.form);
  if (filter.stopwords.contains(form)) return false;
  if (!candidates.Contains(form) && !candidates.Contains(token.lemma)) {
    return false;
  }
  return filter.allowed_pos.contains(token.upos);
}

RuleOutcome ApplyRules(const Sentence &sentence,
                       const SentimentLexicon &lexicon,
                       const PhraseList &candidates,
                       const CandidateFilter &filter) {
  RuleOutcome outcome;
  const int n = sentence.size();
  if (n == 0) return outcome;
  const auto children = Children(sentence);
  std::vector<bool> candidate(n + 1, false);
  for (const Token &t : sentence.tokens) {
    candidate[t.index] = IsCandidate(t, candidates, filter);
  }

  for (const Token &t : sentence.tokens) {
    if (!candidate[t.index]) continue;
    if (auto match = MatchOpinionRules(sentence, t, children, lexicon)) {
      outcome.marked.insert(t.index);
      outcome.matches.push_back(*match);
    }
  }

  // Each round reads the marks of the previous round only, so the result
  // does not depend on the scan order. At most n rounds can add anything.
  for (int round = 0; round < n && !outcome.marked.empty(); ++round) {
    std::vector<RuleMatch> added;
    for (const Token &t : sentence.tokens) {
      if (!candidate[t.index] || outcome.marked.contains(t.index)) continue;
      const auto &kids = children[t.index];
      if (auto j = MarkedNeighbour(sentence, t, kids, outcome.marked,
                                   IsConjunctArc)) {
        added.push_back({t.index, RuleId::kConjunctPropagation, *j});
      } else if (auto j = MarkedNeighbour(sentence, t, kids, outcome.marked,
                                          IsCompoundArc)) {
        added.push_back({t.index, RuleId::kCompoundPropagation, *j});
      }
    }
    if (added.empty()) break;
    for (const RuleMatch &m : added) {
      outcome.marked.insert(m.token_index);
      outcome.matches.push_back(m);
    }
    ++outcome.propagation_rounds;
  }

  const std::set<int> heads = outcome.marked;
  for (int h : heads) {
    if (!IsNoun(sentence.at(h))) continue;
    for (int j = h - 1; j >= 1; --j) {
      const Token &t = sentence.at(j);
      if (t.head != h || (t.deprel != "amod" && t.deprel != "compound")) break;
      if (filter.IsStopword(t) || IsOpinionWord(lexicon, t)) break;
      if (outcome.marked.insert(j).second) {
        outcome.extensions.push_back({j, h});
      }
    }
  }
  return outcome;
}

bool RecheckMatch(const Sentence &sentence, const RuleMatch &match,
                  const SentimentLexicon &lexicon,
                  const std::set<int> &marked) {
  const int n = sentence.size();
  if (match.token_index < 1 || match.token_index > n ||
      match.trigger_index < 1 || match.trigger_index > n ||
      match.token_index == match.trigger_index) {
    return false;
  }
  const Token &ti = sentence.at(match.token_index);
  const Token &trigger = sentence.at(match.trigger_index);
  auto head_of = [&](const Token &t) -> const Token * {
    return t.head == 0 ? nullptr : &sentence.at(t.head);
  };
  switch (match.rule) {
    case RuleId::kDobjOpinion:
      return Depends("dobj", ti, trigger) && IsOpinionWord(lexicon, trigger);
    case RuleId::kSubjectComplement:
    case RuleId::kSubjectAdverb: {
      const Token *tj = head_of(ti);
      std::string_view rel =
          match.rule == RuleId::kSubjectComplement ? "acomp" : "advmod";
      return tj != nullptr && Depends("nsubj", ti, *tj) &&
             Depends(rel, trigger, *tj) && IsOpinionWord(lexicon, trigger);
    }
    case RuleId::kObjectModifier: {
      const Token *tj = head_of(ti);
      return tj != nullptr &&
             (Depends("pobj", ti, *tj) || Depends("dobj", ti, *tj)) &&
             Depends("amod", trigger, ti) && IsOpinionWord(lexicon, trigger);
    }
    case RuleId::kConjunctPropagation:
      return marked.contains(match.trigger_index) &&
             (Depends("cc", ti, trigger) || Depends("conj", ti, trigger) ||
              Depends("cc", trigger, ti) || Depends("conj", trigger, ti));
    case RuleId::kCompoundPropagation:
      return marked.contains(match.trigger_index) &&
             (Depends("compound", ti, trigger) ||
              Depends("compound", trigger, ti));
  }
  return false;
}

std::string MatchesJsonLine(const Sentence &sentence,
                            const RuleOutcome &outcome) {
  nlohmann::ordered_json line;
  line["sentence_id"] = sentence.id;
  line["matches"] = nlohmann::ordered_json::array();
  for (const RuleMatch &m : outcome.matches) {
    line["matches"].push_back({{"index", m.token_index},
                               {"rule", std::string(RuleName(m.rule))},
                               {"trigger", m.trigger_index}});
  }
  line["extensions"] = nlohmann::ordered_json::array();
  for (const ModifierExtension &e : outcome.extensions) {
    line["extensions"].push_back(
        {{"index", e.token_index}, {"head", e.head_index}});
  }
  return line.dump();
}

}  // namespace aspectlabel
