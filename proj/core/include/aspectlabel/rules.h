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

// Dependency rules that mark aspect terms.
//
// A token can only be marked if it passes the candidate filter: not a
// stopword, present in the pruned phrase list, and tagged with an allowed
// UPOS. Marking then runs in three phases.
//
//   1. Opinion-driven rules (one pass). With t_i the candidate:
//        R1  t_i -dobj-> t_j,  opinion(t_j)
//        R2  t_i -nsubj-> t_j, t_k -acomp-> t_j,  opinion(t_k)
//        R3  t_i -nsubj-> t_j, t_k -advmod-> t_j, opinion(t_k)
//        R4  t_i -pobj|dobj-> t_j, t_k -amod-> t_i, opinion(t_k)
//      where "a -d-> b" means a is the d-dependent of head b.
//   2. Propagation to a fixpoint. A candidate joined to an already marked
//      token by a cc/conj arc (R5) or a compound arc (R6) is marked, in
//      either arc direction.
//   3. Modifier extension. Each marked noun absorbs its contiguous left
//      amod/compound dependents that are neither stopwords nor opinion
//      words, so "internal speakers" is one target.

#ifndef ASPECTLABEL_RULES_H_
#define ASPECTLABEL_RULES_H_

#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "aspectlabel/corpus.h"
#include "aspectlabel/lexicon.h"
#include "aspectlabel/phrases.h"

namespace aspectlabel {

enum class RuleId {
  kDobjOpinion = 1,      // R1
  kSubjectComplement,    // R2
  kSubjectAdverb,        // R3
  kObjectModifier,       // R4
  kConjunctPropagation,  // R5
  kCompoundPropagation,  // R6
};

inline constexpr int kNumRules = 6;

// "R1".."R6".
std::string_view RuleName(RuleId rule);

struct CandidateFilter {
  std::set<std::string, std::less<>> stopwords;
  std::set<std::string, std::less<>> allowed_pos = {"NOUN", "PRON", "PROPN",
                                                    "ADJ",  "ADP",  "CONJ"};

  // Built-in English stopword list with the default POS set.
  static CandidateFilter Default();

  // Throws Error when allowed_pos is empty.
  void Validate() const;

  bool IsStopword(const Token &token) const;
};

// Replaces the filter's stopwords with a one-word-per-line list.
void LoadStopwords(std::istream &in, CandidateFilter *filter);

struct RuleMatch {
  int token_index = 0;
  RuleId rule = RuleId::kDobjOpinion;
  int trigger_index = 0;  // opinion word or already marked aspect

  bool operator==(const RuleMatch &) const = default;
};

// A Phase-3 mark: `token_index` is a left modifier of marked head
// `head_index`.
struct ModifierExtension {
  int token_index = 0;
  int head_index = 0;

  bool operator==(const ModifierExtension &) const = default;
};

struct RuleOutcome {
  std::set<int> marked;
  // One entry per index marked in Phases 1-2, with the first rule that fired,
  // ordered by phase, then propagation round, then index.
  std::vector<RuleMatch> matches;
  std::vector<ModifierExtension> extensions;
  int propagation_rounds = 0;  // Phase-2 rounds that added marks
};

// True when `dependent` is the `relation`-dependent of `head`.
bool Depends(std::string_view relation, const Token &dependent,
             const Token &head);

bool IsCandidate(const Token &token, const PhraseList &candidates,
                 const CandidateFilter &filter);

RuleOutcome ApplyRules(const Sentence &sentence,
                       const SentimentLexicon &lexicon,
                       const PhraseList &candidates,
                       const CandidateFilter &filter);

// Replays the predicate of `match` against the sentence. Propagation rules
// read is_aspect from `marked`.
bool RecheckMatch(const Sentence &sentence, const RuleMatch &match,
                  const SentimentLexicon &lexicon,
                  const std::set<int> &marked);

// {"sentence_id":..,"matches":[{"index":..,"rule":"R2","trigger":..}],
//  "extensions":[{"index":..,"head":..}]} on one line.
std::string MatchesJsonLine(const Sentence &sentence,
                            const RuleOutcome &outcome);

}  // namespace aspectlabel

#endif  // ASPECTLABEL_RULES_H_
