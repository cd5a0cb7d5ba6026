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

// IOB tagging of rule-marked tokens and whole-corpus automatic labelling.

#ifndef ASPECTLABEL_LABELLING_H_
#define ASPECTLABEL_LABELLING_H_

#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aspectlabel/corpus.h"
#include "aspectlabel/lexicon.h"
#include "aspectlabel/phrases.h"
#include "aspectlabel/rules.h"

namespace aspectlabel {

// Declaration order is the decoder's tie-break order.
enum class IobTag { kO = 0, kB = 1, kI = 2 };

inline constexpr int kNumTags = 3;

char TagChar(IobTag tag);
std::optional<IobTag> ParseTag(std::string_view s);

// kOb is the relaxed scheme in which every I is rewritten as B.
enum class LabelScheme { kIob, kOb };

std::string_view SchemeName(LabelScheme scheme);  // "iob" / "ob"
std::optional<LabelScheme> ParseScheme(std::string_view s);

struct LabelledSentence {
  Sentence sentence;
  std::vector<IobTag> tags;

  bool operator==(const LabelledSentence &) const = default;
};

// No I at the start or right after an O.
bool IsWellFormedIob(std::span<const IobTag> tags);

// Maximal runs of consecutive marked indices become B I I ...; everything
// else is O. Throws Error if an index is outside 1..size.
LabelledSentence AssignIob(const Sentence &sentence,
                           const std::set<int> &marked);

LabelledSentence ToOb(LabelledSentence labelled);

// Leading I and I after O become B.
void RepairIob(std::vector<IobTag> *tags);

// Prune once, then rules -> IOB (-> OB) per sentence. When `outcomes` is
// non-null it receives the rule outcome of every sentence, in order.
std::vector<LabelledSentence> LabelCorpus(
    const Corpus &corpus, const PhraseList &phrases, double q_th,
    const SentimentLexicon &lexicon, const CandidateFilter &filter,
    LabelScheme scheme, std::vector<RuleOutcome> *outcomes = nullptr);

// Same, with an already pruned candidate list.
std::vector<LabelledSentence> LabelCorpusWithCandidates(
    const Corpus &corpus, const PhraseList &candidates,
    const SentimentLexicon &lexicon, const CandidateFilter &filter,
    LabelScheme scheme, std::vector<RuleOutcome> *outcomes = nullptr);

// Two-column "form<TAB>tag" lines with a blank line after every sentence.
void WriteConll(std::span<const LabelledSentence> labelled, std::ostream &out);

// Reads the two-column format back. Sentences get 1-based ordinal ids;
// lemmas are the lowercased forms, other parse fields are empty. Lines
// starting with '#' are skipped. Throws ParseError on bad lines.
std::vector<LabelledSentence> ReadConll(std::istream &in);

// "(The|O)(internal|B)(speakers|I)" rendering used by fixtures and logs.
std::string FormatInline(const LabelledSentence &labelled);

}  // namespace aspectlabel

#endif  // ASPECTLABEL_LABELLING_H_
