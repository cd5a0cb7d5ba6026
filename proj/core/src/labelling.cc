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

#include "aspectlabel/labelling.h"

#include <istream>
#include <ostream>

#include "aspectlabel/text.h"

namespace aspectlabel {

char TagChar(IobTag tag) {
  switch (tag) {
    case IobTag::kO:
      return 'O';
    case IobTag::kB:
      return 'B';
    case IobTag::kI:
      return 'I';
  }
  return '?';
}

std::optional<IobTag> ParseTag(std::string_view s) {
  if (s == "O") return IobTag::kO;
  if (s == "B") return IobTag::kB;
  if (s == "I") return IobTag::kI;
  return std::nullopt;
}

std::string_view SchemeName(LabelScheme scheme) {
  return scheme == LabelScheme::kIob ? "iob" : "ob";
}

std::optional<LabelScheme> ParseScheme(std::string_view s) {
  std::string lower = ToLower(s);
  if (lower == "iob") return LabelScheme::kIob;
  if (lower == "ob") return LabelScheme::kOb;
  return std::nullopt;
}

bool IsWellFormedIob(std::span<const IobTag> tags) {
  IobTag prev = IobTag::kO;
  for (IobTag tag : tags) {
    if (tag == IobTag::kI && prev == IobTag::kO) return false;
    prev = tag;
  }
  return true;
}

LabelledSentence AssignIob(const Sentence &sentence,
                           const std::set<int> &marked) {
  LabelledSentence labelled{sentence,
                            std::vector<IobTag>(sentence.tokens.size())};
  for (int index : marked) {
    if (index < 1 || index > sentence.size()) {
      throw Error("sentence '" + sentence.id + "': marked index " +
                  std::to_string(index) + " is out of range");
    }
    labelled.tags[index - 1] =
        marked.contains(index - 1) ? IobTag::kI : IobTag::kB;
  }
  return labelled;
}

LabelledSentence ToOb(LabelledSentence labelled) {
  for (IobTag &tag : labelled.tags) {
    if (tag == IobTag::kI) tag = IobTag::kB;
  }
  return labelled;
}

void RepairIob(std::vector<IobTag> *tags) {
  IobTag prev = IobTag::kO;
  for (IobTag &tag : *tags) {
    if (tag == IobTag::kI && prev == IobTag::kO) tag = IobTag::kB;
    prev = tag;
  }
}

std::vector<LabelledSentence> LabelCorpusWithCandidates(
    const Corpus &corpus, const PhraseList &candidates,
    const SentimentLexicon &lexicon, const CandidateFilter &filter,
    LabelScheme scheme, std::vector<RuleOutcome> *outcomes) {
  filter.Validate();
  std::vector<LabelledSentence> labelled;
  labelled.reserve(corpus.sentences.size());
  if (outcomes != nullptr) {
    outcomes->clear();
    outcomes->reserve(corpus.sentences.size());
  }
  for (const Sentence &sentence : corpus.sentences) {
    RuleOutcome outcome = ApplyRules(sentence, lexicon, candidates, filter);
    LabelledSentence ls = AssignIob(sentence, outcome.marked);
    if (scheme == LabelScheme::kOb) ls = ToOb(std::move(ls));
    labelled.push_back(std::move(ls));
    if (outcomes != nullptr) outcomes->push_back(std::move(outcome));
  }
  return labelled;
}

std::vector<LabelledSentence> LabelCorpus(const Corpus &corpus,
                                          const PhraseList &phrases,
                                          double q_th,
                                          const SentimentLexicon &lexicon,
                                          const CandidateFilter &filter,
                                          LabelScheme scheme,
                                          std::vector<RuleOutcome> *outcomes) {
  PhraseList candidates = Prune(phrases, q_th);
  return LabelCorpusWithCandidates(corpus, candidates, lexicon, filter, scheme,
                                   outcomes);
}

void WriteConll(std::span<const LabelledSentence> labelled,
                std::ostream &out) {
  for (const LabelledSentence &ls : labelled) {
    for (size_t i = 0; i < ls.tags.size(); ++i) {
      out << ls.sentence.tokens[i].form << '\t' << TagChar(ls.tags[i]) << '\n';
    }
    out << '\n';
  }
}

std::vector<LabelledSentence> ReadConll(std::istream &in) {
  std::vector<LabelledSentence> result;
  LabelledSentence current;
  auto flush = [&] {
    if (current.tags.empty()) return;
    current.sentence.id = std::to_string(result.size() + 1);
    result.push_back(std::move(current));
    current = LabelledSentence();
  };
  std::string raw;
  size_t line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    std::string_view line = StripCarriageReturn(raw);
    if (Trim(line).empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') continue;
    std::vector<std::string_view> cols = Split(line, '\t');
    if (cols.size() != 2) {
      throw ParseError(line_number, "expected 'form<TAB>tag'");
    }
    std::optional<IobTag> tag = ParseTag(Trim(cols[1]));
    if (!tag) {
      throw ParseError(line_number,
                       "unknown tag '" + std::string(cols[1]) + "'");
    }
    Token token;
    token.index = current.sentence.size() + 1;
    token.form = std::string(cols[0]);
    token.lemma = ToLower(token.form);
    current.sentence.tokens.push_back(std::move(token));
    current.tags.push_back(*tag);
  }
  flush();
  return result;
}

std::string FormatInline(const LabelledSentence &labelled) {
  std::string out;
  for (size_t i = 0; i < labelled.tags.size(); ++i) {
    out += '(';
    out += labelled.sentence.tokens[i].form;
    out += '|';
    out += TagChar(labelled.tags[i]);
    out += ')';
  }
  return out;
}

}  // namespace aspectlabel
