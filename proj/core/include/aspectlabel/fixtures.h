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

// Reference parses for the six rule patterns and the IOB layout example.
//
// The parses live in data/fixtures/table_rules.conllu and the expectations
// in the sidecar data/fixtures/table_rules.expected, one tab-separated line
// per case: sent_id, targets joined by " | ", and the inline IOB rendering.
// Both files are compiled into the library.

#ifndef ASPECTLABEL_FIXTURES_H_
#define ASPECTLABEL_FIXTURES_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aspectlabel/corpus.h"
#include "aspectlabel/labelling.h"
#include "aspectlabel/lexicon.h"
#include "aspectlabel/phrases.h"

namespace aspectlabel {

struct FixtureCase {
  std::string name;  // sent_id in the CoNLL-U block
  Sentence sentence;
  std::string conllu;  // the case's own CoNLL-U block
  std::vector<std::string> expected_targets;
  std::string expected_iob;  // "(The|O)(internal|B)..."
};

// Parses and cross-checks every case; throws Error if a case is missing its
// block or expectation, or if its IOB line disagrees with its sentence or
// target list.
std::vector<FixtureCase> LoadFixtures();

// All cases as one corpus, in file order.
Corpus FixtureCorpus();

// {like, amazing, perfectly, great, good, love} / {awful}.
SentimentLexicon FixtureLexicon();

// Quality phrases covering every fixture target noun plus low-quality noise.
PhraseList FixturePhrases();

// Lowercased, space-joined surface text of every chunk, in order.
std::vector<std::string> TargetTexts(const LabelledSentence &labelled);

// Inverse of FormatInline. Throws Error on malformed input.
std::vector<std::pair<std::string, IobTag>> ParseInline(std::string_view line);

}  // namespace aspectlabel

#endif  // ASPECTLABEL_FIXTURES_H_
