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

#include "aspectlabel/fixtures.h"

#include <map>
#include <sstream>

#include "aspectlabel/eval.h"
#include "aspectlabel/text.h"
#include "embedded_data.h"

namespace aspectlabel {

namespace {

struct Expectation {
  std::vector<std::string> targets;
  std::string iob;
};

std::map<std::string, Expectation> ParseExpectations(std::string_view text) {
  std::map<std::string, Expectation> out;
  size_t line_number = 0;
  for (std::string_view raw : Split(text, '\n')) {
    ++line_number;
    std::string_view line = StripCarriageReturn(raw);
    if (Trim(line).empty() || line.front() == '#') continue;
    std::vector<std::string_view> cols = Split(line, '\t');
    if (cols.size() != 3) {
      throw ParseError(line_number, "fixture expectation needs 3 columns");
    }
    Expectation e;
    if (!Trim(cols[1]).empty()) {
      for (std::string_view target : Split(cols[1], '|')) {
        e.targets.push_back(NormalizeSpaces(ToLower(target)));
      }
    }
    e.iob = std::string(Trim(cols[2]));
    if (!out.emplace(std::string(cols[0]), std::move(e)).second) {
      throw ParseError(line_number,
                       "duplicate fixture '" + std::string(cols[0]) + "'");
    }
  }
  return out;
}

}  // namespace

std::vector<std::pair<std::string, IobTag>> ParseInline(std::string_view line) {
  std::vector<std::pair<std::string, IobTag>> out;
  size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] != '(') throw Error("inline IOB: expected '('");
    size_t close = line.find(')', pos);
    size_t bar = line.rfind('|', close);
    if (close == std::string_view::npos || bar == std::string_view::npos ||
        bar < pos) {
      throw Error("inline IOB: unterminated '(form|tag)' item");
    }
    auto tag = ParseTag(line.substr(bar + 1, close - bar - 1));
    if (!tag) throw Error("inline IOB: unknown tag");
    out.emplace_back(std::string(line.substr(pos + 1, bar - pos - 1)), *tag);
    pos = close + 1;
    while (pos < line.size() && line[pos] == ' ') ++pos;
  }
  return out;
}

std::vector<std::string> TargetTexts(const LabelledSentence &labelled) {
  std::vector<std::string> texts;
  for (const Span &span : ExtractSpans(labelled)) {
    std::string text;
    for (int i = span.start; i <= span.end; ++i) {
      if (i > span.start) text += ' ';
      text += ToLower(labelled.sentence.at(i).form);
    }
    texts.push_back(std::move(text));
  }
  return texts;
}

std::vector<FixtureCase> LoadFixtures() {
  Corpus corpus = ParseConlluString(embedded::kFixtureConllu);
  std::map<std::string, Expectation> expectations =
      ParseExpectations(embedded::kFixtureExpected);
  if (corpus.sentences.size() != expectations.size()) {
    throw Error("fixture parses and expectations disagree in count");
  }
  std::vector<FixtureCase> cases;
  for (const Sentence &sentence : corpus.sentences) {
    auto it = expectations.find(sentence.id);
    if (it == expectations.end()) {
      throw Error("fixture '" + sentence.id + "' has no expectation");
    }
    FixtureCase fc;
    fc.name = sentence.id;
    fc.sentence = sentence;
    std::ostringstream block;
    WriteConllu(Corpus{{sentence}, "fixture"}, block);
    fc.conllu = block.str();
    fc.expected_targets = it->second.targets;
    fc.expected_iob = it->second.iob;

    auto items = ParseInline(fc.expected_iob);
    if (static_cast<int>(items.size()) != sentence.size()) {
      throw Error("fixture '" + fc.name + "': IOB line has " +
                  std::to_string(items.size()) + " tokens, parse has " +
                  std::to_string(sentence.size()));
    }
    LabelledSentence expected{sentence, {}};
    for (int i = 1; i <= sentence.size(); ++i) {
      if (items[i - 1].first != sentence.at(i).form) {
        throw Error("fixture '" + fc.name + "': IOB token " +
                    std::to_string(i) + " is '" + items[i - 1].first +
                    "', parse has '" + sentence.at(i).form + "'");
      }
      expected.tags.push_back(items[i - 1].second);
    }
    if (!IsWellFormedIob(expected.tags) ||
        TargetTexts(expected) != fc.expected_targets) {
      throw Error("fixture '" + fc.name +
                  "': IOB line does not spell the expected targets");
    }
    cases.push_back(std::move(fc));
  }
  return cases;
}

Corpus FixtureCorpus() {
  Corpus corpus;
  corpus.domain_tag = "fixture";
  for (FixtureCase &fc : LoadFixtures()) {
    corpus.sentences.push_back(std::move(fc.sentence));
  }
  return corpus;
}

SentimentLexicon FixtureLexicon() {
  std::istringstream positive{std::string(embedded::kFixturePositive)};
  std::istringstream negative{std::string(embedded::kFixtureNegative)};
  return LoadLexicon(positive, negative);
}

PhraseList FixturePhrases() {
  std::istringstream in{std::string(embedded::kFixturePhrases)};
  return LoadPhraseList(in);
}

}  // namespace aspectlabel
