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

// Dependency-parsed review text and its CoNLL-U reader.
//
// Parses are consumed, never produced: any parser that can emit CoNLL-U
// (ID, FORM, LEMMA, UPOS, HEAD, DEPREL are the columns read) can feed the
// labelling pipeline. Multiword-token ranges ("3-4") and empty nodes ("3.1")
// are skipped.

#ifndef ASPECTLABEL_CORPUS_H_
#define ASPECTLABEL_CORPUS_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace aspectlabel {

struct Token {
  int index = 0;  // 1-based position in the sentence
  std::string form;
  std::string lemma;  // lowercase; falls back to lowercased form
  std::string upos;
  int head = 0;  // 0 = root
  std::string deprel;

  bool operator==(const Token &) const = default;
};

struct Sentence {
  std::string id;
  std::vector<Token> tokens;
  std::string text;  // optional raw text ("# text =" comment)

  int size() const { return static_cast<int>(tokens.size()); }
  bool empty() const { return tokens.empty(); }

  // 1-based access. Caller guarantees 1 <= index <= size().
  const Token &at(int index) const { return tokens[index - 1]; }

  bool operator==(const Sentence &) const = default;
};

struct Corpus {
  std::vector<Sentence> sentences;
  std::string domain_tag;

  bool operator==(const Corpus &) const = default;
};

// Reads CoNLL-U. The sentence id comes from "# sent_id =" when present and
// from the 1-based sentence ordinal otherwise. Throws ParseError with the
// offending line number on wrong column counts, non-integer ID/HEAD,
// non-contiguous IDs, self-loops, heads past the sentence end, rootless
// sentences and duplicate sentence ids. Empty input yields an empty corpus.
Corpus ParseConllu(std::istream &in);
Corpus ParseConlluString(std::string_view text);

// Writes the columns the reader uses; every other column is "_".
void WriteConllu(const Corpus &corpus, std::ostream &out);

// Checks the Token/Sentence invariants; throws Error naming the sentence.
void ValidateSentence(const Sentence &sentence);

// Removes http://, https:// and www. runs (up to the next whitespace),
// collapses whitespace and trims.
std::string CleanReview(std::string_view text);

}  // namespace aspectlabel

#endif  // ASPECTLABEL_CORPUS_H_
