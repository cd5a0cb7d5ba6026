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

#include "aspectlabel/corpus.h"

#include <istream>
#include <ostream>
#include <regex>
#include <sstream>
#include <unordered_set>

#include "aspectlabel/text.h"

namespace aspectlabel {

namespace {

constexpr size_t kConlluColumns = 10;

// Value of a "# key = value" comment, or false if the line is another key.
bool CommentValue(std::string_view line, std::string_view key,
                  std::string *value) {
  line.remove_prefix(1);  // '#'
  line = Trim(line);
  if (line.substr(0, key.size()) != key) return false;
  std::string_view rest = Trim(line.substr(key.size()));
  if (rest.empty() || rest.front() != '=') return false;
  *value = std::string(Trim(rest.substr(1)));
  return true;
}

class ConlluReader {
 public:
  Corpus Read(std::istream &in) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_number_;
      std::string_view line = StripCarriageReturn(raw);
      if (Trim(line).empty()) {
        Flush();
      } else if (line.front() == '#') {
        ReadComment(line);
      } else {
        ReadToken(line);
      }
    }
    Flush();
    return std::move(corpus_);
  }

 private:
  void ReadComment(std::string_view line) {
    // Comments inside a token block carry no sentence metadata.
    if (!current_.tokens.empty()) return;
    std::string value;
    if (CommentValue(line, "sent_id", &value)) {
      current_.id = value;
      id_line_ = line_number_;
    } else if (CommentValue(line, "text", &value)) {
      current_.text = value;
    }
  }

  void ReadToken(std::string_view line) {
    std::vector<std::string_view> cols = Split(line, '\t');
    if (cols.size() != kConlluColumns) {
      throw ParseError(line_number_,
                       "expected " + std::to_string(kConlluColumns) +
                           " tab-separated columns, found " +
                           std::to_string(cols.size()));
    }
    std::string_view id = cols[0];
    if (id.find('-') != std::string_view::npos ||
        id.find('.') != std::string_view::npos) {
      return;  // multiword token range or empty node
    }
    Token token;
    if (!ParseInt(id, &token.index)) {
      throw ParseError(line_number_,
                       "non-integer token ID '" + std::string(id) + "'");
    }
    if (token.index != current_.size() + 1) {
      throw ParseError(line_number_,
                       "token ID " + std::to_string(token.index) +
                           " breaks the 1..n sequence (expected " +
                           std::to_string(current_.size() + 1) + ")");
    }
    if (!ParseInt(cols[6], &token.head)) {
      throw ParseError(line_number_,
                       "non-integer HEAD '" + std::string(cols[6]) + "'");
    }
    if (token.head < 0) {
      throw ParseError(line_number_, "negative HEAD");
    }
    if (token.head == token.index) {
      throw ParseError(line_number_, "token is its own head");
    }
    token.form = std::string(cols[1]);
    token.lemma = cols[2] == "_" ? ToLower(token.form) : ToLower(cols[2]);
    token.upos = std::string(cols[3]);
    token.deprel = std::string(cols[7]);
    if (current_.tokens.empty()) first_token_line_ = line_number_;
    token_lines_.push_back(line_number_);
    current_.tokens.push_back(std::move(token));
  }

  void Flush() {
    if (current_.tokens.empty()) {
      // Comment-only block: metadata does not carry to the next sentence.
      current_ = Sentence();
      return;
    }
    bool has_root = false;
    for (size_t i = 0; i < current_.tokens.size(); ++i) {
      const Token &token = current_.tokens[i];
      if (token.head > current_.size()) {
        throw ParseError(token_lines_[i],
                         "HEAD " + std::to_string(token.head) +
                             " is out of range for a sentence of " +
                             std::to_string(current_.size()) + " tokens");
      }
      if (token.head == 0) has_root = true;
    }
    if (!has_root) {
      throw ParseError(first_token_line_, "sentence has no root token");
    }
    size_t id_line = first_token_line_;
    if (current_.id.empty()) {
      current_.id = std::to_string(corpus_.sentences.size() + 1);
    } else {
      id_line = id_line_;
    }
    if (!seen_ids_.insert(current_.id).second) {
      throw ParseError(id_line, "duplicate sentence id '" + current_.id + "'");
    }
    corpus_.sentences.push_back(std::move(current_));
    current_ = Sentence();
    token_lines_.clear();
  }

  Corpus corpus_;
  Sentence current_;
  std::vector<size_t> token_lines_;
  std::unordered_set<std::string> seen_ids_;
  size_t line_number_ = 0;
  size_t first_token_line_ = 0;
  size_t id_line_ = 0;
};

}  // namespace

Corpus ParseConllu(std::istream &in) { return ConlluReader().Read(in); }

Corpus ParseConlluString(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseConllu(in);
}

void WriteConllu(const Corpus &corpus, std::ostream &out) {
  for (const Sentence &sentence : corpus.sentences) {
    out << "# sent_id = " << sentence.id << '\n';
    if (!sentence.text.empty()) out << "# text = " << sentence.text << '\n';
    for (const Token &t : sentence.tokens) {
      out << t.index << '\t' << t.form << '\t' << t.lemma << '\t' << t.upos
          << "\t_\t_\t" << t.head << '\t' << t.deprel << "\t_\t_\n";
    }
    out << '\n';
  }
}

void ValidateSentence(const Sentence &sentence) {
  auto fail = [&](const std::string &what) {
    throw Error("sentence '" + sentence.id + "': " + what);
  };
  bool has_root = false;
  for (int i = 1; i <= sentence.size(); ++i) {
    const Token &t = sentence.at(i);
    if (t.index != i) fail("token indices are not 1..n");
    if (t.head < 0 || t.head > sentence.size()) fail("head out of range");
    if (t.head == t.index) fail("token is its own head");
    if (t.head == 0) has_root = true;
  }
  if (!sentence.empty() && !has_root) fail("no root token");
}

std::string CleanReview(std::string_view text) {
  static const std::regex kUrl(R"((https?://|www\.)\S*)");
  std::string stripped =
      std::regex_replace(std::string(text), kUrl, std::string());
  return NormalizeSpaces(stripped);
}

}  // namespace aspectlabel
