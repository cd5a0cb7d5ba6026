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

#ifndef ASPECTLABEL_TEXT_H_
#define ASPECTLABEL_TEXT_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aspectlabel {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text that does not follow one of the supported file formats. The
// line number is 1-based; 0 means the error is not tied to a single line.
class ParseError : public Error {
 public:
  ParseError(size_t line, const std::string &message);

  size_t line() const { return line_; }

 private:
  size_t line_;
};

// ASCII lowercasing. Bytes outside [A-Z] (including UTF-8 sequences) are
// copied through unchanged.
std::string ToLower(std::string_view s);

std::string_view Trim(std::string_view s);

// Trims and collapses internal whitespace runs to a single space.
std::string NormalizeSpaces(std::string_view s);

std::vector<std::string_view> Split(std::string_view s, char sep);

// Strips a trailing '\r' so CRLF input reads like LF input.
std::string_view StripCarriageReturn(std::string_view line);

// True for a non-empty string of ASCII bytes with no letter or digit. Any
// byte >= 0x80 makes the string a word.
bool IsPunctuation(std::string_view s);

// Full-string integer and real parsing; return false on any trailing junk.
bool ParseInt(std::string_view s, int *out);
bool ParseDouble(std::string_view s, double *out);

}  // namespace aspectlabel

#endif  // ASPECTLABEL_TEXT_H_
