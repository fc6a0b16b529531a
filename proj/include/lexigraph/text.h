// Copyright 2026 The Lexigraph Authors.
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

#ifndef LEXIGRAPH_TEXT_H_
#define LEXIGRAPH_TEXT_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lexigraph {

// Collapses runs of whitespace to one space and trims both ends.
std::string NormalizeSpace(std::string_view text);

std::string ToLower(std::string_view text);
std::string ToUpper(std::string_view text);
std::string Trim(std::string_view text);

// Splits on a single character; empty fields are kept.
std::vector<std::string> Split(std::string_view text, char sep);

// Joins with a separator.
std::string Join(const std::vector<std::string> &parts, std::string_view sep);

// Splits text into word tokens. Parentheses and commas become their own
// tokens; periods stay attached to abbreviations such as "usu.".
std::vector<std::string> Tokenize(std::string_view text);

// Splits a restriction phrase such as "form, appearance, position, state, or
// stage" into its alternatives. Parenthesized examples and a trailing "etc."
// are dropped.
std::set<std::string> SplitAlternatives(std::string_view phrase);

// Head word of a noun phrase: the last word before a post-modifier
// ("of", "that", ...), with leading articles skipped.
std::string HeadWord(std::string_view phrase);

// True if the word is an article or similar determiner.
bool IsDeterminer(std::string_view word);

bool StartsWith(std::string_view text, std::string_view prefix);
bool EndsWith(std::string_view text, std::string_view suffix);

}  // namespace lexigraph

#endif  // LEXIGRAPH_TEXT_H_
