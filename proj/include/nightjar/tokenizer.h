// Copyright 2026 The Nightjar Authors.
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

#ifndef NIGHTJAR_TOKENIZER_H_
#define NIGHTJAR_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

#include "nightjar/core.h"

namespace nightjar {

enum class TokenKind { kWord, kMention, kHashtag, kUrlLike, kNumber, kPunct, kOther };

std::string_view TokenKindName(TokenKind kind);

struct Token {
  Span span;
  std::wstring text;
  TokenKind kind = TokenKind::kOther;

  friend bool operator==(const Token&, const Token&) = default;
};

// Tweet-aware tokenizer. Boundary conventions:
//  - whitespace separates tokens and never belongs to one;
//  - http(s):// and www. runs, bare shortener links and email addresses are
//    single URLLIKE tokens, minus trailing sentence punctuation;
//  - '@' or '#' followed by word characters forms a MENTION or HASHTAG, but
//    only when not preceded by a word character;
//  - a run of word characters is a WORD, or a NUMBER when all digits; digit
//    groups joined by one of . , : / - stay one NUMBER ("555-123-4567");
//  - apostrophes between letters stay inside the word ("don't", "Katie's");
//  - each other punctuation run of one repeated character is a PUNCT token;
//  - symbols and emoji are one OTHER token per codepoint.
std::vector<Token> Tokenize(std::wstring_view text);
std::vector<Token> Tokenize(std::string_view utf8);

// Tokens whose span intersects `span`, in order. Throws DataError if the span
// is empty or inverted.
std::vector<Token> TokensOverlapping(const std::vector<Token>& tokens, Span span);

// Index range [first, last) of the overlapping tokens.
std::pair<std::size_t, std::size_t> OverlappingRange(
    const std::vector<Token>& tokens, Span span);

}  // namespace nightjar

#endif  // NIGHTJAR_TOKENIZER_H_
