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

#ifndef NIGHTJAR_TEXT_H_
#define NIGHTJAR_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace nightjar {

// All offsets in the library count Unicode scalar values. Internally text is
// held as std::wstring, which is UTF-32 on the platforms we build for.
static_assert(sizeof(wchar_t) == 4, "nightjar requires a 32-bit wchar_t");

// Decodes UTF-8. Throws DataError on malformed input.
std::wstring Widen(std::string_view utf8);

std::string Narrow(std::wstring_view text);

// Number of scalar values in a UTF-8 string.
std::size_t CodepointLength(std::string_view utf8);

// Substring [start, end) in scalar values.
std::string CodepointSubstr(std::string_view utf8, std::size_t start,
                            std::size_t end);

bool IsSpace(wchar_t c);
bool IsAsciiDigit(wchar_t c);
bool IsAsciiAlpha(wchar_t c);

// Letters and digits for tokenization purposes. ASCII is classified exactly;
// outside ASCII anything that is not whitespace, general punctuation or a
// symbol/emoji block counts as a letter.
bool IsWordChar(wchar_t c);

// Symbols and emoji that form single-codepoint OTHER tokens.
bool IsSymbol(wchar_t c);

// ASCII punctuation plus the General Punctuation block.
bool IsPunct(wchar_t c);

// ASCII-only case folding.
std::wstring AsciiLower(std::wstring_view text);

}  // namespace nightjar

#endif  // NIGHTJAR_TEXT_H_
