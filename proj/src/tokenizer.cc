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

#include "nightjar/tokenizer.h"

#include <algorithm>
#include <array>

#include "nightjar/text.h"

namespace nightjar {
namespace {

constexpr std::array<std::wstring_view, 10> kShorteners = {
    L"t.co/",   L"bit.ly/",  L"goo.gl/", L"ow.ly/",   L"buff.ly/",
    L"dlvr.it/", L"ift.tt/", L"tinyurl.com/", L"youtu.be/", L"fb.me/"};

bool IsApostrophe(wchar_t c) { return c == L'\'' || c == 0x2019; }

bool IsTrailingPunct(wchar_t c) {
  switch (c) {
    case L'.': case L',': case L';': case L':': case L'!': case L'?':
    case L')': case L']': case L'}': case L'\'': case L'"': case 0x2019:
    case 0x201D: case 0x2026:
      return true;
    default:
      return false;
  }
}

bool StartsWithIcase(std::wstring_view text, std::size_t pos,
                     std::wstring_view prefix) {
  if (text.size() - pos < prefix.size()) return false;
  return AsciiLower(text.substr(pos, prefix.size())) == prefix;
}

// Length of a URL-shaped run at pos, or 0.
std::size_t UrlRunLength(std::wstring_view text, std::size_t pos) {
  if (pos > 0 && (IsWordChar(text[pos - 1]) || text[pos - 1] == L'@')) return 0;
  bool url = StartsWithIcase(text, pos, L"http://") ||
             StartsWithIcase(text, pos, L"https://") ||
             StartsWithIcase(text, pos, L"www.");
  for (std::wstring_view s : kShorteners) {
    if (url) break;
    url = StartsWithIcase(text, pos, s) && text.size() - pos > s.size() &&
          !IsSpace(text[pos + s.size()]);
  }
  if (!url) return 0;
  std::size_t end = pos;
  while (end < text.size() && !IsSpace(text[end])) ++end;
  while (end > pos && IsTrailingPunct(text[end - 1])) --end;
  return end - pos;
}

bool IsEmailLocalChar(wchar_t c) {
  return IsAsciiAlpha(c) || IsAsciiDigit(c) || c == L'.' || c == L'_' ||
         c == L'%' || c == L'+' || c == L'-';
}

bool IsDomainChar(wchar_t c) {
  return IsAsciiAlpha(c) || IsAsciiDigit(c) || c == L'-' || c == L'.';
}

// Length of an email address starting at pos, or 0.
std::size_t EmailRunLength(std::wstring_view text, std::size_t pos) {
  if (pos > 0 && IsEmailLocalChar(text[pos - 1])) return 0;
  std::size_t at = pos;
  while (at < text.size() && IsEmailLocalChar(text[at])) ++at;
  if (at == pos || at >= text.size() || text[at] != L'@') return 0;
  std::size_t end = at + 1;
  while (end < text.size() && IsDomainChar(text[end])) ++end;
  while (end > at + 1 && (text[end - 1] == L'.' || text[end - 1] == L'-')) --end;
  const std::wstring_view domain = text.substr(at + 1, end - at - 1);
  const std::size_t dot = domain.rfind(L'.');
  if (dot == std::wstring_view::npos || dot == 0 || domain.size() - dot < 3) {
    return 0;
  }
  for (std::size_t i = dot + 1; i < domain.size(); ++i) {
    if (!IsAsciiAlpha(domain[i])) return 0;
  }
  return end - pos;
}

}  // namespace

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord: return "WORD";
    case TokenKind::kMention: return "MENTION";
    case TokenKind::kHashtag: return "HASHTAG";
    case TokenKind::kUrlLike: return "URLLIKE";
    case TokenKind::kNumber: return "NUMBER";
    case TokenKind::kPunct: return "PUNCT";
    case TokenKind::kOther: return "OTHER";
  }
  return "?";
}

std::vector<Token> Tokenize(std::wstring_view text) {
  std::vector<Token> tokens;
  auto emit = [&](std::size_t start, std::size_t end, TokenKind kind) {
    tokens.push_back(Token{Span{start, end},
                           std::wstring(text.substr(start, end - start)), kind});
  };
  std::size_t i = 0;
  while (i < text.size()) {
    const wchar_t c = text[i];
    if (IsSpace(c)) {
      ++i;
      continue;
    }
    if (std::size_t n = UrlRunLength(text, i); n > 0) {
      emit(i, i + n, TokenKind::kUrlLike);
      i += n;
      continue;
    }
    if (std::size_t n = EmailRunLength(text, i); n > 0) {
      emit(i, i + n, TokenKind::kUrlLike);
      i += n;
      continue;
    }
    if ((c == L'@' || c == L'#') && i + 1 < text.size() &&
        IsWordChar(text[i + 1]) && (i == 0 || !IsWordChar(text[i - 1]))) {
      std::size_t end = i + 1;
      while (end < text.size() && IsWordChar(text[end])) ++end;
      emit(i, end, c == L'@' ? TokenKind::kMention : TokenKind::kHashtag);
      i = end;
      continue;
    }
    if (IsWordChar(c)) {
      std::size_t end = i;
      bool all_digits = true;
      while (end < text.size()) {
        if (IsWordChar(text[end])) {
          all_digits = all_digits && IsAsciiDigit(text[end]);
          ++end;
        } else if (end + 1 < text.size() && IsApostrophe(text[end]) &&
                   !all_digits && IsWordChar(text[end + 1]) &&
                   !IsAsciiDigit(text[end + 1])) {
          end += 2;
        } else if (all_digits && end + 1 < text.size() &&
                   (text[end] == L'.' || text[end] == L',' || text[end] == L':' ||
                    text[end] == L'/' || text[end] == L'-') &&
                   IsAsciiDigit(text[end + 1])) {
          end += 2;
        } else {
          break;
        }
      }
      emit(i, end, all_digits ? TokenKind::kNumber : TokenKind::kWord);
      i = end;
      continue;
    }
    if (IsPunct(c)) {
      std::size_t end = i + 1;
      while (end < text.size() && text[end] == c) ++end;
      emit(i, end, TokenKind::kPunct);
      i = end;
      continue;
    }
    emit(i, i + 1, TokenKind::kOther);
    ++i;
  }
  return tokens;
}

std::vector<Token> Tokenize(std::string_view utf8) { return Tokenize(Widen(utf8)); }

std::pair<std::size_t, std::size_t> OverlappingRange(
    const std::vector<Token>& tokens, Span span) {
  if (span.start >= span.end) {
    throw DataError("malformed span [" + std::to_string(span.start) + ", " +
                    std::to_string(span.end) + ")");
  }
  auto first = std::partition_point(tokens.begin(), tokens.end(), [&](const Token& t) {
    return t.span.end <= span.start;
  });
  auto last = first;
  while (last != tokens.end() && last->span.start < span.end) ++last;
  return {static_cast<std::size_t>(first - tokens.begin()),
          static_cast<std::size_t>(last - tokens.begin())};
}

std::vector<Token> TokensOverlapping(const std::vector<Token>& tokens, Span span) {
  const auto [first, last] = OverlappingRange(tokens, span);
  return {tokens.begin() + first, tokens.begin() + last};
}

}  // namespace nightjar
