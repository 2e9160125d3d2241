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

#include "nightjar/text.h"

#include <string>

#include "nightjar/core.h"

namespace nightjar {

std::wstring Widen(std::string_view utf8) {
  std::wstring out;
  out.reserve(utf8.size());
  std::size_t i = 0;
  while (i < utf8.size()) {
    const auto lead = static_cast<unsigned char>(utf8[i]);
    char32_t cp = 0;
    int extra = 0;
    if (lead < 0x80) {
      cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      cp = lead & 0x1F;
      extra = 1;
    } else if ((lead & 0xF0) == 0xE0) {
      cp = lead & 0x0F;
      extra = 2;
    } else if ((lead & 0xF8) == 0xF0) {
      cp = lead & 0x07;
      extra = 3;
    } else {
      throw DataError("invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    if (i + extra >= utf8.size() && extra > 0) {
      throw DataError("truncated UTF-8 sequence at offset " + std::to_string(i));
    }
    for (int k = 1; k <= extra; ++k) {
      const auto cont = static_cast<unsigned char>(utf8[i + k]);
      if ((cont & 0xC0) != 0x80) {
        throw DataError("invalid UTF-8 continuation at offset " +
                        std::to_string(i + k));
      }
      cp = (cp << 6) | (cont & 0x3F);
    }
    static constexpr char32_t kMin[] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMin[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw DataError("invalid UTF-8 scalar at offset " + std::to_string(i));
    }
    out.push_back(static_cast<wchar_t>(cp));
    i += extra + 1;
  }
  return out;
}

std::string Narrow(std::wstring_view text) {
  std::string out;
  out.reserve(text.size());
  for (wchar_t wc : text) {
    const auto cp = static_cast<char32_t>(wc);
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

std::size_t CodepointLength(std::string_view utf8) {
  return Widen(utf8).size();
}

std::string CodepointSubstr(std::string_view utf8, std::size_t start,
                            std::size_t end) {
  const std::wstring wide = Widen(utf8);
  if (start > end || end > wide.size()) {
    throw DataError("substring [" + std::to_string(start) + ", " +
                    std::to_string(end) + ") out of range");
  }
  return Narrow(std::wstring_view(wide).substr(start, end - start));
}

bool IsSpace(wchar_t c) {
  switch (c) {
    case L' ': case L'\t': case L'\n': case L'\v': case L'\f': case L'\r':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

bool IsAsciiDigit(wchar_t c) { return c >= L'0' && c <= L'9'; }

bool IsAsciiAlpha(wchar_t c) {
  return (c >= L'a' && c <= L'z') || (c >= L'A' && c <= L'Z');
}

bool IsSymbol(wchar_t c) {
  if (c < 0x80) return false;
  return (c >= 0x2100 && c <= 0x2BFF) ||    // letterlike, arrows, math, misc
         (c >= 0x1F000 && c <= 0x1FAFF) ||  // emoji and pictographs
         (c >= 0xFE00 && c <= 0xFE0F) ||    // variation selectors
         (c >= 0x1F1E6 && c <= 0x1F1FF) || c == 0x200D || c == 0x20E3 ||
         (c >= 0xA1 && c <= 0xBF) || c == 0xD7 || c == 0xF7;
}

bool IsPunct(wchar_t c) {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
           (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
  }
  return (c >= 0x2010 && c <= 0x2027) || (c >= 0x2030 && c <= 0x205E) ||
         (c >= 0x3001 && c <= 0x3003) || (c >= 0xFF01 && c <= 0xFF0F);
}

bool IsWordChar(wchar_t c) {
  if (c < 0x80) return IsAsciiAlpha(c) || IsAsciiDigit(c) || c == L'_';
  return !IsSpace(c) && !IsPunct(c) && !IsSymbol(c) && c != 0x200B &&
         c != 0xFEFF;
}

std::wstring AsciiLower(std::wstring_view text) {
  std::wstring out(text);
  for (wchar_t& c : out) {
    if (c >= L'A' && c <= L'Z') c = c - L'A' + L'a';
  }
  return out;
}

}  // namespace nightjar
