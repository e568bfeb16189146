// Copyright 2026 The gt-forge Authors
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

#include "gtforge/tex/tokenizer.hpp"

#include <cctype>

namespace gtforge::tex {

namespace {

bool is_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_special(char c) {
  return c == '\\' || c == '{' || c == '}' || c == '$' || c == '%';
}

void push(std::vector<TexToken>& out, TexToken::Kind kind, std::string_view src,
          std::size_t begin, std::size_t end, std::string env_name = {}) {
  TexToken t;
  t.kind = kind;
  t.span = {begin, end};
  t.lexeme = std::string(src.substr(begin, end - begin));
  t.env_name = std::move(env_name);
  out.push_back(std::move(t));
}

// If src[i..] is exactly "{name}" with name free of specials, returns the
// position one past '}' and fills name; otherwise returns i.
std::size_t match_brace_group(std::string_view src, std::size_t i, std::string& name) {
  if (i >= src.size() || src[i] != '{') return i;
  std::size_t j = i + 1;
  while (j < src.size() && src[j] != '}' && src[j] != '{' && src[j] != '\\' &&
         src[j] != '%' && src[j] != '$') {
    ++j;
  }
  if (j >= src.size() || src[j] != '}') return i;
  name.assign(src.substr(i + 1, j - i - 1));
  return j + 1;
}

// \verb<d>...<d> is lexed as one opaque command token; the body may contain
// any specials. TeX forbids \verb from spanning lines, so stop at newline.
std::size_t match_verb_body(std::string_view src, std::size_t i) {
  if (i >= src.size()) return i;
  const char delim = src[i];
  if (delim == '\n' || is_letter(delim)) return i;
  std::size_t j = i + 1;
  while (j < src.size() && src[j] != delim && src[j] != '\n') ++j;
  if (j >= src.size() || src[j] != delim) return i;
  return j + 1;
}

}  // namespace

std::vector<TexToken> tokenize(std::string_view source) {
  std::vector<TexToken> out;
  std::size_t i = 0;
  const std::size_t n = source.size();

  while (i < n) {
    const char c = source[i];

    if (c == '\\') {
      std::size_t j = i + 1;
      if (j >= n) {
        // Trailing lone backslash; keep it as a command so bytes survive.
        push(out, TexToken::Kind::Command, source, i, n);
        break;
      }
      if (is_letter(source[j])) {
        while (j < n && is_letter(source[j])) ++j;
        const std::string_view name = source.substr(i + 1, j - i - 1);
        if (name == "begin" || name == "end") {
          std::string env;
          const std::size_t k = match_brace_group(source, j, env);
          if (k != j) {
            push(out,
                 name == "begin" ? TexToken::Kind::EnvBegin : TexToken::Kind::EnvEnd,
                 source, i, k, std::move(env));
            i = k;
            continue;
          }
        } else if (name == "verb") {
          std::size_t k = j;
          if (k < n && source[k] == '*') ++k;
          const std::size_t end = match_verb_body(source, k);
          if (end != k) {
            push(out, TexToken::Kind::Command, source, i, end);
            i = end;
            continue;
          }
        }
        push(out, TexToken::Kind::Command, source, i, j);
        i = j;
      } else {
        // Backslash + single non-letter (control symbol), e.g. \% \$ \\ "\ ".
        push(out, TexToken::Kind::Command, source, i, j + 1);
        i = j + 1;
      }
    } else if (c == '{') {
      push(out, TexToken::Kind::BraceOpen, source, i, i + 1);
      ++i;
    } else if (c == '}') {
      push(out, TexToken::Kind::BraceClose, source, i, i + 1);
      ++i;
    } else if (c == '$') {
      const std::size_t end = (i + 1 < n && source[i + 1] == '$') ? i + 2 : i + 1;
      push(out, TexToken::Kind::MathDelim, source, i, end);
      i = end;
    } else if (c == '%') {
      std::size_t j = i + 1;
      while (j < n && source[j] != '\n') ++j;
      push(out, TexToken::Kind::Comment, source, i, j);
      i = j;
    } else if (is_ascii_space(c)) {
      std::size_t j = i + 1;
      while (j < n && is_ascii_space(source[j])) ++j;
      push(out, TexToken::Kind::Whitespace, source, i, j);
      i = j;
    } else {
      std::size_t j = i + 1;
      while (j < n && !is_special(source[j]) && !is_ascii_space(source[j])) ++j;
      push(out, TexToken::Kind::Text, source, i, j);
      i = j;
    }
  }
  return out;
}

}  // namespace gtforge::tex
