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

#ifndef GTFORGE_TEX_TOKENIZER_HPP_
#define GTFORGE_TEX_TOKENIZER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "gtforge/common.hpp"

namespace gtforge::tex {

// Lexical token over raw TeX bytes. Concatenating the lexemes of a token
// list in order reproduces the input byte-for-byte; spans are sorted,
// non-overlapping and cover the whole input.
struct TexToken {
  enum class Kind {
    Command,     // \name or \<single non-letter>; also a whole \verb|...|
    BraceOpen,   // {
    BraceClose,  // }
    MathDelim,   // $ or $$
    EnvBegin,    // \begin{name}, fused
    EnvEnd,      // \end{name}, fused
    Comment,     // % to end of line (newline excluded)
    Text,
    Whitespace,
  };

  Kind kind = Kind::Text;
  ByteSpan span;
  std::string lexeme;
  std::string env_name;  // EnvBegin / EnvEnd only

  friend bool operator==(const TexToken&, const TexToken&) = default;
};

// Total lexer: never fails; malformed constructs surface at tree building.
// Commands are backslash+letters or backslash+single-nonletter. `%` opens a
// comment running to end of line unless escaped. `$`/`$$` are math
// delimiters. \begin{x} and \end{x} fuse into environment tokens.
std::vector<TexToken> tokenize(std::string_view source);

}  // namespace gtforge::tex

#endif  // GTFORGE_TEX_TOKENIZER_HPP_
