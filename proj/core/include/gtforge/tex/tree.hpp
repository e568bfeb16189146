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

#ifndef GTFORGE_TEX_TREE_HPP_
#define GTFORGE_TEX_TREE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "gtforge/common.hpp"
#include "gtforge/tex/tokenizer.hpp"

namespace gtforge::tex {

struct TexNode {
  enum class Kind {
    Root,
    Environment,  // \begin{name}...\end{name}
    Group,        // {...}, also folded [...] command arguments
    InlineMath,   // $...$
    DisplayMath,  // $$...$$
    CommandCall,  // \name plus any brace/bracket arguments folded in
    PlainText,
    Comment,
  };

  Kind kind = Kind::Root;
  std::string name;  // Environment and CommandCall
  ByteSpan span;
  std::vector<TexNode> children;
};

// Parse of one TeX source; owns the (sanitized) source bytes so node spans
// stay resolvable for the lifetime of the tree.
struct DocumentTree {
  std::string source;
  TexNode root;

  std::string_view text_of(const TexNode& node) const {
    return slice(source, node.span);
  }
};

// Structural error with the byte offset of the offending construct.
class TreeError : public Error {
 public:
  enum class Kind {
    UnbalancedBrace,
    UnmatchedMathDelim,
    EnvMismatch,
    UnclosedEnv,
  };

  TreeError(Kind kind, std::size_t offset, std::string expected = {},
            std::string found = {});

  Kind kind;
  std::size_t offset;
  std::string expected;  // EnvMismatch: innermost open \begin name
  std::string found;     // EnvMismatch: the \end name; UnclosedEnv: env name
};

// Builds the document tree. Throws TreeError on unbalanced braces, unpaired
// math delimiters, environment name mismatches or unclosed environments;
// total otherwise. `source` must be the bytes the tokens were lexed from.
DocumentTree build_tree(std::string_view source, const std::vector<TexToken>& tokens);

// tokenize + build_tree over an owned buffer.
DocumentTree parse_document(std::string source);

// Test aid: throws Error if node spans are not nested/ordered/disjoint.
void check_tree_invariants(const DocumentTree& tree);

}  // namespace gtforge::tex

#endif  // GTFORGE_TEX_TREE_HPP_
