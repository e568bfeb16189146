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

#ifndef GTFORGE_CORPUS_GATEKEEPER_HPP_
#define GTFORGE_CORPUS_GATEKEEPER_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gtforge/common.hpp"
#include "gtforge/tex/tree.hpp"

namespace gtforge::corpus {

struct JournalClass {
  enum class Kind { Astronomy, NonTarget, Unknown };
  Kind kind = Kind::Unknown;
  std::string name;  // matched class/style token when kind == Astronomy
};

struct Markable {
  bool accepted = true;
  std::string reason;  // set when rejected
};

struct ArticleRecord {
  std::string article_id;
  std::filesystem::path root_dir;
  std::optional<std::filesystem::path> main_file;
  JournalClass journal_class;
  Markable markable;
  std::string failure;  // non-empty when the article never reached marking
};

class GateError : public Error {
 public:
  enum class Kind { NoMain, AmbiguousMain };
  GateError(Kind kind, std::vector<std::filesystem::path> candidates);
  Kind kind;
  std::vector<std::filesystem::path> candidates;  // AmbiguousMain
};

// Default journal patterns; the published examples of astronomy class names.
std::vector<std::string> default_journal_patterns();

// Picks the unique file whose comment-stripped text contains \documentclass
// or \documentstyle within the first 200 non-comment lines. Throws GateError
// with kind NoMain or AmbiguousMain otherwise. Order-independent.
std::filesystem::path find_main_file(
    const std::vector<std::pair<std::filesystem::path, std::string>>& files);

// Classifies the class/style directive argument (and its bracket options)
// against the configured patterns, case-insensitively on word boundaries.
JournalClass classify_journal(std::string_view main_source,
                              const std::vector<std::string>& patterns);

// Rejects documents with an effective \input or \include command; comments
// and verbatim bodies do not count.
Markable check_markable(const tex::DocumentTree& tree);

}  // namespace gtforge::corpus

#endif  // GTFORGE_CORPUS_GATEKEEPER_HPP_
