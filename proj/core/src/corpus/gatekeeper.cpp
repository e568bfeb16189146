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

#include "gtforge/corpus/gatekeeper.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

namespace gtforge::corpus {

namespace {

constexpr std::size_t kMaxScannedLines = 200;

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Cuts a line at the first unescaped %.
std::string_view strip_comment(std::string_view line) {
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '\\') {
      ++i;  // skip escaped char
      continue;
    }
    if (line[i] == '%') return line.substr(0, i);
  }
  return line;
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return is_ascii_space(c); });
}

// First 200 non-blank, comment-stripped lines joined back together.
std::string scannable_head(std::string_view source) {
  std::string out;
  std::size_t counted = 0;
  std::size_t pos = 0;
  while (pos <= source.size() && counted < kMaxScannedLines) {
    const std::size_t nl = source.find('\n', pos);
    const std::size_t end = (nl == std::string_view::npos) ? source.size() : nl;
    const std::string_view stripped = strip_comment(source.substr(pos, end - pos));
    if (!is_blank(stripped)) {
      out.append(stripped);
      out.push_back('\n');
      ++counted;
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

bool has_class_directive(std::string_view source) {
  const std::string head = scannable_head(source);
  return head.find("\\documentclass") != std::string::npos ||
         head.find("\\documentstyle") != std::string::npos;
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

// Whole-word containment of `pattern` in `token`, both lowercased.
bool word_boundary_match(const std::string& token, const std::string& pattern) {
  if (pattern.empty()) return false;
  std::size_t pos = 0;
  while ((pos = token.find(pattern, pos)) != std::string::npos) {
    const bool left_ok = pos == 0 || !is_word_char(token[pos - 1]);
    const std::size_t after = pos + pattern.size();
    const bool right_ok = after == token.size() || !is_word_char(token[after]);
    if (left_ok && right_ok) return true;
    ++pos;
  }
  return false;
}

std::vector<std::string> split_csv_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  for (std::string& t : out) {
    while (!t.empty() && is_ascii_space(t.front())) t.erase(t.begin());
    while (!t.empty() && is_ascii_space(t.back())) t.pop_back();
  }
  std::erase_if(out, [](const std::string& t) { return t.empty(); });
  return out;
}

std::string gate_message(GateError::Kind kind,
                         const std::vector<std::filesystem::path>& candidates) {
  if (kind == GateError::Kind::NoMain) {
    return "no file contains \\documentclass or \\documentstyle";
  }
  std::ostringstream os;
  os << "multiple candidate main files:";
  for (const auto& p : candidates) os << ' ' << p.string();
  return os.str();
}

}  // namespace

GateError::GateError(Kind kind, std::vector<std::filesystem::path> candidates)
    : Error(gate_message(kind, candidates)),
      kind(kind),
      candidates(std::move(candidates)) {}

std::vector<std::string> default_journal_patterns() { return {"aastex", "apj", "mn"}; }

std::filesystem::path find_main_file(
    const std::vector<std::pair<std::filesystem::path, std::string>>& files) {
  std::vector<std::filesystem::path> candidates;
  for (const auto& [path, bytes] : files) {
    if (has_class_directive(bytes)) candidates.push_back(path);
  }
  std::sort(candidates.begin(), candidates.end());
  if (candidates.empty()) throw GateError(GateError::Kind::NoMain, {});
  if (candidates.size() > 1) {
    throw GateError(GateError::Kind::AmbiguousMain, std::move(candidates));
  }
  return candidates.front();
}

JournalClass classify_journal(std::string_view main_source,
                              const std::vector<std::string>& patterns) {
  static const std::regex directive(
      R"(\\(documentclass|documentstyle)\s*(\[([^\]]*)\])?\s*\{([^{}]*)\})");
  const std::string head = scannable_head(main_source);
  std::smatch m;
  if (!std::regex_search(head, m, directive)) {
    return {JournalClass::Kind::Unknown, ""};
  }
  std::vector<std::string> candidates = split_csv_tokens(m[4].str());
  const std::vector<std::string> options = split_csv_tokens(m[3].str());
  candidates.insert(candidates.end(), options.begin(), options.end());

  for (const std::string& raw : candidates) {
    const std::string token = to_lower(raw);
    for (const std::string& pattern : patterns) {
      if (word_boundary_match(token, to_lower(pattern))) {
        return {JournalClass::Kind::Astronomy, raw};
      }
    }
  }
  return {JournalClass::Kind::NonTarget, ""};
}

namespace {

bool contains_input_command(const tex::TexNode& node, std::string& which) {
  if (node.kind == tex::TexNode::Kind::Comment) return false;
  if (node.kind == tex::TexNode::Kind::CommandCall &&
      (node.name == "input" || node.name == "include")) {
    which = node.name;
    return true;
  }
  // Verbatim bodies were flattened to plain text, so no checks needed there.
  for (const tex::TexNode& child : node.children) {
    if (contains_input_command(child, which)) return true;
  }
  return false;
}

}  // namespace

Markable check_markable(const tex::DocumentTree& tree) {
  std::string which;
  if (contains_input_command(tree.root, which)) {
    return {false, "contains \\" + which};
  }
  return {true, ""};
}

}  // namespace gtforge::corpus
