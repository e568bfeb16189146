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

#include "gtforge/geom/aux_records.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <regex>

namespace gtforge::geom {

namespace {

std::optional<double> to_number(const std::string& field) {
  double value = 0;
  const char* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::optional<int> to_page(const std::string& field) {
  int value = 0;
  const char* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 1) return std::nullopt;
  return value;
}

double to_pt(double raw, AuxGrammar::Unit unit) {
  return unit == AuxGrammar::Unit::ScaledPoint ? sp_to_pt(raw) : raw;
}

void for_each_line(std::string_view text, auto&& fn) {
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line);
    if (nl == text.size()) break;
    pos = nl + 1;
  }
}

AuxParseResult parse_tikzmark(std::string_view aux_text, AuxGrammar::Unit unit) {
  static const std::regex save_re(R"(\\savepointas\{([^{}]*)\}\{([^{}]*)\})");
  static const std::regex mark_re(
      R"(\\pgfsyspdfmark\{([^{}]*)\}\{([^{}]*)\}\{([^{}]*)\}\{([^{}]*)\})");

  AuxParseResult out;
  std::vector<std::pair<std::string, std::string>> name_to_id;  // aux order
  struct Position {
    int page;
    double x, y;
  };
  std::map<std::string, Position> positions;

  for_each_line(aux_text, [&](std::string_view line) {
    std::match_results<std::string_view::const_iterator> m;
    if (std::regex_search(line.begin(), line.end(), m, save_re)) {
      name_to_id.emplace_back(m[1].str(), m[2].str());
      return;
    }
    if (std::regex_search(line.begin(), line.end(), m, mark_re)) {
      const std::string id = m[1].str();
      const auto page = to_page(m[2].str());
      const auto x = to_number(m[3].str());
      const auto y = to_number(m[4].str());
      if (!page || !x || !y) {
        ++out.warning_count;
        return;
      }
      if (!positions.emplace(id, Position{*page, *x, *y}).second) {
        ++out.warning_count;  // duplicate id; first record wins
      }
    }
  });

  for (const auto& [name, id] : name_to_id) {
    const auto it = positions.find(id);
    if (it == positions.end()) {
      ++out.warning_count;  // savepointas without a matching position record
      continue;
    }
    out.records.push_back({name, it->second.page, to_pt(it->second.x, unit),
                           to_pt(it->second.y, unit)});
  }
  return out;
}

AuxParseResult parse_savepos(std::string_view aux_text, AuxGrammar::Unit unit) {
  static const std::regex record_re(
      R"(\\zref@newlabel\{([^{}]*)\}\{\\posx\{([^{}]*)\}\\posy\{([^{}]*)\}\\abspage\{([^{}]*)\}\})");

  AuxParseResult out;
  for_each_line(aux_text, [&](std::string_view line) {
    std::match_results<std::string_view::const_iterator> m;
    if (!std::regex_search(line.begin(), line.end(), m, record_re)) return;
    const auto x = to_number(m[2].str());
    const auto y = to_number(m[3].str());
    const auto page = to_page(m[4].str());
    if (!page || !x || !y) {
      ++out.warning_count;
      return;
    }
    out.records.push_back({m[1].str(), *page, to_pt(*x, unit), to_pt(*y, unit)});
  });
  return out;
}

}  // namespace

AuxGrammar AuxGrammar::tikzmark() { return {"tikzmark", Unit::ScaledPoint}; }

AuxGrammar AuxGrammar::savepos() { return {"savepos", Unit::ScaledPoint}; }

AuxGrammar AuxGrammar::by_name(std::string_view name) {
  if (name == "tikzmark") return tikzmark();
  if (name == "savepos") return savepos();
  throw Error("unknown aux grammar '" + std::string(name) +
              "' (expected tikzmark or savepos)");
}

AuxParseResult parse_aux(std::string_view aux_text, const AuxGrammar& grammar) {
  if (grammar.name == "tikzmark") return parse_tikzmark(aux_text, grammar.unit);
  if (grammar.name == "savepos") return parse_savepos(aux_text, grammar.unit);
  throw Error("unknown aux grammar '" + grammar.name + "'");
}

}  // namespace gtforge::geom
