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

#ifndef GTFORGE_GEOM_AUX_RECORDS_HPP_
#define GTFORGE_GEOM_AUX_RECORDS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "gtforge/common.hpp"

namespace gtforge::geom {

// One marker position from the auxiliary file. Coordinates are TeX points
// (1 pt = 1/72.27 in), origin at the bottom-left of the page.
struct MarkRecord {
  std::string name;  // s<k> or e<k>
  int page = 1;
  double x_pt = 0;
  double y_pt = 0;
};

// Record syntax emitted into the aux file varies by marking package, so the
// grammar is pluggable and pinned by fixtures. Two built-ins:
//
//   tikzmark:  \savepointas{<name>}{<id>}
//              \pgfsyspdfmark{<id>}{<page>}{<x sp>}{<y sp>}
//   savepos:   \zref@newlabel{<name>}{\posx{<x sp>}\posy{<y sp>}\abspage{<page>}}
struct AuxGrammar {
  enum class Unit { ScaledPoint, Point };
  std::string name;
  Unit unit = Unit::ScaledPoint;

  static AuxGrammar tikzmark();
  static AuxGrammar savepos();
  static AuxGrammar by_name(std::string_view name);  // throws on unknown
};

struct AuxParseResult {
  std::vector<MarkRecord> records;
  std::size_t warning_count = 0;  // malformed matching lines, unpaired ids
};

// Extracts every record matching the grammar; non-matching lines are
// ignored, matching lines with bad fields are skipped and counted.
AuxParseResult parse_aux(std::string_view aux_text, const AuxGrammar& grammar);

}  // namespace gtforge::geom

#endif  // GTFORGE_GEOM_AUX_RECORDS_HPP_
