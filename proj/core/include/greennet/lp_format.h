// Copyright 2026 The greennet Authors
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

#ifndef GREENNET_LP_FORMAT_H_
#define GREENNET_LP_FORMAT_H_

#include <string>
#include <string_view>
#include <vector>

#include "greennet/milp.h"

namespace greennet {

// Maps an arbitrary name onto the identifier alphabet every LP reader
// accepts: letters, digits, '_' and '.'. Other characters become '_', runs
// of '_' collapse, and names that would read as a number or keyword get a
// leading '_'. "conserve[d=0,r=2]" becomes "conserve_d_0_r_2".
std::string SanitizeLpName(std::string_view name);

struct LpExport {
  std::string text;
  // LP identifier of each model variable and row, in model order. Made
  // unique with "_2", "_3", ... suffixes when sanitizing collides.
  std::vector<std::string> variable_names;
  std::vector<std::string> row_names;
};

// Writes CPLEX LP text: a comment header (model metadata plus a
// "\ lp_name = original" line for every renamed item), Minimize, Subject To
// with one named row per constraint exactly as built, Bounds, Binaries, End.
LpExport WriteLp(const MilpModel& model);

inline std::string ExportLp(const MilpModel& model) {
  return WriteLp(model).text;
}

// Reads the LP subset WriteLp emits plus common variants (unnamed rows,
// rows spanning lines, implicit coefficients, '<'/'>' senses, "free" and
// infinite bounds). Variables are numbered in order of first appearance and
// default to [0, +inf). Maximization and general-integer sections are
// rejected. Throws ParseError with a line and column.
MilpModel ReadLp(std::string_view text);

}  // namespace greennet

#endif  // GREENNET_LP_FORMAT_H_
