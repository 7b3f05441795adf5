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

#ifndef GREENNET_INSTANCE_IO_H_
#define GREENNET_INSTANCE_IO_H_

#include <string>
#include <string_view>

#include "greennet/branch_and_bound.h"
#include "greennet/model_builder.h"
#include "greennet/network.h"
#include "greennet/solution.h"

namespace greennet {

// Version tag written into every instance, solution and report document.
inline constexpr std::string_view kSchemaVersion = "greennet-1";

inline constexpr std::string_view kInstanceExtension = ".gni.json";
inline constexpr std::string_view kSolutionExtension = ".sol.json";
inline constexpr std::string_view kLpExtension = ".lp";

struct ParsedInstance {
  NetworkInstance instance;
  InstanceReport report;  // structural issues; empty for a clean document
};

// Reads an instance document. Incidences are sparse lists of index pairs;
// state tables are dense rows:
//
//   {
//     "schema_version": "greennet-1",
//     "counts": {"routers": 2, "cards": 2, "ports": 2, "links": 2,
//                "states": 2},
//     "card_ports":     [[card, port], ...],
//     "router_cards":   [[router, card], ...],
//     "link_out_ports": [[link, port], ...],
//     "link_in_ports":  [[link, port], ...],
//     "state_power":    [[xi_e0k0, xi_e0k1], ...],
//     "state_capacity": [[M_e0k0, M_e0k1], ...],
//     "card_power":     [W_0, ...],
//     "router_power":   [T_0, ...],
//     "demands": [{"source": 0, "target": 1, "volume": 1.0}, ...]
//   }
//
// Syntax errors, unknown schema versions, wrong types, out-of-range or
// repeated index pairs, and misshapen tables throw ParseError. Structural
// invariants (ownership, link endpoints, demands) are reported, not thrown.
ParsedInstance ParseInstance(std::string_view text);

// Like ParseInstance, but throws InvalidArgumentError if the report is not
// empty.
NetworkInstance ParseValidInstance(std::string_view text);

std::string SerializeInstance(const NetworkInstance& inst);

// A solution document: model kind, solver status, objective and the four
// decision families as 0/1 arrays.
struct SolutionDocument {
  ModelKind kind = ModelKind::kCorrected;
  SolveStatus status = SolveStatus::kOptimal;
  Solution solution;
};

std::string SerializeSolution(const SolutionDocument& doc);
// Shapes are checked against `inst`; mismatches throw ParseError.
SolutionDocument ParseSolution(std::string_view text,
                               const NetworkInstance& inst);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view text);

}  // namespace greennet

#endif  // GREENNET_INSTANCE_IO_H_
