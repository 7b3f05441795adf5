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

#include "greennet/instance_io.h"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "greennet/errors.h"

namespace greennet {

namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

[[noreturn]] void SchemaError(const std::string& message) {
  throw ParseError(message);
}

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    int line = 1;
    int column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte, text.size() + 1);
    for (std::size_t i = 0; i + 1 < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    // Drop nlohmann's own "[json.exception...] parse error at ..." prefix.
    if (const auto colon = what.rfind(": "); colon != std::string::npos) {
      what = what.substr(colon + 2);
    }
    throw ParseError("syntax error: " + what, line, column);
  }
}

const Json& Field(const Json& obj, const char* key) {
  if (!obj.is_object()) SchemaError("expected a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) SchemaError(fmt::format("missing field '{}'", key));
  return *it;
}

int AsIndex(const Json& value, const std::string& where) {
  if (!value.is_number_integer() || value.get<long long>() < 0 ||
      value.get<long long>() > 1'000'000'000) {
    SchemaError(fmt::format("{} must be a nonnegative integer", where));
  }
  return static_cast<int>(value.get<long long>());
}

double AsReal(const Json& value, const std::string& where) {
  if (!value.is_number()) SchemaError(fmt::format("{} must be a number", where));
  return value.get<double>();
}

const Json& AsArray(const Json& value, const std::string& where) {
  if (!value.is_array()) SchemaError(fmt::format("{} must be an array", where));
  return value;
}

BinaryMatrix ReadPairs(const Json& doc, const char* key, int rows, int cols) {
  BinaryMatrix m(rows, cols);
  const Json& list = AsArray(Field(doc, key), key);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = fmt::format("{}[{}]", key, i);
    const Json& pair = AsArray(list[i], where);
    if (pair.size() != 2) SchemaError(where + " must be a [row, column] pair");
    const int r = AsIndex(pair[0], where + "[0]");
    const int c = AsIndex(pair[1], where + "[1]");
    if (r >= rows || c >= cols) {
      SchemaError(fmt::format("{} = [{}, {}] out of range for a {}x{} matrix",
                              where, r, c, rows, cols));
    }
    if (m(r, c) != 0) {
      SchemaError(fmt::format("{} repeats entry [{}, {}]", where, r, c));
    }
    m(r, c) = 1;
  }
  return m;
}

RealMatrix ReadTable(const Json& doc, const char* key, int rows, int cols) {
  RealMatrix m(rows, cols);
  const Json& list = AsArray(Field(doc, key), key);
  if (static_cast<int>(list.size()) != rows) {
    SchemaError(fmt::format("{} has {} rows, expected {}", key, list.size(),
                            rows));
  }
  for (int r = 0; r < rows; ++r) {
    const std::string where = fmt::format("{}[{}]", key, r);
    const Json& row = AsArray(list[r], where);
    if (static_cast<int>(row.size()) != cols) {
      SchemaError(fmt::format("{} has {} entries, expected {}", where,
                              row.size(), cols));
    }
    for (int c = 0; c < cols; ++c) {
      m(r, c) = AsReal(row[c], fmt::format("{}[{}]", where, c));
    }
  }
  return m;
}

std::vector<double> ReadVector(const Json& doc, const char* key, int size) {
  const Json& list = AsArray(Field(doc, key), key);
  if (static_cast<int>(list.size()) != size) {
    SchemaError(fmt::format("{} has {} entries, expected {}", key,
                            list.size(), size));
  }
  std::vector<double> v(size);
  for (int i = 0; i < size; ++i) {
    v[i] = AsReal(list[i], fmt::format("{}[{}]", key, i));
  }
  return v;
}

OrderedJson WritePairs(const BinaryMatrix& m) {
  OrderedJson list = OrderedJson::array();
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0) list.push_back({r, c});
    }
  }
  return list;
}

OrderedJson WriteTable(const RealMatrix& m) {
  OrderedJson list = OrderedJson::array();
  for (int r = 0; r < m.rows(); ++r) {
    list.push_back(std::vector<double>(m.row(r).begin(), m.row(r).end()));
  }
  return list;
}

OrderedJson WriteBits(const BinaryMatrix& m) {
  OrderedJson list = OrderedJson::array();
  for (int r = 0; r < m.rows(); ++r) {
    list.push_back(std::vector<int>(m.row(r).begin(), m.row(r).end()));
  }
  return list;
}

std::uint8_t AsBit(const Json& value, const std::string& where) {
  if (!value.is_number_integer() ||
      (value.get<long long>() != 0 && value.get<long long>() != 1)) {
    SchemaError(where + " must be 0 or 1");
  }
  return static_cast<std::uint8_t>(value.get<long long>());
}

std::vector<std::uint8_t> ReadBitVector(const Json& doc, const char* key,
                                        int size) {
  const Json& list = AsArray(Field(doc, key), key);
  if (static_cast<int>(list.size()) != size) {
    SchemaError(fmt::format("{} has {} entries, instance needs {}", key,
                            list.size(), size));
  }
  std::vector<std::uint8_t> v(size);
  for (int i = 0; i < size; ++i) {
    v[i] = AsBit(list[i], fmt::format("{}[{}]", key, i));
  }
  return v;
}

BinaryMatrix ReadBitMatrix(const Json& doc, const char* key, int rows,
                           int cols) {
  const Json& list = AsArray(Field(doc, key), key);
  if (static_cast<int>(list.size()) != rows) {
    SchemaError(fmt::format("{} has {} rows, instance needs {}", key,
                            list.size(), rows));
  }
  BinaryMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const std::string where = fmt::format("{}[{}]", key, r);
    const Json& row = AsArray(list[r], where);
    if (static_cast<int>(row.size()) != cols) {
      SchemaError(fmt::format("{} has {} entries, instance needs {}", where,
                              row.size(), cols));
    }
    for (int c = 0; c < cols; ++c) {
      m(r, c) = AsBit(row[c], fmt::format("{}[{}]", where, c));
    }
  }
  return m;
}

void CheckVersion(const Json& doc) {
  const Json& version = Field(doc, "schema_version");
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion) {
    SchemaError(fmt::format(
        "unsupported schema_version {} (supported versions: \"{}\")",
        version.dump(), kSchemaVersion));
  }
}

SolveStatus ParseStatus(const std::string& text) {
  for (const auto status : {SolveStatus::kOptimal, SolveStatus::kInfeasible,
                            SolveStatus::kLimitHit}) {
    if (text == ToString(status)) return status;
  }
  SchemaError(fmt::format("unknown status '{}'", text));
}

}  // namespace

ParsedInstance ParseInstance(std::string_view text) {
  const Json doc = ParseJson(text);
  if (!doc.is_object()) SchemaError("instance document must be an object");
  CheckVersion(doc);

  ParsedInstance parsed;
  NetworkInstance& inst = parsed.instance;
  const Json& counts = Field(doc, "counts");
  inst.num_routers = AsIndex(Field(counts, "routers"), "counts.routers");
  inst.num_cards = AsIndex(Field(counts, "cards"), "counts.cards");
  inst.num_ports = AsIndex(Field(counts, "ports"), "counts.ports");
  inst.num_links = AsIndex(Field(counts, "links"), "counts.links");
  inst.num_states = AsIndex(Field(counts, "states"), "counts.states");

  inst.card_port = ReadPairs(doc, "card_ports", inst.num_cards, inst.num_ports);
  inst.router_card =
      ReadPairs(doc, "router_cards", inst.num_routers, inst.num_cards);
  inst.link_out =
      ReadPairs(doc, "link_out_ports", inst.num_links, inst.num_ports);
  inst.link_in = ReadPairs(doc, "link_in_ports", inst.num_links, inst.num_ports);
  inst.state_power =
      ReadTable(doc, "state_power", inst.num_links, inst.num_states);
  inst.state_capacity =
      ReadTable(doc, "state_capacity", inst.num_links, inst.num_states);
  inst.card_power = ReadVector(doc, "card_power", inst.num_cards);
  inst.router_power = ReadVector(doc, "router_power", inst.num_routers);

  const Json& demands = AsArray(Field(doc, "demands"), "demands");
  for (std::size_t d = 0; d < demands.size(); ++d) {
    const std::string where = fmt::format("demands[{}]", d);
    const Json& entry = demands[d];
    Demand demand;
    demand.source = AsIndex(Field(entry, "source"), where + ".source");
    demand.target = AsIndex(Field(entry, "target"), where + ".target");
    demand.volume = AsReal(Field(entry, "volume"), where + ".volume");
    inst.demands.push_back(demand);
  }

  parsed.report = ValidateInstance(inst);
  return parsed;
}

NetworkInstance ParseValidInstance(std::string_view text) {
  ParsedInstance parsed = ParseInstance(text);
  if (!parsed.report.ok()) {
    throw InvalidArgumentError("malformed network instance:\n" +
                               parsed.report.ToString());
  }
  return std::move(parsed.instance);
}

std::string SerializeInstance(const NetworkInstance& inst) {
  OrderedJson doc;
  doc["schema_version"] = kSchemaVersion;
  doc["counts"] = {{"routers", inst.num_routers},
                   {"cards", inst.num_cards},
                   {"ports", inst.num_ports},
                   {"links", inst.num_links},
                   {"states", inst.num_states}};
  doc["card_ports"] = WritePairs(inst.card_port);
  doc["router_cards"] = WritePairs(inst.router_card);
  doc["link_out_ports"] = WritePairs(inst.link_out);
  doc["link_in_ports"] = WritePairs(inst.link_in);
  doc["state_power"] = WriteTable(inst.state_power);
  doc["state_capacity"] = WriteTable(inst.state_capacity);
  doc["card_power"] = inst.card_power;
  doc["router_power"] = inst.router_power;
  OrderedJson demands = OrderedJson::array();
  for (const Demand& d : inst.demands) {
    demands.push_back(
        {{"source", d.source}, {"target", d.target}, {"volume", d.volume}});
  }
  doc["demands"] = std::move(demands);
  return doc.dump(2) + "\n";
}

std::string SerializeSolution(const SolutionDocument& doc) {
  const Solution& sol = doc.solution;
  OrderedJson out;
  out["schema_version"] = kSchemaVersion;
  out["model"] = ToString(doc.kind);
  out["status"] = ToString(doc.status);
  out["objective"] = sol.objective;
  out["card_on"] = std::vector<int>(sol.card_on.begin(), sol.card_on.end());
  out["router_on"] =
      std::vector<int>(sol.router_on.begin(), sol.router_on.end());
  out["link_state"] = WriteBits(sol.link_state);
  out["link_demand"] = WriteBits(sol.link_demand);
  return out.dump(2) + "\n";
}

SolutionDocument ParseSolution(std::string_view text,
                               const NetworkInstance& inst) {
  const Json doc = ParseJson(text);
  if (!doc.is_object()) SchemaError("solution document must be an object");
  CheckVersion(doc);

  SolutionDocument parsed;
  const Json& model = Field(doc, "model");
  if (!model.is_string()) SchemaError("model must be a string");
  try {
    parsed.kind = ParseModelKind(model.get<std::string>());
  } catch (const InvalidArgumentError& e) {
    SchemaError(e.what());
  }
  const Json& status = Field(doc, "status");
  if (!status.is_string()) SchemaError("status must be a string");
  parsed.status = ParseStatus(status.get<std::string>());

  Solution& sol = parsed.solution;
  sol.card_on = ReadBitVector(doc, "card_on", inst.num_cards);
  sol.router_on = ReadBitVector(doc, "router_on", inst.num_routers);
  sol.link_state =
      ReadBitMatrix(doc, "link_state", inst.num_links, inst.num_states);
  sol.link_demand =
      ReadBitMatrix(doc, "link_demand", inst.num_links, inst.num_demands());
  sol.objective = AsReal(Field(doc, "objective"), "objective");
  return parsed;
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgumentError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgumentError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InvalidArgumentError("failed writing '" + path + "'");
}

}  // namespace greennet
