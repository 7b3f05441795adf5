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

#include "greennet/lp_format.h"

#include <map>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "greennet/errors.h"
#include "greennet/generators.h"
#include "greennet/model_builder.h"

namespace greennet {
namespace {

std::vector<std::string> SectionWords(const std::string& text,
                                      const std::string& header) {
  std::istringstream in(text);
  std::string line;
  bool inside = false;
  std::vector<std::string> words;
  while (std::getline(in, line)) {
    if (line == header) {
      inside = true;
      continue;
    }
    if (inside && !line.empty() && line[0] != ' ') break;
    if (inside) {
      std::istringstream ws(line);
      std::string w;
      while (ws >> w) words.push_back(w);
    }
  }
  return words;
}

TEST(SanitizeLpName, Rules) {
  EXPECT_EQ(SanitizeLpName("conserve[d=0,r=2]"), "conserve_d_0_r_2");
  EXPECT_EQ(SanitizeLpName("my row name"), "my_row_name");
  EXPECT_EQ(SanitizeLpName("a..b"), "a..b");
  EXPECT_EQ(SanitizeLpName("2x"), "_2x");
  EXPECT_EQ(SanitizeLpName("e1"), "_e1");
  EXPECT_EQ(SanitizeLpName("E5x"), "_E5x");
  EXPECT_EQ(SanitizeLpName("edge"), "edge");
  EXPECT_EQ(SanitizeLpName("free"), "_free");
  EXPECT_EQ(SanitizeLpName("End"), "_End");
  EXPECT_EQ(SanitizeLpName(""), "_");
  EXPECT_EQ(SanitizeLpName("[]"), "_");
}

TEST(WriteLp, NoDemandsBinarySection) {
  const NetworkInstance inst = GenerateLine(3);
  const BuiltModel built = BuildCorrected(inst);
  const LpExport lp = WriteLp(built.model);
  const auto binaries = SectionWords(lp.text, "Binaries");
  EXPECT_EQ(static_cast<int>(binaries.size()),
            inst.num_cards + inst.num_routers + inst.num_links * inst.num_states);
  EXPECT_NE(lp.text.find("Minimize"), std::string::npos);
  EXPECT_NE(lp.text.find("Subject To"), std::string::npos);
  EXPECT_NE(lp.text.find("Bounds"), std::string::npos);
  EXPECT_TRUE(lp.text.ends_with("End\n"));
}

TEST(WriteLp, SanitizedNamesAreMappedInComments) {
  MilpModel m;
  const VarId a = m.AddVariable(Variable::Binary("flow a"));
  const VarId b = m.AddVariable(Variable::Binary("flow_a"));
  m.AddConstraint({"row with spaces", {{a, 1}, {b, 1}}, Sense::kLessEqual, 1});
  const LpExport lp = WriteLp(m);
  EXPECT_EQ(lp.variable_names, (std::vector<std::string>{"flow_a", "flow_a_2"}));
  EXPECT_EQ(lp.row_names, std::vector<std::string>{"row_with_spaces"});
  EXPECT_NE(lp.text.find("\\ flow_a = flow a\n"), std::string::npos);
  EXPECT_NE(lp.text.find("\\ flow_a_2 = flow_a\n"), std::string::npos);
  EXPECT_NE(lp.text.find("\\ row_with_spaces = row with spaces\n"),
            std::string::npos);
}

TEST(WriteLp, EqualityRowsAreVerbatim) {
  const LpExport lp = WriteLp(BuildCorrected(CanonicalInstance()).model);
  EXPECT_NE(lp.text.find(" conserve_d_0_r_0: 1 u_e_0_d_0 - 1 u_e_1_d_0 = 1\n"),
            std::string::npos);
  EXPECT_NE(
      lp.text.find(" port_symmetry_p_0_k_0: 1 y_e_0_k_0 - 1 y_e_1_k_0 = 0\n"),
      std::string::npos);
}

TEST(WriteLp, ContinuousBoundsAndEmptyRows) {
  MilpModel m;
  const VarId f = m.AddVariable(Variable::Continuous("f", -kInfinity, kInfinity));
  const VarId g = m.AddVariable(Variable::Continuous("g", -kInfinity, 4));
  const VarId h = m.AddVariable(Variable::Continuous("h", 2.5, kInfinity));
  const VarId k = m.AddVariable(Variable::Continuous("k", 3, 3));
  m.SetObjectiveCoefficient(f, -0.125);
  m.AddConstraint({"empty", {}, Sense::kLessEqual, 1});
  m.AddConstraint({"mix", {{g, 1e-7}, {h, 3}, {k, -2}}, Sense::kGreaterEqual, -1});
  const std::string text = ExportLp(m);
  EXPECT_NE(text.find(" f free\n"), std::string::npos);
  EXPECT_NE(text.find(" -inf <= g <= 4\n"), std::string::npos);
  EXPECT_NE(text.find(" 2.5 <= h <= inf\n"), std::string::npos);
  EXPECT_NE(text.find(" k = 3\n"), std::string::npos);
  EXPECT_NE(text.find(" empty: 0 f <= 1\n"), std::string::npos);
  EXPECT_EQ(text.find("Binaries"), std::string::npos);

  const MilpModel back = ReadLp(text);
  ASSERT_EQ(back.num_variables(), 4);
  ASSERT_EQ(back.num_constraints(), 2);
  EXPECT_TRUE(back.constraint(0).terms.empty());
  std::map<std::string, Variable> vars;
  for (const Variable& v : back.variables()) vars[v.name] = v;
  EXPECT_EQ(vars["f"].lower, -kInfinity);
  EXPECT_EQ(vars["f"].upper, kInfinity);
  EXPECT_EQ(vars["g"].lower, -kInfinity);
  EXPECT_EQ(vars["g"].upper, 4);
  EXPECT_EQ(vars["h"].lower, 2.5);
  EXPECT_EQ(vars["k"].lower, 3);
  EXPECT_EQ(vars["k"].upper, 3);
}

TEST(ReadLp, RoundTripPreservesEvaluation) {
  const BuiltModel built =
      BuildCorrected(GenerateRing(3, {{0, 2, 2.0}, {1, 0, 3.0}}));
  const LpExport lp = WriteLp(built.model);
  const MilpModel back = ReadLp(lp.text);
  ASSERT_EQ(back.num_variables(), built.model.num_variables());
  ASSERT_EQ(back.num_constraints(), built.model.num_constraints());
  std::map<std::string, int> position;
  for (int j = 0; j < back.num_variables(); ++j) {
    position[back.variables()[j].name] = j;
  }
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(-1.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> x(built.model.num_variables());
    for (double& v : x) v = unit(rng);
    std::vector<double> y(x.size());
    for (int j = 0; j < built.model.num_variables(); ++j) {
      y[position.at(lp.variable_names[j])] = x[j];
    }
    EXPECT_NEAR(back.ObjectiveValue(y), built.model.ObjectiveValue(x), 1e-9);
    for (int i = 0; i < built.model.num_constraints(); ++i) {
      EXPECT_NEAR(back.RowActivity(i, y), built.model.RowActivity(i, x), 1e-9);
      EXPECT_EQ(back.constraint(i).sense, built.model.constraint(i).sense);
      EXPECT_EQ(back.constraint(i).rhs, built.model.constraint(i).rhs);
      EXPECT_EQ(back.constraint(i).name, lp.row_names[i]);
    }
  }
  for (const Variable& v : back.variables()) {
    EXPECT_EQ(v.kind, VarKind::kBinary) << v.name;
  }
}

TEST(ReadLp, CommonVariants) {
  const std::string text =
      "\\ handwritten\n"
      "minimize\n"
      "  cost: x + 2 y\n"
      "   - z\n"
      "such that\n"
      "  x + y >\n"
      "    1\n"
      "  c2: -x + 3 z < 4\n"
      "  c3: y + y =< 5\n"
      "bounds\n"
      "  -inf <= z <= 10\n"
      "  x <= 3\n"
      "  y >= -1\n"
      "  w free\n"
      "binary\n"
      "  b\n"
      "end\n";
  const MilpModel m = ReadLp(text);
  ASSERT_EQ(m.num_variables(), 5);
  EXPECT_EQ(m.variables()[0].name, "x");
  EXPECT_EQ(m.objective(), (std::vector<double>{1, 2, -1, 0, 0}));
  ASSERT_EQ(m.num_constraints(), 3);
  EXPECT_EQ(m.constraint(0).name, "R0");
  EXPECT_EQ(m.constraint(0).sense, Sense::kGreaterEqual);
  EXPECT_EQ(m.constraint(0).rhs, 1.0);
  EXPECT_EQ(m.constraint(1).sense, Sense::kLessEqual);
  ASSERT_EQ(m.constraint(2).terms.size(), 1u);
  EXPECT_EQ(m.constraint(2).terms[0].coefficient, 2.0);
  EXPECT_EQ(m.variables()[2].lower, -kInfinity);
  EXPECT_EQ(m.variables()[2].upper, 10);
  EXPECT_EQ(m.variables()[0].upper, 3);
  EXPECT_EQ(m.variables()[1].lower, -1);
  EXPECT_EQ(m.variables()[3].lower, -kInfinity);
  EXPECT_EQ(m.variables()[4].kind, VarKind::kBinary);
}

TEST(ReadLp, RejectsMaximize) {
  try {
    ReadLp("\\ c\nMaximize\n obj: x\nEnd\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 1);
  }
}

TEST(ReadLp, RejectsGeneralIntegers) {
  EXPECT_THROW(ReadLp("Minimize\n obj: x\nGenerals\n x\nEnd\n"), ParseError);
}

TEST(ReadLp, ReportsPositionOfBadToken) {
  try {
    ReadLp("Minimize\n obj: x\nSubject To\n c: x + 3 <= 2\nEnd\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_EQ(e.column(), 11);
  }
  EXPECT_THROW(ReadLp("Minimize\n obj: x $ y\nEnd\n"), ParseError);
  EXPECT_THROW(ReadLp("obj: x\n"), ParseError);
  EXPECT_THROW(ReadLp("Minimize\n obj: x\nSubject To\n c: x <=\n"), ParseError);
}

}  // namespace
}  // namespace greennet
