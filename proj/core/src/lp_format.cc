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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>

#include <fmt/format.h>

#include "greennet/errors.h"

namespace greennet {

namespace {

constexpr int kTermsPerLine = 6;

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool IsReserved(std::string_view name) {
  static const std::set<std::string> kReserved = {
      "minimize", "minimise", "minimum", "min",      "maximize", "maximise",
      "maximum",  "max",      "subject", "such",     "st",       "s.t.",
      "bounds",   "bound",    "binary",  "binaries", "bin",      "general",
      "generals", "gen",      "integer", "integers", "end",      "free",
      "inf",      "infinity"};
  return kReserved.contains(Lower(name));
}

// Names that must not be the same as any earlier one in their namespace.
class NameTable {
 public:
  std::string Claim(std::string_view original) {
    const std::string base = SanitizeLpName(original);
    std::string name = base;
    for (int suffix = 2; used_.contains(name); ++suffix) {
      name = fmt::format("{}_{}", base, suffix);
    }
    used_.insert(name);
    return name;
  }

 private:
  std::set<std::string> used_;
};

std::string Number(double v) {
  if (v == kInfinity) return "inf";
  if (v == -kInfinity) return "-inf";
  return fmt::format("{}", v);
}

void AppendExpression(std::string& out, const std::vector<Term>& terms,
                      const std::vector<std::string>& names,
                      const std::string& fallback) {
  if (terms.empty()) {
    if (!fallback.empty()) out += " 0 " + fallback;
    return;
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const double c = terms[i].coefficient;
    if (i > 0 && i % kTermsPerLine == 0) out += "\n  ";
    if (i == 0) {
      out += c < 0 ? " -" : " ";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += Number(std::abs(c));
    out += ' ';
    out += names[terms[i].var.index];
  }
}

// ---- reader ----------------------------------------------------------------

enum class TokenKind { kName, kNumber, kSign, kSense, kColon };

struct Token {
  TokenKind kind;
  std::string text;
  double value = 0.0;  // numbers only
  int line = 0;
  int column = 0;
  bool line_start = false;
};

bool IsNameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) ||
         std::string_view("_.!\"#$%&()/,;?@`'{}|~[]").find(c) !=
             std::string_view::npos;
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  bool line_start = true;
  std::size_t i = 0;
  const auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
        line_start = true;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\\') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = column;
    tok.line_start = line_start;
    line_start = false;
    if (c == '+' || c == '-') {
      tok.kind = TokenKind::kSign;
      tok.text = std::string(1, c);
      advance(1);
    } else if (c == ':') {
      tok.kind = TokenKind::kColon;
      tok.text = ":";
      advance(1);
    } else if (c == '<' || c == '>' || c == '=') {
      tok.kind = TokenKind::kSense;
      std::size_t n = 1;
      if (i + 1 < text.size() &&
          (text[i + 1] == '=' || text[i + 1] == '<' || text[i + 1] == '>')) {
        n = 2;
      }
      tok.text = std::string(text.substr(i, n));
      if (tok.text == "<" || tok.text == "=<") tok.text = "<=";
      if (tok.text == ">" || tok.text == "=>") tok.text = ">=";
      if (tok.text != "<=" && tok.text != ">=" && tok.text != "=") {
        throw ParseError(fmt::format("unknown operator '{}'", tok.text), line,
                         column);
      }
      advance(n);
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t n = 0;
      while (i + n < text.size()) {
        const char d = text[i + n];
        if (std::isdigit(static_cast<unsigned char>(d)) || d == '.') {
          ++n;
        } else if ((d == 'e' || d == 'E') && i + n + 1 < text.size()) {
          ++n;
          if (text[i + n] == '+' || text[i + n] == '-') ++n;
        } else {
          break;
        }
      }
      tok.kind = TokenKind::kNumber;
      tok.text = std::string(text.substr(i, n));
      const auto [ptr, ec] = std::from_chars(
          tok.text.data(), tok.text.data() + tok.text.size(), tok.value);
      if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
        throw ParseError(fmt::format("malformed number '{}'", tok.text), line,
                         column);
      }
      advance(n);
    } else if (IsNameChar(c)) {
      std::size_t n = 0;
      while (i + n < text.size() && IsNameChar(text[i + n])) ++n;
      tok.kind = TokenKind::kName;
      tok.text = std::string(text.substr(i, n));
      advance(n);
    } else {
      throw ParseError(fmt::format("unexpected character '{}'", c), line,
                       column);
    }
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

enum class Section { kNone, kObjective, kConstraints, kBounds, kBinaries, kEnd };

struct ParsedRow {
  std::string name;
  std::vector<std::pair<int, double>> terms;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
};

class LpReader {
 public:
  explicit LpReader(std::string_view text) : tokens_(Tokenize(text)) {}

  MilpModel Read() {
    while (pos_ < tokens_.size()) {
      if (const auto header = SectionHeader()) {
        section_ = *header;
        if (section_ == Section::kEnd) break;
        continue;
      }
      switch (section_) {
        case Section::kNone:
          Fail(Peek(), "expected a section header such as 'Minimize'");
        case Section::kObjective:
          ReadObjective();
          break;
        case Section::kConstraints:
          ReadConstraint();
          break;
        case Section::kBounds:
          ReadBound();
          break;
        case Section::kBinaries:
          ReadBinary();
          break;
        case Section::kEnd:
          break;
      }
    }
    return Assemble();
  }

 private:
  [[noreturn]] void Fail(const Token& at, const std::string& message) const {
    throw ParseError(message, at.line, at.column);
  }

  const Token& Peek(std::size_t ahead = 0) const {
    if (pos_ + ahead >= tokens_.size()) {
      static const Token kEof{TokenKind::kName, "<end of file>", 0, 0, 0,
                              false};
      if (tokens_.empty()) return kEof;
      // Report past-the-end errors at the last token.
      const Token& last = tokens_.back();
      Fail(last, "unexpected end of file");
    }
    return tokens_[pos_ + ahead];
  }

  bool AtStatementEnd() const {
    return pos_ >= tokens_.size() ||
           (tokens_[pos_].line_start && IsHeaderAt(pos_));
  }

  bool IsHeaderAt(std::size_t at) const {
    const Token& t = tokens_[at];
    if (!t.line_start || t.kind != TokenKind::kName) return false;
    const std::string word = Lower(t.text);
    static const std::set<std::string> kSingle = {
        "minimize", "minimise", "minimum",  "min",      "maximize",
        "maximise", "maximum",  "max",      "st",       "s.t.",
        "bounds",   "bound",    "binary",   "binaries", "bin",
        "general",  "generals", "gen",      "integer",  "integers",
        "end",      "semi-continuous"};
    if (kSingle.contains(word)) {
      // "min: ..." would be a row named min; headers are never followed by
      // a colon... except objective labels, which follow on the next token.
      return !(at + 1 < tokens_.size() &&
               tokens_[at + 1].kind == TokenKind::kColon &&
               !tokens_[at + 1].line_start &&
               (word == "st" || word == "end" || word == "bound" ||
                word == "bin" || word == "gen"));
    }
    if ((word == "subject" || word == "such") && at + 1 < tokens_.size()) {
      const std::string next = Lower(tokens_[at + 1].text);
      return next == "to" || next == "that";
    }
    return false;
  }

  std::optional<Section> SectionHeader() {
    if (!IsHeaderAt(pos_)) return std::nullopt;
    const Token& t = tokens_[pos_];
    const std::string word = Lower(t.text);
    ++pos_;
    if (word == "subject" || word == "such") {
      ++pos_;
      return Section::kConstraints;
    }
    if (word == "minimize" || word == "minimise" || word == "minimum" ||
        word == "min") {
      return Section::kObjective;
    }
    if (word == "st" || word == "s.t.") return Section::kConstraints;
    if (word == "bounds" || word == "bound") return Section::kBounds;
    if (word == "binary" || word == "binaries" || word == "bin") {
      return Section::kBinaries;
    }
    if (word == "end") return Section::kEnd;
    if (word.starts_with("max")) Fail(t, "maximization is not supported");
    Fail(t, fmt::format("section '{}' is not supported", t.text));
  }

  int Var(const Token& t) {
    if (t.kind != TokenKind::kName) Fail(t, "expected a variable name");
    const auto [it, inserted] =
        var_index_.try_emplace(t.text, static_cast<int>(var_names_.size()));
    if (inserted) var_names_.push_back(t.text);
    return it->second;
  }

  std::optional<std::string> OptionalLabel() {
    if (pos_ + 1 < tokens_.size() && tokens_[pos_].kind == TokenKind::kName &&
        tokens_[pos_ + 1].kind == TokenKind::kColon) {
      std::string label = tokens_[pos_].text;
      pos_ += 2;
      return label;
    }
    return std::nullopt;
  }

  // Signed number, accepting "inf"/"infinity".
  std::optional<double> OptionalValue() {
    std::size_t at = pos_;
    double sign = 1.0;
    while (at < tokens_.size() && tokens_[at].kind == TokenKind::kSign) {
      if (tokens_[at].text == "-") sign = -sign;
      ++at;
    }
    if (at >= tokens_.size()) return std::nullopt;
    const Token& t = tokens_[at];
    if (t.kind == TokenKind::kNumber) {
      pos_ = at + 1;
      return sign * t.value;
    }
    if (t.kind == TokenKind::kName) {
      const std::string word = Lower(t.text);
      if (word == "inf" || word == "infinity") {
        pos_ = at + 1;
        return sign * kInfinity;
      }
    }
    return std::nullopt;
  }

  double Value() {
    const Token& at = Peek();
    if (auto v = OptionalValue()) return *v;
    Fail(at, "expected a number");
  }

  Sense ReadSense() {
    const Token& t = Peek();
    if (t.kind != TokenKind::kSense) Fail(t, "expected <=, >= or =");
    ++pos_;
    if (t.text == "<=") return Sense::kLessEqual;
    if (t.text == ">=") return Sense::kGreaterEqual;
    return Sense::kEqual;
  }

  // Terms up to (not including) a sense token or the end of the statement.
  std::vector<std::pair<int, double>> ReadTerms(bool stop_at_header) {
    std::vector<std::pair<int, double>> terms;
    bool first = true;
    while (pos_ < tokens_.size()) {
      if (stop_at_header && AtStatementEnd()) break;
      const Token& t = tokens_[pos_];
      if (t.kind == TokenKind::kSense) break;
      if (!first && t.kind != TokenKind::kSign) Fail(t, "expected + or -");
      first = false;
      double sign = 1.0;
      while (pos_ < tokens_.size() && tokens_[pos_].kind == TokenKind::kSign) {
        if (tokens_[pos_].text == "-") sign = -sign;
        ++pos_;
      }
      const Token& head = Peek();
      double coefficient = 1.0;
      if (head.kind == TokenKind::kNumber) {
        coefficient = head.value;
        ++pos_;
        const Token& next = Peek();
        if (next.kind != TokenKind::kName) {
          Fail(next, "constant terms are not supported on the left-hand side");
        }
      }
      const Token& name = Peek();
      if (name.kind != TokenKind::kName) Fail(name, "expected a variable name");
      ++pos_;
      terms.emplace_back(Var(name), sign * coefficient);
    }
    return terms;
  }

  void ReadObjective() {
    OptionalLabel();
    auto terms = ReadTerms(/*stop_at_header=*/true);
    if (pos_ < tokens_.size() && tokens_[pos_].kind == TokenKind::kSense) {
      Fail(tokens_[pos_], "the objective cannot have a sense");
    }
    objective_.insert(objective_.end(), terms.begin(), terms.end());
  }

  void ReadConstraint() {
    ParsedRow row;
    const Token& first = Peek();
    if (auto label = OptionalLabel()) {
      row.name = *label;
    } else {
      row.name = fmt::format("R{}", rows_.size());
    }
    row.terms = ReadTerms(/*stop_at_header=*/false);
    if (row.terms.empty()) Fail(first, "constraint has no terms");
    row.sense = ReadSense();
    row.rhs = Value();
    if (!std::isfinite(row.rhs)) Fail(first, "right-hand side must be finite");
    rows_.push_back(std::move(row));
  }

  void SetLower(int var, double v) { bounds_[var].first = v; }
  void SetUpper(int var, double v) { bounds_[var].second = v; }

  void ReadBound() {
    const Token& first = Peek();
    if (first.kind == TokenKind::kName && pos_ + 1 < tokens_.size() &&
        tokens_[pos_ + 1].kind == TokenKind::kName &&
        Lower(tokens_[pos_ + 1].text) == "free") {
      const int var = Var(first);
      pos_ += 2;
      Touch(var);
      SetLower(var, -kInfinity);
      SetUpper(var, kInfinity);
      return;
    }
    if (auto value = OptionalValue()) {
      // value (<=|>=|=) var [(<=|>=) value]
      const Sense s1 = ReadSense();
      const int var = Var(Peek());
      ++pos_;
      Touch(var);
      if (s1 == Sense::kLessEqual) SetLower(var, *value);
      if (s1 == Sense::kGreaterEqual) SetUpper(var, *value);
      if (s1 == Sense::kEqual) {
        SetLower(var, *value);
        SetUpper(var, *value);
        return;
      }
      if (pos_ < tokens_.size() && tokens_[pos_].kind == TokenKind::kSense) {
        const Sense s2 = ReadSense();
        const double v2 = Value();
        if (s2 == Sense::kLessEqual) SetUpper(var, v2);
        if (s2 == Sense::kGreaterEqual) SetLower(var, v2);
        if (s2 == Sense::kEqual) Fail(first, "malformed bound");
      }
      return;
    }
    const int var = Var(first);
    ++pos_;
    Touch(var);
    const Sense s = ReadSense();
    const double v = Value();
    if (s == Sense::kLessEqual) SetUpper(var, v);
    if (s == Sense::kGreaterEqual) SetLower(var, v);
    if (s == Sense::kEqual) {
      SetLower(var, v);
      SetUpper(var, v);
    }
  }

  void ReadBinary() {
    const Token& t = Peek();
    const int var = Var(t);
    ++pos_;
    binary_.insert(var);
  }

  void Touch(int var) { bounds_.try_emplace(var, 0.0, kInfinity); }

  MilpModel Assemble() {
    MilpModel model;
    for (int j = 0; j < static_cast<int>(var_names_.size()); ++j) {
      if (binary_.contains(j)) {
        model.AddVariable(Variable::Binary(var_names_[j]));
        continue;
      }
      double lo = 0.0;
      double hi = kInfinity;
      if (const auto it = bounds_.find(j); it != bounds_.end()) {
        std::tie(lo, hi) = it->second;
      }
      model.AddVariable(Variable::Continuous(var_names_[j], lo, hi));
    }
    std::map<int, double> objective;
    for (const auto& [var, c] : objective_) objective[var] += c;
    for (const auto& [var, c] : objective) {
      model.SetObjectiveCoefficient(VarId{var}, c);
    }
    for (const ParsedRow& row : rows_) {
      std::map<int, double> merged;
      for (const auto& [var, c] : row.terms) merged[var] += c;
      LinearConstraint constraint{row.name, {}, row.sense, row.rhs};
      for (const auto& [var, c] : merged) {
        if (c != 0.0) constraint.terms.push_back({VarId{var}, c});
      }
      model.AddConstraint(std::move(constraint));
    }
    return model;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Section section_ = Section::kNone;
  std::unordered_map<std::string, int> var_index_;
  std::vector<std::string> var_names_;
  std::vector<std::pair<int, double>> objective_;
  std::vector<ParsedRow> rows_;
  std::map<int, std::pair<double, double>> bounds_;
  std::set<int> binary_;
};

}  // namespace

std::string SanitizeLpName(std::string_view name) {
  std::string out;
  for (const char c : name) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
                    c == '.';
    const char mapped = ok ? c : '_';
    if (mapped == '_' && !out.empty() && out.back() == '_') continue;
    out += mapped;
  }
  while (!out.empty() && out.back() == '_' && out.size() > 1) out.pop_back();
  if (out.empty() || out == "_") return "_";
  const bool numeric_start =
      std::isdigit(static_cast<unsigned char>(out[0])) || out[0] == '.';
  const bool exponent_like =
      (out[0] == 'e' || out[0] == 'E') && out.size() > 1 &&
      (std::isdigit(static_cast<unsigned char>(out[1])) || out[1] == 'e' ||
       out[1] == 'E');
  if (numeric_start || exponent_like || IsReserved(out)) out.insert(0, "_");
  return out;
}

LpExport WriteLp(const MilpModel& model) {
  LpExport result;
  NameTable var_table;
  NameTable row_table;
  for (const Variable& v : model.variables()) {
    result.variable_names.push_back(var_table.Claim(v.name));
  }
  for (const LinearConstraint& row : model.constraints()) {
    result.row_names.push_back(row_table.Claim(row.name));
  }
  const std::string fallback =
      result.variable_names.empty() ? "" : result.variable_names.front();

  std::string& out = result.text;
  out += "\\ greennet LP export\n";
  for (const auto& [key, value] : model.metadata()) {
    out += fmt::format("\\ {}: {}\n", key, value);
  }
  for (int j = 0; j < model.num_variables(); ++j) {
    if (result.variable_names[j] != model.variables()[j].name) {
      out += fmt::format("\\ {} = {}\n", result.variable_names[j],
                         model.variables()[j].name);
    }
  }
  for (int i = 0; i < model.num_constraints(); ++i) {
    if (result.row_names[i] != model.constraint(i).name) {
      out += fmt::format("\\ {} = {}\n", result.row_names[i],
                         model.constraint(i).name);
    }
  }

  out += "Minimize\n obj:";
  std::vector<Term> objective;
  for (int j = 0; j < model.num_variables(); ++j) {
    if (model.objective()[j] != 0.0) {
      objective.push_back({VarId{j}, model.objective()[j]});
    }
  }
  AppendExpression(out, objective, result.variable_names, fallback);
  out += "\nSubject To\n";
  for (int i = 0; i < model.num_constraints(); ++i) {
    const LinearConstraint& row = model.constraint(i);
    if (row.terms.empty() && fallback.empty()) {
      out += fmt::format("\\ {}: empty row without variables omitted\n",
                         result.row_names[i]);
      continue;
    }
    out += ' ';
    out += result.row_names[i];
    out += ':';
    AppendExpression(out, row.terms, result.variable_names, fallback);
    out += fmt::format(" {} {}\n", SenseSymbol(row.sense), Number(row.rhs));
  }

  out += "Bounds\n";
  std::vector<std::string> binaries;
  for (int j = 0; j < model.num_variables(); ++j) {
    const Variable& v = model.variables()[j];
    const std::string& name = result.variable_names[j];
    if (v.kind == VarKind::kBinary) {
      out += fmt::format(" 0 <= {} <= 1\n", name);
      binaries.push_back(name);
    } else if (v.lower == -kInfinity && v.upper == kInfinity) {
      out += fmt::format(" {} free\n", name);
    } else if (v.lower == v.upper) {
      out += fmt::format(" {} = {}\n", name, Number(v.lower));
    } else {
      out += fmt::format(" {} <= {} <= {}\n", Number(v.lower), name,
                         Number(v.upper));
    }
  }
  if (!binaries.empty()) {
    out += "Binaries\n";
    for (std::size_t i = 0; i < binaries.size(); ++i) {
      out += (i % 8 == 0) ? " " : " ";
      out += binaries[i];
      if (i % 8 == 7 || i + 1 == binaries.size()) out += '\n';
    }
  }
  out += "End\n";
  return result;
}

MilpModel ReadLp(std::string_view text) { return LpReader(text).Read(); }

}  // namespace greennet
