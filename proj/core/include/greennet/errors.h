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

#ifndef GREENNET_ERRORS_H_
#define GREENNET_ERRORS_H_

#include <stdexcept>
#include <string>

namespace greennet {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied value breaks an operation's contract (bad index, bad
// bounds, mismatched dimensions, malformed instance).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Text could not be read as an instance, solution, or LP document. Line and
// column are 1-based; zero means the position is unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line = 0, int column = 0)
      : Error(line > 0 ? message + " (line " + std::to_string(line) +
                             ", column " + std::to_string(column) + ")"
                       : message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// The simplex method could not make progress without pivoting on a
// numerically meaningless element, or its final point failed verification.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// The exhaustive oracle would have to visit more combinations than allowed.
class EnumerationLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace greennet

#endif  // GREENNET_ERRORS_H_
