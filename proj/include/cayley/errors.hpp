// Copyright 2026 The cayley-degree Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAYLEY_ERRORS_HPP
#define CAYLEY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cayley {

enum class ErrorKind {
  InvalidArgument,
  ClosureCapExceeded,
  NotAUnit,
  ConductorMismatch,
  CoefficientBudgetExceeded,
  InternalInconsistency,
  NotSymmetric,
  NotClassFunction,
  NotNormal,
  InvalidConnection,
  Disconnected,
  UnsupportedFamily,
  NoConvergence,
  HypothesisFails,
  OrderLimitExceeded,
  SearchTooLarge,
  UnknownElement,
  ParseError,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::ConductorMismatch: return "ConductorMismatch";
    case ErrorKind::CoefficientBudgetExceeded: return "CoefficientBudgetExceeded";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotClassFunction: return "NotClassFunction";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::InvalidConnection: return "InvalidConnection";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::HypothesisFails: return "HypothesisFails";
    case ErrorKind::OrderLimitExceeded: return "OrderLimitExceeded";
    case ErrorKind::SearchTooLarge: return "SearchTooLarge";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a kind so callers (notably
/// the CLI) can map it onto an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cayley

#endif  // CAYLEY_ERRORS_HPP
