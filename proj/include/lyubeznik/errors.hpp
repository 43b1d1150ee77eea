/* Copyright 2026 The lyubeznik Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef LYUBEZNIK_ERRORS_HPP_
#define LYUBEZNIK_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lyu {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands live in different rings") {}
  explicit RingMismatch(const std::string& what) : Error(what) {}
};

class ExponentOverflow : public Error {
 public:
  using Error::Error;
};

/// Raised when a Groebner computation processes more S-pairs than allowed.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Raised when a Lyubeznik table is requested for a ring that fails Fedder's
/// criterion.
class NotFPure : public Error {
 public:
  using Error::Error;
};

/// An internal consistency assertion failed (d*d != 0, containment violated,
/// auxiliary variable leaked, ...).
class LogicError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

#define LYU_ASSERT(cond, msg)                                  \
  do {                                                         \
    if (!(cond)) throw ::lyu::LogicError(std::string(msg));    \
  } while (false)

}  // namespace lyu

#endif  // LYUBEZNIK_ERRORS_HPP_
