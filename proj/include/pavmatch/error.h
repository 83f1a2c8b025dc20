// Copyright 2026 The Authors.
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

#ifndef PAVMATCH_ERROR_H_
#define PAVMATCH_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pavmatch {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// An operation was called outside its domain (size mismatch, 0 in a target
// set, wrong rank, unmet theorem hypotheses, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The operation does not apply to this input, e.g. critical pairs in an
// infinite group.
class NotApplicableError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Elements or subsets drawn from different groups.
class SpecMismatchError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A free-factor coordinate left the int64 range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A family of sets is not a matroid basis system, or has a loop.
class MatroidError : public Error {
 public:
  using Error::Error;
};

// A step that a theorem guarantees failed at runtime. The message carries
// the full instance.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// Malformed text input; carries a 1-based line and column.
class ParseError : public Error {
 public:
  // `source` (a file name, say) is prepended when given.
  ParseError(const std::string& message, std::size_t line, std::size_t column,
             const std::string& source = "")
      : Error((source.empty() ? "" : source + ": ") + "line " +
              std::to_string(line) + ", column " + std::to_string(column) +
              ": " + message),
        detail_(message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  // The message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace pavmatch

#endif  // PAVMATCH_ERROR_H_
