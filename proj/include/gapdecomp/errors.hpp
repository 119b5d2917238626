// Copyright 2026 The gapdecomp Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gapdecomp {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element or table shape does not match its group / arity.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A value lies outside its domain (tuple component, variable index, key).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed argument combination (e.g. identifying a variable with itself).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// An operation's documented precondition does not hold for this input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A phi map was queried on a subset outside the keys it stores.
class CoverageError : public Error {
 public:
  using Error::Error;
};

// A computation would exceed the documented size guardrails.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A proven invariant failed to hold. Reaching this is always a bug.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

// Text input could not be parsed. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gapdecomp
