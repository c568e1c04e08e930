// Copyright 2026 The tvh Authors.
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

#ifndef TVH_ERRORS_HPP_
#define TVH_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tvh {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// open > close, or no participants.
class MalformedChannel : public Error {
 public:
  using Error::Error;
};

// window_start > window_end.
class EmptyWindow : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public Error {
 public:
  using Error::Error;
};

// The exhaustive oracle refuses instances beyond its guard.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

// Errors raised while reading an event log carry the 1-based line number.
class IngestError : public Error {
 public:
  IngestError(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Syntax problems: malformed JSON, missing keys or columns, wrong types.
class ParseError : public IngestError {
 public:
  using IngestError::IngestError;
};

// Syntactically fine but semantically invalid: inverted interval, no
// participants.
class InvalidRecord : public IngestError {
 public:
  using IngestError::IngestError;
};

}  // namespace tvh

#endif  // TVH_ERRORS_HPP_
