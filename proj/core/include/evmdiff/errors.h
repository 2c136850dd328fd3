// Copyright 2026 The evmdiff Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EVMDIFF_ERRORS_H_
#define EVMDIFF_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evmdiff {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SourcePos {
  size_t line = 1;
  size_t column = 1;
  bool operator==(const SourcePos&) const = default;
};

class SyntaxError : public Error {
 public:
  SyntaxError(SourcePos pos, std::string expected, const std::string& found)
      : Error(std::to_string(pos.line) + ":" + std::to_string(pos.column) +
              ": expected " + expected + ", found '" + found + "'"),
        pos_(pos),
        expected_(std::move(expected)) {}

  SourcePos pos() const { return pos_; }
  const std::string& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::string expected_;
};

class TypeError : public Error {
 public:
  TypeError(std::string identifier, std::string reason)
      : Error("type error at '" + identifier + "': " + reason),
        identifier_(std::move(identifier)),
        reason_(std::move(reason)) {}

  const std::string& identifier() const { return identifier_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string identifier_;
  std::string reason_;
};

class CompileError : public Error {
 public:
  CompileError(const std::string& what, std::string path)
      : Error(what + " at " + path), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Raised by a mutator when the contract lacks the construct it rewrites.
class NoApplicableSite : public Error {
 public:
  explicit NoApplicableSite(int mutator)
      : Error("mutator " + std::to_string(mutator) + " has no applicable site"),
        mutator_(mutator) {}
  int mutator() const { return mutator_; }

 private:
  int mutator_;
};

class NothingMutated : public Error {
 public:
  NothingMutated() : Error("no selected mutator was applicable") {}
};

class EmptyPool : public Error {
 public:
  EmptyPool() : Error("seed pool is empty") {}
};

class TooFewBackends : public Error {
 public:
  explicit TooFewBackends(size_t n)
      : Error("differential execution needs at least 2 backends, got " +
              std::to_string(n)) {}
};

class ProtocolError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class NoViableSeeds : public Error {
 public:
  NoViableSeeds() : Error("none of the initial seeds parsed and compiled") {}
};

class StaleFinding : public Error {
 public:
  using Error::Error;
};

class InvalidFinding : public Error {
 public:
  using Error::Error;
};

}  // namespace evmdiff

#endif  // EVMDIFF_ERRORS_H_
