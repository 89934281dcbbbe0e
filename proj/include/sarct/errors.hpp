// Copyright 2026 The sarct Authors
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

#ifndef SARCT_ERRORS_HPP
#define SARCT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sarct {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class EmptyInputError : public Error {
 public:
  EmptyInputError() : Error("input text is empty or whitespace-only") {}
};

class ModelNotFoundError : public Error {
 public:
  explicit ModelNotFoundError(const std::string& path)
      : Error("model file not found: " + path) {}
};

class FileNotFoundError : public Error {
 public:
  explicit FileNotFoundError(const std::string& path)
      : Error("file not found: " + path) {}
};

// Malformed line in a text resource; `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("parse error at line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& msg) : Error(msg) {}
};

class InvalidTagError : public Error {
 public:
  explicit InvalidTagError(const std::string& tag)
      : Error("tag outside tagset: " + tag) {}
};

class NotAVerbError : public Error {
 public:
  explicit NotAVerbError(std::size_t index)
      : Error("token " + std::to_string(index) + " is not verb-tagged") {}
};

class InvalidAnnotationError : public Error {
 public:
  explicit InvalidAnnotationError(const std::string& msg) : Error(msg) {}
};

class AnnotationMismatchError : public Error {
 public:
  AnnotationMismatchError(const std::string& word, std::size_t line)
      : Error("annotation mismatch at line " + std::to_string(line) +
              ": gold word \"" + word + "\" not found in text"),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class EmptyTrainingSetError : public Error {
 public:
  EmptyTrainingSetError() : Error("training set is empty") {}
};

class NothingToCombineError : public Error {
 public:
  NothingToCombineError() : Error("no rule candidates to combine") {}
};

class InvalidFoldPlanError : public Error {
 public:
  explicit InvalidFoldPlanError(const std::string& msg) : Error(msg) {}
};

}  // namespace sarct

#endif  // SARCT_ERRORS_HPP
