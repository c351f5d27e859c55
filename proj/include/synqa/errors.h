// Copyright 2026 The Synqa Authors.
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

#ifndef SYNQA_ERRORS_H_
#define SYNQA_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace synqa {

// Base class for recoverable errors caused by user input. Programming errors
// (invalid spans, incomplete bindings) use the std::logic_error family.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text: template DSL lines, structured dataset files.
class ParseError : public Error {
 public:
  ParseError(const std::string &message, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + message
                   : message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that violates a semantic rule. Carries every violation.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}
  ValidationError(const std::string &violation)
      : ValidationError(std::vector<std::string>{violation}) {}
  const std::vector<std::string> &violations() const { return violations_; }

 private:
  static std::string join(const std::vector<std::string> &items) {
    std::string out;
    for (const auto &item : items) {
      if (!out.empty()) out += "; ";
      out += item;
    }
    return out;
  }
  std::vector<std::string> violations_;
};

// Bad configuration values or keys, including template sets that cannot be
// used for generation.
class ConfigError : public Error {
 public:
  ConfigError(const std::string &key, const std::string &message)
      : Error(key.empty() ? message : key + ": " + message), key_(key) {}
  const std::string &key() const { return key_; }

 private:
  std::string key_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace synqa

#endif  // SYNQA_ERRORS_H_
