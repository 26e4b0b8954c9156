// Copyright 2026 The viewdiv Authors.
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

#ifndef VIEWDIV_ERRORS_H_
#define VIEWDIV_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace viewdiv {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unknown user, tweet or category id.
class LookupError : public Error {
 public:
  using Error::Error;
};

// A caller broke a documented precondition (n < 2 histogram, sample outside
// [0, 1], non-seed tweet handed to a category histogram, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

// Unreadable stream or file.
class InputError : public Error {
 public:
  using Error::Error;
};

// A configuration or dataset failed validation. Carries every violation.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<std::string> violations);
  ConfigError(const std::string& message, std::vector<std::string> violations)
      : Error(message), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// Infeasible synthetic-generator parameters.
class ParamError : public Error {
 public:
  using Error::Error;
};

// The brute-force oracle refuses inputs above its size guard.
class RefusalError : public Error {
 public:
  using Error::Error;
};

}  // namespace viewdiv

#endif  // VIEWDIV_ERRORS_H_
