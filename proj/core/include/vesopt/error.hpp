// Copyright 2026 The vesopt Authors. All Rights Reserved.
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
// =============================================================================

#ifndef VESOPT_ERROR_HPP
#define VESOPT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace vesopt {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function (e.g. digamma(0)).
class DomainError : public Error {
 public:
  using Error::Error;
};

// No sign change over a bracket, or the residual tolerance cannot be met.
class RootFindingError : public Error {
 public:
  using Error::Error;
};

// Gram matrix could not be factored within the jitter ladder; usually
// duplicate or near-duplicate inputs.
class SingularDataError : public Error {
 public:
  using Error::Error;
};

// Posterior covariance over a sampling grid could not be factored.
class GridDegeneracyError : public Error {
 public:
  using Error::Error;
};

// Sample moments violate Jensen's inequality beyond rounding.
class InconsistentMomentsError : public Error {
 public:
  using Error::Error;
};

// An observed value exceeds the declared optimum of an objective.
class InvalidFStarError : public Error {
 public:
  using Error::Error;
};

// Reading or writing a file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration; field() names the offending setting.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace vesopt

#endif  // VESOPT_ERROR_HPP
