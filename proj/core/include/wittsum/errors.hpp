/*
 * Copyright 2026 The wittsum Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace wittsum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data violates a stated hypothesis or schema. CLI exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An exact identity that must hold did not (integrality, certificates,
/// degree checks, valuation bounds). CLI exit code 3.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

class DegreeViolation : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

class IntegralityViolation : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

/// A configured point or combinatorial budget would be exceeded. CLI exit code 4.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace wittsum
