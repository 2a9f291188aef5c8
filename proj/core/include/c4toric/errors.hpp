// Copyright 2026 The c4toric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef C4TORIC_ERRORS_HPP
#define C4TORIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace c4toric {

/// Operands disagree on qubit count, or an index is out of range.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter is outside its documented domain (l < 2, p > 1, ...).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An odd number of defects was handed to the matcher. On the torus this
/// always indicates a simulation bug.
class ParityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A schedule could not be built; the message names the violated constraint.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive search would exceed its combinatorial budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed (e.g. judging a residual with a nontrivial syndrome).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace c4toric

#endif  // C4TORIC_ERRORS_HPP
