// Copyright 2026 The qgamble Authors
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

#ifndef QGAMBLE_ERRORS_HPP
#define QGAMBLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qgamble {

// Caller handed us something outside an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A structural expectation about an operator (sparsity, symmetry) failed.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Root finding or quadrature could not deliver the requested accuracy.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& what, double residual)
      : NumericalError(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace qgamble

#endif  // QGAMBLE_ERRORS_HPP
