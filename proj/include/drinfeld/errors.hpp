// Copyright 2026 The drinfeld-f2 Authors
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

#ifndef DRINFELD_ERRORS_HPP
#define DRINFELD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace drinfeld {

/// Division by zero, zero gcd, inverse of zero.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An argument outside the documented range or brute-force budget.
class BudgetError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Text that does not follow the element grammar.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A step that must be exact by construction was not (e.g. an inexact
/// division inside a recursion that is supposed to stay in A).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Two computations of the same quantity disagree.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace drinfeld

#endif  // DRINFELD_ERRORS_HPP
