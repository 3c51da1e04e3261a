// Copyright 2026 The lvgame Authors
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

#ifndef LVGAME_ERRORS_HPP_
#define LVGAME_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace lvgame {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A point lies outside the domain of an evaluator (non-positive state,
// off-simplex strategy, non-positive scalar parameter).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Dimensions of vectors or matrices do not conform.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Malformed input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Errors in this group map to exit code 2 in the command-line tool.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class SingularityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Monomial evaluation overflowed binary64.
class RangeError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class IntegrationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// A GLV state component fell below the positivity floor.
class BoundaryCollision : public IntegrationError {
 public:
  using IntegrationError::IntegrationError;
};

// A replicator strategy component underflowed.
class SimplexUnderflow : public IntegrationError {
 public:
  using IntegrationError::IntegrationError;
};

}  // namespace lvgame

#endif  // LVGAME_ERRORS_HPP_
