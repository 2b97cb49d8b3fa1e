// Copyright 2026 The nodeunlearn Authors.
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

#ifndef NODEUNLEARN_ERROR_H_
#define NODEUNLEARN_ERROR_H_

#include <stdexcept>
#include <string>

namespace nodeunlearn {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand dimensions do not chain.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Non-finite values, or an iterative method that failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Malformed interchange or checkpoint input. The message names file and line.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Node id, class index or edge outside the valid range.
class IndexError : public Error {
 public:
  using Error::Error;
};

// Arguments are individually well-formed but the request cannot be served
// (empty node sets, ratios yielding no work, invalid configuration).
class InvalidRequestError : public Error {
 public:
  using Error::Error;
};

// API misuse, e.g. replaying a tape against a different network.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace nodeunlearn

#endif  // NODEUNLEARN_ERROR_H_
