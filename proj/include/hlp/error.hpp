// Copyright 2026 The HLP Authors. All Rights Reserved.
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

#ifndef HLP_ERROR_HPP_
#define HLP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace hlp {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands of incompatible shape (matrix dims, vector lengths).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Input violates a structural invariant (empty column, bad index, NaN).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Input is well-formed but leaves nothing to work with.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// Exhaustive routines refuse instances beyond their size limit.
class ScaleLimitError : public Error {
 public:
  using Error::Error;
};

// A linear system that must be solved is (numerically) singular.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. The message carries the file and line.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hlp

#endif  // HLP_ERROR_HPP_
