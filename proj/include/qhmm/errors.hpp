// Copyright 2026 The qhmm Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qhmm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A value lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input such as an unknown symbol or label.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An exponential routine would exceed its configured work cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A model or object fails its invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Viterbi was asked to run on a model whose operations are not all of c*channel form.
class EligibilityError : public Error {
 public:
  using Error::Error;
};

/// Reading or writing a file failed, or its contents could not be parsed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qhmm
