// Copyright (c) 2026, the kcurv authors.
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//         http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace kcurv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector length does not match the space it is used with.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A requested signature class cannot exist in the given space.
class UnrealizableSignature : public Error {
 public:
  using Error::Error;
};

/// Sectional curvature of a plane with vanishing Gram determinant.
class DegeneratePlane : public Error {
 public:
  using Error::Error;
};

/// Holomorphic sectional curvature of a null vector.
class NullVector : public Error {
 public:
  using Error::Error;
};

/// A tensor failed symmetry validation where a valid one is required.
class InvalidTensor : public Error {
 public:
  using Error::Error;
};

/// Constraint sampling did not reach a stable rank; retry with more samples.
class RankNotStabilized : public Error {
 public:
  using Error::Error;
};

/// Malformed input text (tensor files, rationals, signatures).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation-specific precondition (orthonormality, unit norm, ...) failed.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace kcurv
