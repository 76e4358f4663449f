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

#include <optional>
#include <utility>
#include <vector>

#include "kcurv/curvature.hpp"
#include "kcurv/space.hpp"

namespace kcurv {

struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;  // row-major

  RationalMatrix() = default;
  RationalMatrix(int r, int c)
      : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

  const Rational& at(int r, int c) const {
    return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)];
  }
  Rational& at(int r, int c) {
    return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)];
  }
};

/// Column processing order for the exact elimination. Two distinct orders
/// give independent routes to the same rank/nullity.
enum class ElimOrder { Forward, Reverse };

/// Exact basis of { v : M v = 0 }. Rows are cleared of denominators and
/// reduced by integer row combinations with per-row gcd normalization, so no
/// rational fractions appear during forward elimination and coefficient
/// growth stays bounded. Empty result iff M has full column rank.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m,
                                             ElimOrder order = ElimOrder::Forward);

int rank(const RationalMatrix& m, ElimOrder order = ElimOrder::Forward);

/// A sparse homogeneous system with small integer coefficients.
struct LinearSystem {
  int cols = 0;
  std::vector<std::vector<std::pair<int, int>>> rows;  // (column, coefficient)
};

std::vector<std::vector<Rational>> nullspace(const LinearSystem& sys,
                                             ElimOrder order = ElimOrder::Forward);

/// Floating-point rank of the same system; an independent cross-check for
/// the exact elimination, never used by the core results.
int float_rank(const LinearSystem& sys);

/// One row per basis-index instance of each of the five curvature identities
/// (both antisymmetries, first Bianchi, J-invariance, pair symmetry) over the
/// (2m)^4 component unknowns. Redundant instances are deduplicated; rank
/// computation absorbs the rest of the redundancy.
LinearSystem kaehler_constraint_system(const Space& space);

/// An exact basis of the linear space of curvature tensors satisfying all
/// five identities on the given space.
struct TensorBasis {
  Space space;
  std::vector<CurvatureTensor> elements;
  /// Flat component index "owned" by each element: element k has value 1
  /// there and value 0 at every other element's owned component, which makes
  /// coordinates a direct read-off.
  std::vector<size_t> free_components;

  int dimension() const { return static_cast<int>(elements.size()); }
};

TensorBasis kaehler_basis(const Space& space, ElimOrder order = ElimOrder::Forward);

/// Exact coordinates of R in the basis, or nullopt when R is not in the span.
std::optional<std::vector<Rational>> coordinates(const TensorBasis& basis,
                                                 const CurvatureTensor& r);

}  // namespace kcurv
