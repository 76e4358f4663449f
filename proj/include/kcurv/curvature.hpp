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

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "kcurv/space.hpp"

namespace kcurv {

/// Dense 4-index array of exact components R(b_i, b_j, b_k, b_l) over the
/// standard basis. Storage is fully redundant; the symmetries are enforced
/// by validation, not by the representation. Sized for m <= 4.
class CurvatureTensor {
 public:
  explicit CurvatureTensor(Space space);

  const Space& space() const { return space_; }
  int dim() const { return space_.dim(); }

  const Rational& at(int i, int j, int k, int l) const {
    return comp_[index(i, j, k, l)];
  }
  Rational& at(int i, int j, int k, int l) { return comp_[index(i, j, k, l)]; }

  const Rational& component(size_t flat) const { return comp_[flat]; }
  Rational& component(size_t flat) { return comp_[flat]; }
  size_t component_count() const { return comp_.size(); }

  bool is_zero() const;
  CurvatureTensor& add_scaled(const Rational& c, const CurvatureTensor& other);

  bool operator==(const CurvatureTensor& other) const = default;

  size_t index(int i, int j, int k, int l) const {
    const auto n = static_cast<size_t>(dim());
    return ((static_cast<size_t>(i) * n + static_cast<size_t>(j)) * n +
            static_cast<size_t>(k)) * n + static_cast<size_t>(l);
  }
  std::array<int, 4> unindex(size_t flat) const;

 private:
  Space space_;
  std::vector<Rational> comp_;
};

/// pi1(x,y,z,u) = g(x,u) g(y,z) - g(x,z) g(y,u).
Rational pi1(const Space& space, const Vector& x, const Vector& y, const Vector& z,
             const Vector& u);

/// pi2(x,y,z,u) = g(x,Ju) g(y,Jz) - g(x,Jz) g(y,Ju) - 2 g(x,Jy) g(z,Ju).
Rational pi2(const Space& space, const Vector& x, const Vector& y, const Vector& z,
             const Vector& u);

/// The constant holomorphic sectional curvature tensor (mu/4)(pi1 + pi2).
CurvatureTensor model_tensor(const Space& space, const Rational& mu);

/// Quadrilinear extension of the stored components.
Rational eval(const CurvatureTensor& R, const Vector& x, const Vector& y,
              const Vector& z, const Vector& u);

struct SymmetryReport {
  struct Check {
    bool ok = true;
    std::array<int, 4> index{};  // one offending tuple when !ok
  };
  Check antisym_12;   // R(x,y,z,u) = -R(y,x,z,u)
  Check antisym_34;   // R(x,y,z,u) = -R(x,y,u,z)
  Check bianchi;      // R(x,y,z,u) + R(y,z,x,u) + R(z,x,y,u) = 0
  Check j_invariance; // R(x,y,z,u) = R(x,y,Jz,Ju)
  Check pair_symmetry;// R(x,y,z,u) = R(z,u,x,y)

  bool all_ok() const {
    return antisym_12.ok && antisym_34.ok && bianchi.ok && j_invariance.ok &&
           pair_symmetry.ok;
  }
  std::string describe() const;
};

/// Exhaustive check of all five identities over basis index tuples.
SymmetryReport validate_symmetries(const CurvatureTensor& R);

/// K(span{x,y}) = R(x,y,y,x) / pi1(x,y,y,x); basis-independent.
/// Throws DegeneratePlane when the Gram determinant vanishes.
Rational sectional(const CurvatureTensor& R, const Vector& x, const Vector& y);

/// H(x) = K(x, Jx) = R(x,Jx,Jx,x) / g(x,x)^2; throws NullVector on g(x,x)=0.
Rational holomorphic_sectional(const CurvatureTensor& R, const Vector& x);

struct ConstantHsc {
  Rational mu;
};
struct NotConstant {
  std::array<int, 4> index{};  // component where R differs from the model
  Rational residual;           // R - (mu/4)(pi1+pi2) at that component
};
using Verdict = std::variant<ConstantHsc, NotConstant>;

bool is_constant(const Verdict& v);
std::string to_string(const Verdict& v);

/// Extracts mu from the first basis direction and compares componentwise
/// against the model tensor. Throws InvalidTensor unless the symmetry
/// validation passes.
Verdict is_constant_hsc(const CurvatureTensor& R);

}  // namespace kcurv
