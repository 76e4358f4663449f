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
#include <map>
#include <optional>
#include <string>

#include "kcurv/curvature.hpp"
#include "kcurv/space.hpp"

namespace kcurv {

/// Exact polynomial in the formal parameter a (dense coefficient list).
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c0);  // NOLINT: implicit constant promotion is intended
  Poly(int c0) : Poly(Rational(c0)) {}

  static Poly alpha_power(int degree, const Rational& coef = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rational& coef(int degree) const;

  Rational operator()(const Rational& alpha) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(const Rational& c, const Poly& p);
  friend Poly operator-(const Poly& p) { return Rational(-1) * p; }

  bool operator==(const Poly& other) const = default;

  std::string str() const;  // e.g. "1 + 3a^2"

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Formal symbols: three independent vectors and their J-images, with
/// J x = Jx and J Jx = -x tracked by sign.
enum class Sym : std::uint8_t { X = 0, JX = 1, Y = 2, JY = 3, Z = 4, JZ = 5 };

std::string to_string(Sym s);

/// J action on a symbol: returns the image and the sign picked up.
std::pair<Sym, int> j_sym(Sym s);

/// Formal linear combination of symbols with polynomial coefficients.
struct SymbolVector {
  std::array<Poly, 6> comp;

  friend SymbolVector operator+(const SymbolVector& a, const SymbolVector& b);
  friend SymbolVector operator*(const Poly& p, const SymbolVector& v);
};

SymbolVector sym(Sym s);
SymbolVector j(const SymbolVector& v);

struct Monomial {
  std::array<Sym, 4> s;
  auto operator<=>(const Monomial& other) const = default;
};

/// Orbit-minimal representative of a curvature monomial under the
/// sign-tracked relabelings generated by the two slot antisymmetries, the
/// pair swap and the J-slot rule (J applied to slots 3,4, which together
/// with the pair swap also yields J on slots 1,2). Returns the representative
/// and the relating sign, or nullopt when the orbit forces the monomial to
/// vanish (the same tuple is reached with both signs).
std::optional<std::pair<Monomial, int>> canonical_monomial(const Monomial& m);

/// Sum of canonical curvature monomials with polynomial coefficients.
class MonomialSum {
 public:
  /// Canonicalizes and merges; terms with zero coefficient are dropped.
  void add(const Monomial& m, const Poly& coef);

  const std::map<Monomial, Poly>& terms() const { return terms_; }
  int degree() const;

  MonomialSum& operator+=(const MonomialSum& other);
  MonomialSum& operator-=(const MonomialSum& other);
  friend MonomialSum operator-(MonomialSum lhs, const MonomialSum& rhs) {
    return lhs -= rhs;
  }

  bool operator==(const MonomialSum& other) const = default;

  std::string pretty() const;

 private:
  std::map<Monomial, Poly> terms_;
};

/// Full quadrilinear expansion of R(a, b, c, d) followed by
/// canonicalization. Independent of expansion order.
MonomialSum expand(const SymbolVector& a, const SymbolVector& b,
                   const SymbolVector& c, const SymbolVector& d);

/// Vector assignment for the base symbols; J-images are derived.
struct Assignment {
  std::optional<Vector> x;
  std::optional<Vector> y;
  std::optional<Vector> z;
};

/// Substitutes vectors and alpha and evaluates each monomial against R.
/// Equals the direct evaluation of the unexpanded expression.
/// Throws Error when a symbol appearing in `ms` has no assignment.
Rational evaluate(const MonomialSum& ms, const CurvatureTensor& R,
                  const Assignment& assignment, const Rational& alpha);

/// R(x + a y, Jx + a Jy, Jx + a Jy, a x + y).
MonomialSum prop1_expression();
/// R(v, Jv, Jv, v) with v = x + a y.
MonomialSum theorem1_expression();
/// R(v, z, z, v) with v = x + a y.
MonomialSum theorem2_expression();

}  // namespace kcurv
