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
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kcurv/rational.hpp"

namespace kcurv {

using Vector = std::vector<Rational>;

/// Signature class of a vector pair, read off the 2x2 Gram matrix.
enum class PairClass { PosPos, PosNeg, NegNeg, Degenerate };

/// Signature class of a vector triple, read off the 3x3 Gram matrix.
enum class TripleClass { PosPosPos, PosPosNeg, PosNegNeg, NegNegNeg, Degenerate };

std::string to_string(PairClass c);
std::string to_string(TripleClass c);

/// A pseudo-Euclidean vector space of real dimension 2m with a compatible
/// complex structure J. The basis is ordered e_1..e_m, f_1..f_m with
/// J e_i = f_i and J f_i = -e_i; the metric is diagonal with
/// g(e_i, e_i) = g(f_i, f_i) = eps_i. This is the minimal layout making g
/// diagonal and J-compatible, so g(Jx, Jy) = g(x, y) holds identically.
class Space {
 public:
  Space(int m, std::vector<int> eps);

  /// Builds a space from a pattern like "+-+" (one sign per complex direction).
  static Space from_signature(const std::string& pattern);

  int m() const { return m_; }
  int dim() const { return 2 * m_; }
  int sign(int complex_dir) const { return eps_[static_cast<size_t>(complex_dir)]; }

  /// Metric entry g(b_k, b_k) for basis index k in [0, 2m).
  int metric_sign(int k) const { return eps_[static_cast<size_t>(k % m_)]; }

  /// J on basis indices: J b_k = sign * b_index.
  std::pair<int, int> j_index(int k) const {
    return k < m_ ? std::pair{k + m_, +1} : std::pair{k - m_, -1};
  }

  Vector basis_vector(int k) const;
  Vector zero_vector() const { return Vector(static_cast<size_t>(dim())); }

  std::string signature_string() const;
  bool indefinite() const;
  int count_dirs(int sign) const;

  bool operator==(const Space& other) const = default;

 private:
  int m_;
  std::vector<int> eps_;
};

Rational inner(const Space& space, const Vector& u, const Vector& v);
Vector apply_j(const Space& space, const Vector& v);

bool is_zero(const Vector& v);
Vector add(const Vector& u, const Vector& v);
Vector sub(const Vector& u, const Vector& v);
Vector scaled(const Rational& c, const Vector& v);
std::string to_string(const Vector& v);

/// Degenerate iff det(Gram) = 0, PosNeg iff det < 0, otherwise PosPos or
/// NegNeg by the sign of g(x, x). Scale- and swap-invariant.
PairClass classify_pair(const Space& space, const Vector& x, const Vector& y);

/// Inertia of the 3x3 Gram form, computed exactly by congruence reduction.
TripleClass classify_triple(const Space& space, const Vector& x, const Vector& y,
                            const Vector& z);

/// True iff g(x, y) = g(x, Jy) = 0 and both vectors are nonzero.
bool is_antiholomorphic_pair(const Space& space, const Vector& x, const Vector& y);

/// True iff the three vectors are pairwise orthogonal, pairwise J-orthogonal
/// and all nonzero (the span is then orthogonal to its J-image).
bool is_antiholomorphic_triple(const Space& space, const Vector& x, const Vector& y,
                               const Vector& z);

bool pair_class_realizable(const Space& space, PairClass cls, bool antiholomorphic);
bool triple_class_realizable(const Space& space, TripleClass cls);

/// Deterministic sampling stream. All draws are hand-rolled from the engine
/// output so that results are reproducible across standard libraries.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed);

  std::uint64_t next();
  int small_int(int lo, int hi);  // uniform-ish in [lo, hi]

 private:
  std::uint64_t state_;
};

/// Random pair of exactly unit vectors (|g| = 1 each) whose Gram matrix
/// realizes the requested class; the class name fixes the order, e.g.
/// PosNeg returns (spacelike, timelike). When `antiholomorphic` is set the
/// pair additionally satisfies g(x, y) = g(x, Jy) = 0. Deterministic in seed.
/// Throws UnrealizableSignature when the space cannot host the class.
std::pair<Vector, Vector> sample_pair(const Space& space, PairClass cls,
                                      bool antiholomorphic, std::uint64_t seed);
std::pair<Vector, Vector> sample_pair(const Space& space, PairClass cls,
                                      bool antiholomorphic, SampleStream& stream);

/// Random orthonormal antiholomorphic triple of the requested class, in
/// class-name order (e.g. PosPosNeg returns (+, +, -)).
std::array<Vector, 3> sample_triple(const Space& space, TripleClass cls,
                                    std::uint64_t seed);
std::array<Vector, 3> sample_triple(const Space& space, TripleClass cls,
                                    SampleStream& stream);

/// Random non-null vector with g(v, v) = sign, deterministic in the stream.
Vector sample_unit_vector(const Space& space, int sign, SampleStream& stream);

}  // namespace kcurv
