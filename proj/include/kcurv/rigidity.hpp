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

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kcurv/curvature.hpp"
#include "kcurv/space.hpp"
#include "kcurv/tensor_space.hpp"

namespace kcurv {

/// Linear vanishing condition R(x, Jx, Jx, y) = 0 over antiholomorphic pairs
/// {x, y} of the given class (class-name order: PosNeg means g(x,x) = 1).
struct Prop1 {
  PairClass pair_class = PairClass::PosNeg;
};

/// Linear vanishing condition R(x, y, y, z) = 0 over antiholomorphic
/// orthonormal triples of `triple_class` whose pair {x, y} has `pair_class`;
/// z carries the remaining sign.
struct Prop3 {
  PairClass pair_class = PairClass::PosNeg;
  TripleClass triple_class = TripleClass::PosPosNeg;
};

using Hypothesis = std::variant<Prop1, Prop3>;

std::string describe(const Hypothesis& hyp);

/// Sampled hypothesis functionals in basis coordinates: row j, entry i is the
/// functional of sample j applied to basis element i. Rows are generated from
/// a single stream, so the first ceil(n/2) rows of a larger sample count are
/// reproduced exactly; rank_half is computed on that prefix.
struct ConstraintSystem {
  RationalMatrix matrix;
  int rank_full = 0;
  int rank_half = 0;

  bool rank_stabilized() const { return rank_full == rank_half; }
};

ConstraintSystem hypothesis_constraints(const Space& space, const TensorBasis& basis,
                                        const Hypothesis& hyp, int n_samples,
                                        std::uint64_t seed);

enum class RigidityVerdict { SpanOfModel, Larger, Empty };

std::string to_string(RigidityVerdict v);

struct RigidityReport {
  Space space;
  Hypothesis hypothesis;
  int n_samples = 0;
  std::uint64_t seed = 0;
  int kaehler_dimension = 0;
  int constraint_rank = 0;
  bool rank_stabilized = false;
  int surviving_dimension = 0;
  RigidityVerdict verdict = RigidityVerdict::Empty;
  std::vector<CurvatureTensor> survivors;           // basis of the surviving subspace
  std::vector<std::vector<Rational>> survivor_coords;  // in Kaehler-basis coordinates
};

/// Assembles the sampled constraint system over the exact curvature-tensor
/// basis, intersects, and classifies the surviving subspace. n_samples <= 0
/// selects the default of 3x the basis dimension. Throws RankNotStabilized
/// when the half/full sample ranks disagree (raise n_samples), and
/// UnrealizableSignature when the hypothesis cannot be sampled in the space.
RigidityReport rigidity_verdict(const Space& space, const Hypothesis& hyp,
                                int n_samples = -1, std::uint64_t seed = 0);
RigidityReport rigidity_verdict(const Space& space, const TensorBasis& basis,
                                const Hypothesis& hyp, int n_samples = -1,
                                std::uint64_t seed = 0);

/// One evaluated identity instance: both routes must agree exactly.
struct IdentityRow {
  Rational alpha;
  Rational direct;
  Rational grouped;
  bool ok = false;
};

struct ExpansionReport {
  std::vector<IdentityRow> rows;
  bool ok = true;
  std::string note;
};

/// Checks the quartic-in-alpha identity behind the mixed-slot polarization
/// R(x+ay, Jx+aJy, Jx+aJy, ax+y) against its grouped form
///   a A + a^3 B + (3 + a^2) a^2 C + (1 + 3a^2) E,
/// A = H(x) - K(x,y) - 3K(x,Jy), B = H(y) - K(x,y) - 3K(x,Jy),
/// C = R(y,Jy,Jy,x), E = R(x,Jx,Jx,y). The E-coefficient polynomial is the
/// one derived mechanically from the formal expansion. Requires an
/// antiholomorphic pair with g(x,x) = 1, g(y,y) = -1.
ExpansionReport prop1_expansion_check(const CurvatureTensor& R, const Vector& x,
                                      const Vector& y,
                                      const std::vector<Rational>& alphas);

/// Checks the numerator identity of the holomorphic-curvature family
/// H((x+ay)/sqrt(1-a^2)):  R(v,Jv,Jv,v) with v = x+ay equals
///   H(x) + 4a R(x,Jx,Jx,y) - 2a^2 {K(x,y) + 3K(x,Jy)}
///        + 4a^3 R(x,Jy,Jy,y) + a^4 H(y).
/// Requires an antiholomorphic pair with g(x,x) = 1, g(y,y) = -1.
ExpansionReport theorem1_expansion_check(const CurvatureTensor& R, const Vector& x,
                                         const Vector& y,
                                         const std::vector<Rational>& alphas);

/// Checks the quadratic identity for antiholomorphic-plane curvature along
/// v = x + ay:  R(v,z,z,v) = eps { K(x,z) + 2 eps a R(x,z,z,y) - a^2 K(y,z) }
/// with eps = g(z,z), and for a != +-1 the normalized form
///   K(x,z) + 2 eps a R(x,z,z,y) - a^2 K(y,z) = (1 - a^2) K(span{v,z}).
/// Requires an orthonormal antiholomorphic triple with g(x,x)=1, g(y,y)=-1,
/// |g(z,z)| = 1.
ExpansionReport theorem2_expansion_check(const CurvatureTensor& R, const Vector& x,
                                         const Vector& y, const Vector& z,
                                         const std::vector<Rational>& alphas);

struct Witness {
  Vector x, y;          // sampled antiholomorphic orthonormal pair
  Rational alpha;       // parameter along the family first + alpha * second
  Rational h_value;     // exact H of the normalized combination
  bool timelike_family = false;  // true when the family base vector is timelike
};

/// Searches sampled antiholomorphic orthonormal PosNeg pairs for an explicit
/// unit vector with |H| > bound, walking alpha = +-(1 - 2^-k), k = 0..64,
/// along both orientations of each pair (the timelike orientation covers the
/// g(x,x) = -1 variant). The numerator value at alpha = +-1 is the divergence
/// indicator: when it is nonzero the family grows like (1 - a^2)^-2 and the
/// geometric schedule exceeds any bound in O(log bound) steps. Returns
/// nullopt after max_trials pairs; constant tensors with |mu| <= bound never
/// produce a witness. Throws InvalidTensor on symmetry failure and
/// UnrealizableSignature when the space is not indefinite.
std::optional<Witness> theorem1_witness(const CurvatureTensor& R, const Rational& bound,
                                        int max_trials, std::uint64_t seed);

/// Post-hoc identities satisfied on every surviving tensor, evaluated over
/// sampled antiholomorphic PosNeg pairs.
struct SurvivorIdentityReport {
  int pairs = 0;
  bool reversed_pair_vanishes = true;  // R(y,Jy,Jy,x) = 0
  bool plane_curvatures_match = true;  // K(x,y) = K(x,Jy)
  bool h_equals_four_k = true;         // H(x) = 4 K(x,y)
  bool h_equal_on_pair = true;         // H(x) = H(y)
  bool mixed_sum_vanishes = true;      // R(x,Jx,Jx,y) + R(x,Jy,Jy,y) = 0

  bool all_ok() const {
    return reversed_pair_vanishes && plane_curvatures_match && h_equals_four_k &&
           h_equal_on_pair && mixed_sum_vanishes;
  }
};

SurvivorIdentityReport survivor_identities_check(const CurvatureTensor& R,
                                                 int n_pairs, std::uint64_t seed);

}  // namespace kcurv
