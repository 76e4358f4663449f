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

#include "kcurv/rigidity.hpp"

#include <algorithm>

#include "kcurv/errors.hpp"

namespace kcurv {

namespace {

std::pair<int, int> class_counts(PairClass cls) {
  switch (cls) {
    case PairClass::PosPos: return {2, 0};
    case PairClass::PosNeg: return {1, 1};
    case PairClass::NegNeg: return {0, 2};
    default: return {-1, -1};
  }
}

std::pair<int, int> class_counts(TripleClass cls) {
  switch (cls) {
    case TripleClass::PosPosPos: return {3, 0};
    case TripleClass::PosPosNeg: return {2, 1};
    case TripleClass::PosNegNeg: return {1, 2};
    case TripleClass::NegNegNeg: return {0, 3};
    default: return {-1, -1};
  }
}

/// Sign carried by z: the triple class minus the pair class, which must
/// leave exactly one direction.
int z_sign(PairClass pair_cls, TripleClass triple_cls) {
  const auto [pp, pn] = class_counts(pair_cls);
  const auto [tp, tn] = class_counts(triple_cls);
  if (pp < 0 || tp < 0 || tp - pp + (tn - pn) != 1 || tp - pp < 0 || tn - pn < 0) {
    throw UnrealizableSignature("triple class " + to_string(triple_cls) +
                                " does not extend pair class " + to_string(pair_cls));
  }
  return tp - pp == 1 ? 1 : -1;
}

void check_hypothesis(const Space& space, const Hypothesis& hyp) {
  if (!space.indefinite()) {
    throw UnrealizableSignature("hypothesis requires an indefinite signature, got " +
                                space.signature_string());
  }
  if (const auto* p1 = std::get_if<Prop1>(&hyp)) {
    if (!pair_class_realizable(space, p1->pair_class, true)) {
      throw UnrealizableSignature("antiholomorphic " + to_string(p1->pair_class) +
                                  " pairs not realizable in " +
                                  space.signature_string());
    }
    // The same-sign variants need room to connect any two directions, which
    // only exists beyond complex dimension 2.
    if ((p1->pair_class == PairClass::PosPos || p1->pair_class == PairClass::NegNeg) &&
        space.m() <= 2) {
      throw UnrealizableSignature("same-sign pair hypotheses need m > 2");
    }
  } else {
    const auto& p3 = std::get<Prop3>(hyp);
    z_sign(p3.pair_class, p3.triple_class);
    if (!triple_class_realizable(space, p3.triple_class)) {
      throw UnrealizableSignature("antiholomorphic " + to_string(p3.triple_class) +
                                  " triples not realizable in " +
                                  space.signature_string());
    }
    if (space.m() <= 2) {
      throw UnrealizableSignature("triple hypotheses need m > 2");
    }
  }
}

// Orders a sampled triple so that (x, y) carries the pair class signs and z
// the remaining one. sample_triple returns vectors in class-name order.
std::array<const Vector*, 3> order_triple(const std::array<Vector, 3>& t,
                                          TripleClass triple_cls, PairClass pair_cls) {
  const auto [tp, tn] = class_counts(triple_cls);
  std::vector<int> signs;
  for (int i = 0; i < tp; ++i) signs.push_back(1);
  for (int i = 0; i < tn; ++i) signs.push_back(-1);
  const auto [pp, pn] = class_counts(pair_cls);
  std::vector<int> want{};
  for (int i = 0; i < pp; ++i) want.push_back(1);
  for (int i = 0; i < pn; ++i) want.push_back(-1);
  want.push_back(z_sign(pair_cls, triple_cls));

  std::array<const Vector*, 3> out{};
  std::array<bool, 3> used{};
  for (int slot = 0; slot < 3; ++slot) {
    for (int i = 0; i < 3; ++i) {
      if (!used[static_cast<size_t>(i)] && signs[static_cast<size_t>(i)] == want[static_cast<size_t>(slot)]) {
        out[static_cast<size_t>(slot)] = &t[static_cast<size_t>(i)];
        used[static_cast<size_t>(i)] = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::string describe(const Hypothesis& hyp) {
  if (const auto* p1 = std::get_if<Prop1>(&hyp)) {
    return "R(x,Jx,Jx,y) = 0 on antiholomorphic " + to_string(p1->pair_class) +
           " pairs";
  }
  const auto& p3 = std::get<Prop3>(hyp);
  return "R(x,y,y,z) = 0 on antiholomorphic " + to_string(p3.triple_class) +
         " triples with " + to_string(p3.pair_class) + " pair";
}

ConstraintSystem hypothesis_constraints(const Space& space, const TensorBasis& basis,
                                        const Hypothesis& hyp, int n_samples,
                                        std::uint64_t seed) {
  if (basis.space != space) throw DimensionMismatch("basis built for another space");
  if (n_samples < 1) throw Error("n_samples must be at least 1");
  check_hypothesis(space, hyp);

  const int d = basis.dimension();
  ConstraintSystem cs;
  cs.matrix = RationalMatrix(n_samples, d);

  SampleStream stream(seed);
  for (int row = 0; row < n_samples; ++row) {
    if (const auto* p1 = std::get_if<Prop1>(&hyp)) {
      const auto [x, y] = sample_pair(space, p1->pair_class, true, stream);
      const Vector jx = apply_j(space, x);
      for (int i = 0; i < d; ++i) {
        cs.matrix.at(row, i) = eval(basis.elements[static_cast<size_t>(i)], x, jx, jx, y);
      }
    } else {
      const auto& p3 = std::get<Prop3>(hyp);
      const auto triple = sample_triple(space, p3.triple_class, stream);
      const auto [x, y, z] = order_triple(triple, p3.triple_class, p3.pair_class);
      for (int i = 0; i < d; ++i) {
        cs.matrix.at(row, i) = eval(basis.elements[static_cast<size_t>(i)], *x, *y, *y, *z);
      }
    }
  }

  RationalMatrix half((n_samples + 1) / 2, d);
  std::copy(cs.matrix.a.begin(),
            cs.matrix.a.begin() + static_cast<std::ptrdiff_t>(half.a.size()),
            half.a.begin());
  cs.rank_full = rank(cs.matrix);
  cs.rank_half = rank(half);
  return cs;
}

std::string to_string(RigidityVerdict v) {
  switch (v) {
    case RigidityVerdict::SpanOfModel: return "span-of-model";
    case RigidityVerdict::Larger: return "larger";
    case RigidityVerdict::Empty: return "empty";
  }
  return "?";
}

RigidityReport rigidity_verdict(const Space& space, const Hypothesis& hyp,
                                int n_samples, std::uint64_t seed) {
  return rigidity_verdict(space, kaehler_basis(space), hyp, n_samples, seed);
}

RigidityReport rigidity_verdict(const Space& space, const TensorBasis& basis,
                                const Hypothesis& hyp, int n_samples,
                                std::uint64_t seed) {
  const int d = basis.dimension();
  if (n_samples <= 0) n_samples = 3 * d;

  const ConstraintSystem cs = hypothesis_constraints(space, basis, hyp, n_samples, seed);
  if (!cs.rank_stabilized()) {
    throw RankNotStabilized("constraint rank did not stabilize at " +
                            std::to_string(n_samples) + " samples (half: " +
                            std::to_string(cs.rank_half) + ", full: " +
                            std::to_string(cs.rank_full) + ")");
  }

  RigidityReport rep;
  rep.space = space;
  rep.hypothesis = hyp;
  rep.n_samples = n_samples;
  rep.seed = seed;
  rep.kaehler_dimension = d;
  rep.constraint_rank = cs.rank_full;
  rep.rank_stabilized = true;
  rep.survivor_coords = nullspace(cs.matrix);
  rep.surviving_dimension = static_cast<int>(rep.survivor_coords.size());

  for (const auto& coords : rep.survivor_coords) {
    CurvatureTensor t(space);
    for (size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] != 0) t.add_scaled(coords[i], basis.elements[i]);
    }
    rep.survivors.push_back(std::move(t));
  }

  if (rep.surviving_dimension == 0) {
    rep.verdict = RigidityVerdict::Empty;
    return rep;
  }
  if (rep.surviving_dimension == 1) {
    const auto model_coords = coordinates(basis, model_tensor(space, 4));
    if (model_coords) {
      const auto& s = rep.survivor_coords.front();
      bool parallel = true;
      for (size_t i = 0; i < s.size() && parallel; ++i) {
        for (size_t j = i + 1; j < s.size(); ++j) {
          if (s[i] * (*model_coords)[j] != s[j] * (*model_coords)[i]) {
            parallel = false;
            break;
          }
        }
      }
      if (parallel) {
        rep.verdict = RigidityVerdict::SpanOfModel;
        return rep;
      }
    }
  }
  rep.verdict = RigidityVerdict::Larger;
  return rep;
}

namespace {

void require_orthonormal_antiholomorphic(const Space& space, const Vector& x,
                                         const Vector& y) {
  if (inner(space, x, x) != 1 || inner(space, y, y) != -1 ||
      !is_antiholomorphic_pair(space, x, y)) {
    throw PreconditionViolation(
        "need an antiholomorphic pair with g(x,x) = 1 and g(y,y) = -1");
  }
}

}  // namespace

ExpansionReport prop1_expansion_check(const CurvatureTensor& R, const Vector& x,
                                      const Vector& y,
                                      const std::vector<Rational>& alphas) {
  const Space& space = R.space();
  require_orthonormal_antiholomorphic(space, x, y);

  const Vector jx = apply_j(space, x);
  const Vector jy = apply_j(space, y);
  const Rational hx = holomorphic_sectional(R, x);
  const Rational hy = holomorphic_sectional(R, y);
  const Rational kxy = sectional(R, x, y);
  const Rational kxjy = sectional(R, x, jy);
  const Rational a_coef = hx - kxy - 3 * kxjy;
  const Rational b_coef = hy - kxy - 3 * kxjy;
  const Rational c_coef = eval(R, y, jy, jy, x);
  const Rational e_coef = eval(R, x, jx, jx, y);

  ExpansionReport rep;
  for (const Rational& a : alphas) {
    const Vector v1 = add(x, scaled(a, y));
    const Vector v23 = add(jx, scaled(a, jy));
    const Vector v4 = add(scaled(a, x), y);
    const Rational direct = eval(R, v1, v23, v23, v4);
    const Rational a2 = a * a;
    const Rational grouped = a * a_coef + a * a2 * b_coef +
                             (3 + a2) * a2 * c_coef + (1 + 3 * a2) * e_coef;
    const bool ok = direct == grouped;
    rep.rows.push_back({a, direct, grouped, ok});
    rep.ok = rep.ok && ok;
  }
  return rep;
}

ExpansionReport theorem1_expansion_check(const CurvatureTensor& R, const Vector& x,
                                         const Vector& y,
                                         const std::vector<Rational>& alphas) {
  const Space& space = R.space();
  require_orthonormal_antiholomorphic(space, x, y);

  const Vector jx = apply_j(space, x);
  const Vector jy = apply_j(space, y);
  const Rational hx = holomorphic_sectional(R, x);
  const Rational hy = holomorphic_sectional(R, y);
  const Rational kxy = sectional(R, x, y);
  const Rational kxjy = sectional(R, x, jy);
  const Rational e1 = eval(R, x, jx, jx, y);
  const Rational e2 = eval(R, x, jy, jy, y);

  ExpansionReport rep;
  for (const Rational& a : alphas) {
    const Vector v = add(x, scaled(a, y));
    const Vector jv = apply_j(space, v);
    const Rational direct = eval(R, v, jv, jv, v);
    const Rational a2 = a * a;
    const Rational grouped =
        hx + 4 * a * e1 - 2 * a2 * (kxy + 3 * kxjy) + 4 * a * a2 * e2 + a2 * a2 * hy;
    const bool ok = direct == grouped;
    rep.rows.push_back({a, direct, grouped, ok});
    rep.ok = rep.ok && ok;
  }
  return rep;
}

ExpansionReport theorem2_expansion_check(const CurvatureTensor& R, const Vector& x,
                                         const Vector& y, const Vector& z,
                                         const std::vector<Rational>& alphas) {
  const Space& space = R.space();
  require_orthonormal_antiholomorphic(space, x, y);
  const Rational eps = inner(space, z, z);
  if (eps * eps != 1 || !is_antiholomorphic_triple(space, x, y, z)) {
    throw PreconditionViolation(
        "need a unit z completing {x,y} to an orthonormal antiholomorphic triple");
  }

  const Rational kxz = sectional(R, x, z);
  const Rational kyz = sectional(R, y, z);
  const Rational rxzzy = eval(R, x, z, z, y);

  ExpansionReport rep;
  for (const Rational& a : alphas) {
    const Vector v = add(x, scaled(a, y));
    const Rational a2 = a * a;
    const Rational direct = eval(R, v, z, z, v);
    const Rational quad = kxz + 2 * eps * a * rxzzy - a2 * kyz;
    const Rational grouped = eps * quad;
    bool ok = direct == grouped;
    if (a2 != 1) {
      // Normalized form against the actual plane curvature of span{v, z}.
      ok = ok && quad == (1 - a2) * sectional(R, v, z);
    }
    rep.rows.push_back({a, direct, grouped, ok});
    rep.ok = rep.ok && ok;
  }
  if (std::any_of(alphas.begin(), alphas.end(),
                  [](const Rational& a) { return a * a == 1; })) {
    rep.note = "normalized form skipped at a = +-1 (degenerate plane)";
  }
  return rep;
}

std::optional<Witness> theorem1_witness(const CurvatureTensor& R, const Rational& bound,
                                        int max_trials, std::uint64_t seed) {
  const Space& space = R.space();
  if (!validate_symmetries(R).all_ok()) {
    throw InvalidTensor("witness search requires a valid curvature tensor");
  }
  if (!space.indefinite()) {
    throw UnrealizableSignature("witness search requires an indefinite signature");
  }

  SampleStream stream(seed);
  for (int trial = 0; trial < max_trials; ++trial) {
    const auto [xs, ys] = sample_pair(space, PairClass::PosNeg, true, stream);
    for (int orientation = 0; orientation < 2; ++orientation) {
      const Vector& first = orientation == 0 ? xs : ys;
      const Vector& second = orientation == 0 ? ys : xs;
      Rational alpha_step(1);
      for (int k = 0; k <= 64; ++k) {
        // alpha = +-(1 - 2^-k); k = 0 is the base point alpha = 0.
        const Rational mag = 1 - alpha_step;
        alpha_step /= 2;
        for (int s = 0; s < (k == 0 ? 1 : 2); ++s) {
          const Rational a = s == 0 ? mag : -mag;
          const Vector v = add(first, scaled(a, second));
          const Vector jv = apply_j(space, v);
          const Rational numerator = eval(R, v, jv, jv, v);
          const Rational denom = (1 - a * a) * (1 - a * a);
          const Rational h = numerator / denom;
          if (abs(h) > bound) {
            return Witness{first, second, a, h, orientation == 1};
          }
        }
      }
    }
  }
  return std::nullopt;
}

SurvivorIdentityReport survivor_identities_check(const CurvatureTensor& R,
                                                 int n_pairs, std::uint64_t seed) {
  const Space& space = R.space();
  SurvivorIdentityReport rep;
  rep.pairs = n_pairs;
  SampleStream stream(seed);
  for (int i = 0; i < n_pairs; ++i) {
    const auto [x, y] = sample_pair(space, PairClass::PosNeg, true, stream);
    const Vector jx = apply_j(space, x);
    const Vector jy = apply_j(space, y);
    rep.reversed_pair_vanishes &= eval(R, y, jy, jy, x) == 0;
    rep.plane_curvatures_match &= sectional(R, x, y) == sectional(R, x, jy);
    rep.h_equals_four_k &=
        holomorphic_sectional(R, x) == 4 * sectional(R, x, y);
    rep.h_equal_on_pair &=
        holomorphic_sectional(R, x) == holomorphic_sectional(R, y);
    rep.mixed_sum_vanishes &= eval(R, x, jx, jx, y) + eval(R, x, jy, jy, y) == 0;
  }
  return rep;
}

}  // namespace kcurv
