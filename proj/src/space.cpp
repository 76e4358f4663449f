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

#include "kcurv/space.hpp"

#include <algorithm>
#include <sstream>

#include "kcurv/errors.hpp"

namespace kcurv {

std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::PosPos: return "pos-pos";
    case PairClass::PosNeg: return "pos-neg";
    case PairClass::NegNeg: return "neg-neg";
    case PairClass::Degenerate: return "degenerate";
  }
  return "?";
}

std::string to_string(TripleClass c) {
  switch (c) {
    case TripleClass::PosPosPos: return "pos-pos-pos";
    case TripleClass::PosPosNeg: return "pos-pos-neg";
    case TripleClass::PosNegNeg: return "pos-neg-neg";
    case TripleClass::NegNegNeg: return "neg-neg-neg";
    case TripleClass::Degenerate: return "degenerate";
  }
  return "?";
}

Space::Space(int m, std::vector<int> eps) : m_(m), eps_(std::move(eps)) {
  if (m_ < 1) throw Error("complex dimension must be at least 1");
  if (eps_.size() != static_cast<size_t>(m_)) {
    throw Error("signature pattern length must equal m");
  }
  for (int e : eps_) {
    if (e != 1 && e != -1) throw Error("signature entries must be +1 or -1");
  }
}

Space Space::from_signature(const std::string& pattern) {
  std::vector<int> eps;
  eps.reserve(pattern.size());
  for (char c : pattern) {
    if (c == '+') {
      eps.push_back(1);
    } else if (c == '-') {
      eps.push_back(-1);
    } else {
      throw ParseError(std::string("bad signature character '") + c + "'");
    }
  }
  if (eps.empty()) throw ParseError("empty signature pattern");
  return Space(static_cast<int>(eps.size()), std::move(eps));
}

Vector Space::basis_vector(int k) const {
  Vector v = zero_vector();
  v[static_cast<size_t>(k)] = 1;
  return v;
}

std::string Space::signature_string() const {
  std::string s;
  for (int e : eps_) s += (e > 0 ? '+' : '-');
  return s;
}

bool Space::indefinite() const {
  return count_dirs(1) > 0 && count_dirs(-1) > 0;
}

int Space::count_dirs(int sign) const {
  return static_cast<int>(std::count(eps_.begin(), eps_.end(), sign));
}

namespace {

void check_dim(const Space& space, const Vector& v) {
  if (v.size() != static_cast<size_t>(space.dim())) {
    throw DimensionMismatch("vector length " + std::to_string(v.size()) +
                            " does not match space dimension " +
                            std::to_string(space.dim()));
  }
}

}  // namespace

Rational inner(const Space& space, const Vector& u, const Vector& v) {
  check_dim(space, u);
  check_dim(space, v);
  Rational acc = 0;
  for (int k = 0; k < space.dim(); ++k) {
    const auto i = static_cast<size_t>(k);
    if (u[i] == 0 || v[i] == 0) continue;
    acc += space.metric_sign(k) * u[i] * v[i];
  }
  return acc;
}

Vector apply_j(const Space& space, const Vector& v) {
  check_dim(space, v);
  Vector out = space.zero_vector();
  for (int k = 0; k < space.dim(); ++k) {
    const auto [kk, s] = space.j_index(k);
    out[static_cast<size_t>(kk)] = s * v[static_cast<size_t>(k)];
  }
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; });
}

Vector add(const Vector& u, const Vector& v) {
  Vector out(u.size());
  for (size_t i = 0; i < u.size(); ++i) out[i] = u[i] + v[i];
  return out;
}

Vector sub(const Vector& u, const Vector& v) {
  Vector out(u.size());
  for (size_t i = 0; i < u.size(); ++i) out[i] = u[i] - v[i];
  return out;
}

Vector scaled(const Rational& c, const Vector& v) {
  Vector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].str();
  }
  os << "]";
  return os.str();
}

PairClass classify_pair(const Space& space, const Vector& x, const Vector& y) {
  const Rational gxx = inner(space, x, x);
  const Rational gxy = inner(space, x, y);
  const Rational gyy = inner(space, y, y);
  const Rational det = gxx * gyy - gxy * gxy;
  if (det == 0) return PairClass::Degenerate;
  if (det < 0) return PairClass::PosNeg;
  // det > 0 forces g(x,x) != 0 and both diagonal signs equal.
  return gxx > 0 ? PairClass::PosPos : PairClass::NegNeg;
}

TripleClass classify_triple(const Space& space, const Vector& x, const Vector& y,
                            const Vector& z) {
  std::array<std::array<Rational, 3>, 3> a;
  const std::array<const Vector*, 3> v{&x, &y, &z};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = inner(space, *v[static_cast<size_t>(i)], *v[static_cast<size_t>(j)]);
    }
  }

  // Exact inertia by symmetric congruence reduction.
  int pos = 0, neg = 0, zero = 0;
  const auto swap_rc = [&a](int p, int q) {
    if (p == q) return;
    for (int c = 0; c < 3; ++c) std::swap(a[static_cast<size_t>(p)][static_cast<size_t>(c)], a[static_cast<size_t>(q)][static_cast<size_t>(c)]);
    for (int r = 0; r < 3; ++r) std::swap(a[static_cast<size_t>(r)][static_cast<size_t>(p)], a[static_cast<size_t>(r)][static_cast<size_t>(q)]);
  };
  for (int k = 0; k < 3; ++k) {
    int p = -1;
    for (int i = k; i < 3; ++i) {
      if (a[static_cast<size_t>(i)][static_cast<size_t>(i)] != 0) { p = i; break; }
    }
    if (p < 0) {
      // All remaining diagonal entries vanish; a nonzero off-diagonal entry
      // yields a hyperbolic pair after a row/column addition.
      int pi = -1, pj = -1;
      for (int i = k; i < 3 && pi < 0; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) { pi = i; pj = j; break; }
        }
      }
      if (pi < 0) {
        zero += 3 - k;
        break;
      }
      for (int c = 0; c < 3; ++c) a[static_cast<size_t>(pi)][static_cast<size_t>(c)] += a[static_cast<size_t>(pj)][static_cast<size_t>(c)];
      for (int r = 0; r < 3; ++r) a[static_cast<size_t>(r)][static_cast<size_t>(pi)] += a[static_cast<size_t>(r)][static_cast<size_t>(pj)];
      p = pi;
    }
    swap_rc(p, k);
    const Rational piv = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    (piv > 0 ? pos : neg) += 1;
    for (int r = k + 1; r < 3; ++r) {
      if (a[static_cast<size_t>(r)][static_cast<size_t>(k)] == 0) continue;
      const Rational f = a[static_cast<size_t>(r)][static_cast<size_t>(k)] / piv;
      for (int c = 0; c < 3; ++c) a[static_cast<size_t>(r)][static_cast<size_t>(c)] -= f * a[static_cast<size_t>(k)][static_cast<size_t>(c)];
      for (int rr = 0; rr < 3; ++rr) a[static_cast<size_t>(rr)][static_cast<size_t>(r)] -= f * a[static_cast<size_t>(rr)][static_cast<size_t>(k)];
    }
  }

  if (zero > 0) return TripleClass::Degenerate;
  if (pos == 3) return TripleClass::PosPosPos;
  if (pos == 2) return TripleClass::PosPosNeg;
  if (pos == 1) return TripleClass::PosNegNeg;
  return TripleClass::NegNegNeg;
}

bool is_antiholomorphic_pair(const Space& space, const Vector& x, const Vector& y) {
  if (is_zero(x) || is_zero(y)) return false;
  return inner(space, x, y) == 0 && inner(space, x, apply_j(space, y)) == 0;
}

bool is_antiholomorphic_triple(const Space& space, const Vector& x, const Vector& y,
                               const Vector& z) {
  if (is_zero(x) || is_zero(y) || is_zero(z)) return false;
  const std::array<const Vector*, 3> v{&x, &y, &z};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const Vector& a = *v[static_cast<size_t>(i)];
      const Vector& b = *v[static_cast<size_t>(j)];
      if (inner(space, a, b) != 0) return false;
      if (inner(space, a, apply_j(space, b)) != 0) return false;
    }
  }
  return true;
}

namespace {

std::pair<int, int> pair_sign_counts(PairClass cls) {
  switch (cls) {
    case PairClass::PosPos: return {2, 0};
    case PairClass::PosNeg: return {1, 1};
    case PairClass::NegNeg: return {0, 2};
    default: return {-1, -1};
  }
}

std::pair<int, int> triple_sign_counts(TripleClass cls) {
  switch (cls) {
    case TripleClass::PosPosPos: return {3, 0};
    case TripleClass::PosPosNeg: return {2, 1};
    case TripleClass::PosNegNeg: return {1, 2};
    case TripleClass::NegNegNeg: return {0, 3};
    default: return {-1, -1};
  }
}

}  // namespace

bool pair_class_realizable(const Space& space, PairClass cls, bool antiholomorphic) {
  const auto [np, nn] = pair_sign_counts(cls);
  if (np < 0) return false;  // degenerate samples are not provided
  if (antiholomorphic) {
    // The pair spans two distinct complex directions of the given signs.
    return space.count_dirs(1) >= np && space.count_dirs(-1) >= nn;
  }
  // An orthonormal pair only needs two distinct real basis directions.
  return 2 * space.count_dirs(1) >= np && 2 * space.count_dirs(-1) >= nn;
}

bool triple_class_realizable(const Space& space, TripleClass cls) {
  const auto [np, nn] = triple_sign_counts(cls);
  if (np < 0) return false;
  return space.count_dirs(1) >= np && space.count_dirs(-1) >= nn;
}

SampleStream::SampleStream(std::uint64_t seed) : state_(seed) {}

std::uint64_t SampleStream::next() {
  // splitmix64; fully specified, no library distribution involved.
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int SampleStream::small_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(next() % span);
}

namespace {

Vector random_int_vector(const Space& space, SampleStream& stream) {
  while (true) {
    Vector w = space.zero_vector();
    bool nonzero = false;
    for (auto& c : w) {
      const int v = stream.small_int(-3, 3);
      c = v;
      nonzero = nonzero || v != 0;
    }
    if (nonzero) return w;
  }
}

Vector random_anisotropic_vector(const Space& space, SampleStream& stream) {
  while (true) {
    Vector w = random_int_vector(space, stream);
    if (inner(space, w, w) != 0) return w;
  }
}

// Reflection v -> v - 2 g(v,w)/g(w,w) w; a metric isometry for g(w,w) != 0.
Vector real_reflect(const Space& space, const Vector& w, const Vector& v) {
  const Rational f = 2 * inner(space, v, w) / inner(space, w, w);
  return sub(v, scaled(f, w));
}

// Complex reflection in the complex line through w. With the Hermitian form
// h(v, w) = g(v, w) + i g(v, Jw) this is v -> v - (2 h(v,w)/h(w,w)) w, where
// the complex scalar acts as (a + bi) w = a w + b Jw. It preserves g and
// commutes with J, so it maps antiholomorphic configurations to
// antiholomorphic configurations of the same signature.
Vector hermitian_reflect(const Space& space, const Vector& w, const Vector& v) {
  const Rational gww = inner(space, w, w);
  const Rational re = 2 * inner(space, v, w) / gww;
  const Rational im = 2 * inner(space, v, apply_j(space, w)) / gww;
  return sub(sub(v, scaled(re, w)), scaled(im, apply_j(space, w)));
}

// Rational points on the unit circle, used as per-direction phases.
constexpr std::array<std::array<int, 3>, 5> kPhases{{
    {1, 0, 1}, {3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {20, 21, 29}}};

void apply_random_phases(const Space& space, SampleStream& stream,
                         std::vector<Vector*> vecs) {
  const int m = space.m();
  for (int d = 0; d < m; ++d) {
    const auto& [a, b, c] = kPhases[stream.next() % kPhases.size()];
    const int sb = stream.next() % 2 == 0 ? b : -b;
    const Rational pa = Rational(a) / c;
    const Rational pb = Rational(sb) / c;
    for (Vector* v : vecs) {
      Rational& e = (*v)[static_cast<size_t>(d)];
      Rational& f = (*v)[static_cast<size_t>(d + m)];
      const Rational ne = pa * e - pb * f;
      const Rational nf = pb * e + pa * f;
      e = ne;
      f = nf;
    }
  }
}

void apply_random_unitary(const Space& space, SampleStream& stream,
                          std::vector<Vector*> vecs) {
  apply_random_phases(space, stream, vecs);
  for (int r = 0; r < 3; ++r) {
    const Vector w = random_anisotropic_vector(space, stream);
    for (Vector* v : vecs) *v = hermitian_reflect(space, w, *v);
  }
}

void apply_random_isometry(const Space& space, SampleStream& stream,
                           std::vector<Vector*> vecs) {
  for (int r = 0; r < 3; ++r) {
    const Vector w = random_anisotropic_vector(space, stream);
    for (Vector* v : vecs) *v = real_reflect(space, w, *v);
  }
}

// Indices of distinct complex directions carrying the requested signs.
std::vector<int> pick_complex_dirs(const Space& space, const std::vector<int>& signs) {
  std::vector<int> out;
  std::vector<bool> used(static_cast<size_t>(space.m()), false);
  for (int s : signs) {
    int found = -1;
    for (int d = 0; d < space.m(); ++d) {
      if (!used[static_cast<size_t>(d)] && space.sign(d) == s) { found = d; break; }
    }
    if (found < 0) throw UnrealizableSignature("signature class not realizable in " +
                                               space.signature_string());
    used[static_cast<size_t>(found)] = true;
    out.push_back(found);
  }
  return out;
}

}  // namespace

std::pair<Vector, Vector> sample_pair(const Space& space, PairClass cls,
                                      bool antiholomorphic, SampleStream& stream) {
  if (!pair_class_realizable(space, cls, antiholomorphic)) {
    throw UnrealizableSignature("pair class " + to_string(cls) +
                                (antiholomorphic ? " (antiholomorphic)" : "") +
                                " not realizable in signature " +
                                space.signature_string());
  }
  const auto [np, nn] = pair_sign_counts(cls);
  std::vector<int> signs;
  for (int i = 0; i < np; ++i) signs.push_back(1);
  for (int i = 0; i < nn; ++i) signs.push_back(-1);

  Vector x, y;
  if (antiholomorphic) {
    const auto dirs = pick_complex_dirs(space, signs);
    x = space.basis_vector(dirs[0]);
    y = space.basis_vector(dirs[1]);
    apply_random_unitary(space, stream, {&x, &y});
  } else {
    // Two distinct real basis directions; same complex direction is fine here.
    int a = -1, b = -1;
    for (int k = 0; k < space.dim(); ++k) {
      if (a < 0 && space.metric_sign(k) == signs[0]) { a = k; continue; }
      if (b < 0 && space.metric_sign(k) == signs[1]) b = k;
    }
    x = space.basis_vector(a);
    y = space.basis_vector(b);
    apply_random_isometry(space, stream, {&x, &y});
  }
  return {std::move(x), std::move(y)};
}

std::pair<Vector, Vector> sample_pair(const Space& space, PairClass cls,
                                      bool antiholomorphic, std::uint64_t seed) {
  SampleStream stream(seed);
  return sample_pair(space, cls, antiholomorphic, stream);
}

std::array<Vector, 3> sample_triple(const Space& space, TripleClass cls,
                                    SampleStream& stream) {
  if (!triple_class_realizable(space, cls)) {
    throw UnrealizableSignature("triple class " + to_string(cls) +
                                " not realizable in signature " +
                                space.signature_string());
  }
  const auto [np, nn] = triple_sign_counts(cls);
  std::vector<int> signs;
  for (int i = 0; i < np; ++i) signs.push_back(1);
  for (int i = 0; i < nn; ++i) signs.push_back(-1);
  const auto dirs = pick_complex_dirs(space, signs);
  std::array<Vector, 3> out{space.basis_vector(dirs[0]), space.basis_vector(dirs[1]),
                            space.basis_vector(dirs[2])};
  apply_random_unitary(space, stream, {&out[0], &out[1], &out[2]});
  return out;
}

std::array<Vector, 3> sample_triple(const Space& space, TripleClass cls,
                                    std::uint64_t seed) {
  SampleStream stream(seed);
  return sample_triple(space, cls, stream);
}

Vector sample_unit_vector(const Space& space, int sign, SampleStream& stream) {
  int k = -1;
  for (int i = 0; i < space.dim(); ++i) {
    if (space.metric_sign(i) == sign) { k = i; break; }
  }
  if (k < 0) {
    throw UnrealizableSignature("no direction of the requested sign in " +
                                space.signature_string());
  }
  Vector v = space.basis_vector(k);
  std::vector<Vector*> vs{&v};
  apply_random_isometry(space, stream, vs);
  return v;
}

}  // namespace kcurv
