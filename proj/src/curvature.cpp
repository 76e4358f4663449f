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

#include "kcurv/curvature.hpp"

#include <sstream>

#include "kcurv/errors.hpp"

namespace kcurv {

CurvatureTensor::CurvatureTensor(Space space)
    : space_(std::move(space)),
      comp_(static_cast<size_t>(space_.dim()) * static_cast<size_t>(space_.dim()) *
            static_cast<size_t>(space_.dim()) * static_cast<size_t>(space_.dim())) {}

std::array<int, 4> CurvatureTensor::unindex(size_t flat) const {
  const auto n = static_cast<size_t>(dim());
  std::array<int, 4> out{};
  out[3] = static_cast<int>(flat % n);
  flat /= n;
  out[2] = static_cast<int>(flat % n);
  flat /= n;
  out[1] = static_cast<int>(flat % n);
  out[0] = static_cast<int>(flat / n);
  return out;
}

bool CurvatureTensor::is_zero() const {
  for (const auto& c : comp_) {
    if (c != 0) return false;
  }
  return true;
}

CurvatureTensor& CurvatureTensor::add_scaled(const Rational& c,
                                             const CurvatureTensor& other) {
  if (space_ != other.space_) throw DimensionMismatch("tensor spaces differ");
  for (size_t i = 0; i < comp_.size(); ++i) comp_[i] += c * other.comp_[i];
  return *this;
}

Rational pi1(const Space& space, const Vector& x, const Vector& y, const Vector& z,
             const Vector& u) {
  return inner(space, x, u) * inner(space, y, z) -
         inner(space, x, z) * inner(space, y, u);
}

Rational pi2(const Space& space, const Vector& x, const Vector& y, const Vector& z,
             const Vector& u) {
  const Vector jy = apply_j(space, y);
  const Vector jz = apply_j(space, z);
  const Vector ju = apply_j(space, u);
  return inner(space, x, ju) * inner(space, y, jz) -
         inner(space, x, jz) * inner(space, y, ju) -
         2 * inner(space, x, jy) * inner(space, z, ju);
}

namespace {

// pi1 + pi2 on basis index tuples, via index arithmetic only.
Rational pi_sum_basis(const Space& space, int i, int j, int k, int l) {
  const auto g = [&space](int a, int b) -> int {
    return a == b ? space.metric_sign(a) : 0;
  };
  const auto gj = [&space, &g](int a, int b) -> int {
    // g(b_a, J b_b)
    const auto [bb, s] = space.j_index(b);
    return s * g(a, bb);
  };
  const int p1 = g(i, l) * g(j, k) - g(i, k) * g(j, l);
  const int p2 = gj(i, l) * gj(j, k) - gj(i, k) * gj(j, l) - 2 * gj(i, j) * gj(k, l);
  return p1 + p2;
}

}  // namespace

CurvatureTensor model_tensor(const Space& space, const Rational& mu) {
  CurvatureTensor R(space);
  const Rational quarter = mu / 4;
  if (quarter == 0) return R;
  const int n = space.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const Rational p = pi_sum_basis(space, i, j, k, l);
          if (p != 0) R.at(i, j, k, l) = quarter * p;
        }
      }
    }
  }
  return R;
}

Rational eval(const CurvatureTensor& R, const Vector& x, const Vector& y,
              const Vector& z, const Vector& u) {
  const int n = R.dim();
  const auto check = [n](const Vector& v) {
    if (v.size() != static_cast<size_t>(n)) {
      throw DimensionMismatch("vector does not match tensor space");
    }
  };
  check(x);
  check(y);
  check(z);
  check(u);

  // Contract one slot at a time.
  const auto nn = static_cast<size_t>(n);
  std::vector<Rational> a(nn * nn * nn);
  for (size_t i = 0; i < nn; ++i) {
    for (size_t j = 0; j < nn; ++j) {
      for (size_t k = 0; k < nn; ++k) {
        Rational acc = 0;
        for (size_t l = 0; l < nn; ++l) {
          if (u[l] == 0) continue;
          const auto& c = R.component(((i * nn + j) * nn + k) * nn + l);
          if (c != 0) acc += c * u[l];
        }
        a[(i * nn + j) * nn + k] = std::move(acc);
      }
    }
  }
  std::vector<Rational> b(nn * nn);
  for (size_t i = 0; i < nn; ++i) {
    for (size_t j = 0; j < nn; ++j) {
      Rational acc = 0;
      for (size_t k = 0; k < nn; ++k) {
        if (z[k] == 0) continue;
        const auto& c = a[(i * nn + j) * nn + k];
        if (c != 0) acc += c * z[k];
      }
      b[i * nn + j] = std::move(acc);
    }
  }
  Rational out = 0;
  for (size_t i = 0; i < nn; ++i) {
    if (x[i] == 0) continue;
    Rational acc = 0;
    for (size_t j = 0; j < nn; ++j) {
      if (y[j] == 0) continue;
      const auto& c = b[i * nn + j];
      if (c != 0) acc += c * y[j];
    }
    out += acc * x[i];
  }
  return out;
}

SymmetryReport validate_symmetries(const CurvatureTensor& R) {
  SymmetryReport rep;
  const int n = R.dim();
  const Space& space = R.space();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const std::array<int, 4> here{i, j, k, l};
          if (rep.antisym_12.ok && R.at(i, j, k, l) != -R.at(j, i, k, l)) {
            rep.antisym_12 = {false, here};
          }
          if (rep.antisym_34.ok && R.at(i, j, k, l) != -R.at(i, j, l, k)) {
            rep.antisym_34 = {false, here};
          }
          if (rep.bianchi.ok &&
              R.at(i, j, k, l) + R.at(j, k, i, l) + R.at(k, i, j, l) != 0) {
            rep.bianchi = {false, here};
          }
          if (rep.j_invariance.ok) {
            const auto [kk, sk] = space.j_index(k);
            const auto [ll, sl] = space.j_index(l);
            if (R.at(i, j, k, l) != sk * sl * R.at(i, j, kk, ll)) {
              rep.j_invariance = {false, here};
            }
          }
          if (rep.pair_symmetry.ok && R.at(i, j, k, l) != R.at(k, l, i, j)) {
            rep.pair_symmetry = {false, here};
          }
        }
      }
    }
  }
  return rep;
}

std::string SymmetryReport::describe() const {
  const auto line = [](const char* name, const Check& c) {
    std::ostringstream os;
    os << name << ": " << (c.ok ? "pass" : "FAIL");
    if (!c.ok) {
      os << " at (" << c.index[0] << "," << c.index[1] << "," << c.index[2] << ","
         << c.index[3] << ")";
    }
    os << "\n";
    return os.str();
  };
  return line("antisymmetry_12", antisym_12) + line("antisymmetry_34", antisym_34) +
         line("bianchi", bianchi) + line("j_invariance", j_invariance) +
         line("pair_symmetry", pair_symmetry);
}

Rational sectional(const CurvatureTensor& R, const Vector& x, const Vector& y) {
  const Rational denom = pi1(R.space(), x, y, y, x);
  if (denom == 0) {
    throw DegeneratePlane("sectional curvature of a degenerate plane");
  }
  return eval(R, x, y, y, x) / denom;
}

Rational holomorphic_sectional(const CurvatureTensor& R, const Vector& x) {
  const Rational gxx = inner(R.space(), x, x);
  if (gxx == 0) {
    throw NullVector("holomorphic sectional curvature of a null vector");
  }
  const Vector jx = apply_j(R.space(), x);
  return eval(R, x, jx, jx, x) / (gxx * gxx);
}

bool is_constant(const Verdict& v) {
  return std::holds_alternative<ConstantHsc>(v);
}

std::string to_string(const Verdict& v) {
  if (const auto* c = std::get_if<ConstantHsc>(&v)) {
    return "constant holomorphic sectional curvature, mu = " + c->mu.str();
  }
  const auto& nc = std::get<NotConstant>(v);
  std::ostringstream os;
  os << "not constant: residual " << nc.residual.str() << " at (" << nc.index[0]
     << "," << nc.index[1] << "," << nc.index[2] << "," << nc.index[3] << ")";
  return os.str();
}

Verdict is_constant_hsc(const CurvatureTensor& R) {
  const SymmetryReport rep = validate_symmetries(R);
  if (!rep.all_ok()) {
    throw InvalidTensor("tensor fails symmetry validation:\n" + rep.describe());
  }
  // Every basis vector is non-null (the metric is diagonal +-1), so the
  // candidate mu comes from the first one; the componentwise comparison
  // below catches any inconsistency.
  const Space& space = R.space();
  const int m = space.m();
  const Rational mu = R.at(0, m, m, 0);  // H(e_1), since g(e_1,e_1)^2 = 1
  const CurvatureTensor model = model_tensor(space, mu);
  for (size_t f = 0; f < R.component_count(); ++f) {
    const Rational diff = R.component(f) - model.component(f);
    if (diff != 0) {
      return NotConstant{R.unindex(f), diff};
    }
  }
  return ConstantHsc{mu};
}

}  // namespace kcurv
