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

#include "kcurv/tensor_space.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "kcurv/errors.hpp"

namespace kcurv {

namespace {

// Sparse integer row; entries sorted by elimination position.
struct Entry {
  int pos;
  Integer coef;
};
using IntRow = std::vector<Entry>;

void gcd_normalize(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& e : row) g = gcd(g, e.coef);
  if (g > 1) {
    for (auto& e : row) e.coef /= g;
  }
  if (row.front().coef < 0) {
    for (auto& e : row) e.coef = -e.coef;
  }
}

// a*lhs - b*rhs, where both are sorted by position. The leading entries are
// expected to cancel when called with a = rhs lead, b = lhs lead.
IntRow combine(const IntRow& lhs, const Integer& a, const IntRow& rhs,
               const Integer& b) {
  IntRow out;
  out.reserve(lhs.size() + rhs.size());
  size_t i = 0, j = 0;
  while (i < lhs.size() || j < rhs.size()) {
    if (j == rhs.size() || (i < lhs.size() && lhs[i].pos < rhs[j].pos)) {
      out.push_back({lhs[i].pos, a * lhs[i].coef});
      ++i;
    } else if (i == lhs.size() || rhs[j].pos < lhs[i].pos) {
      out.push_back({rhs[j].pos, -b * rhs[j].coef});
      ++j;
    } else {
      Integer c = a * lhs[i].coef - b * rhs[j].coef;
      if (c != 0) out.push_back({lhs[i].pos, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

struct Echelon {
  int cols = 0;
  std::vector<int> order;           // order[pos] = column id
  std::vector<IntRow> pivot_rows;   // leading entry at a unique position
  std::vector<int> pivot_at;        // position -> index into pivot_rows, or -1
  int rank = 0;

  void insert(IntRow row) {
    gcd_normalize(row);
    while (!row.empty()) {
      const int lead = row.front().pos;
      const int p = pivot_at[static_cast<size_t>(lead)];
      if (p < 0) {
        pivot_at[static_cast<size_t>(lead)] = static_cast<int>(pivot_rows.size());
        pivot_rows.push_back(std::move(row));
        ++rank;
        return;
      }
      const IntRow& piv = pivot_rows[static_cast<size_t>(p)];
      row = combine(row, piv.front().coef, piv, row.front().coef);
      gcd_normalize(row);
    }
  }
};

std::vector<int> make_order(int cols, ElimOrder order) {
  std::vector<int> out(static_cast<size_t>(cols));
  for (int i = 0; i < cols; ++i) {
    out[static_cast<size_t>(i)] = order == ElimOrder::Forward ? i : cols - 1 - i;
  }
  return out;
}

Echelon eliminate(std::vector<IntRow> rows, int cols, ElimOrder order) {
  Echelon e;
  e.cols = cols;
  e.order = make_order(cols, order);
  e.pivot_at.assign(static_cast<size_t>(cols), -1);
  // Short rows first: they become pivots cheaply and keep later reductions
  // from filling in.
  std::stable_sort(rows.begin(), rows.end(),
                   [](const IntRow& a, const IntRow& b) { return a.size() < b.size(); });
  for (auto& row : rows) e.insert(std::move(row));
  return e;
}

// Back-substitution: one kernel vector per free position, with value 1 at its
// own column and 0 at every other free column.
std::vector<std::vector<Rational>> kernel_from_echelon(const Echelon& e) {
  std::vector<std::vector<Rational>> kernel;
  for (int f = 0; f < e.cols; ++f) {
    if (e.pivot_at[static_cast<size_t>(f)] >= 0) continue;
    std::vector<Rational> v(static_cast<size_t>(e.cols));
    v[static_cast<size_t>(e.order[static_cast<size_t>(f)])] = 1;
    for (int q = e.cols - 1; q >= 0; --q) {
      const int p = e.pivot_at[static_cast<size_t>(q)];
      if (p < 0) continue;
      const IntRow& row = e.pivot_rows[static_cast<size_t>(p)];
      Rational acc = 0;
      for (size_t t = 1; t < row.size(); ++t) {
        const auto& val = v[static_cast<size_t>(e.order[static_cast<size_t>(row[t].pos)])];
        if (val != 0) acc += Rational(row[t].coef) * val;
      }
      v[static_cast<size_t>(e.order[static_cast<size_t>(q)])] = -acc / Rational(row.front().coef);
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

IntRow to_int_row(const std::vector<std::pair<int, Rational>>& entries,
                  const std::vector<int>& pos_of) {
  Integer common_den = 1;
  for (const auto& [col, val] : entries) {
    common_den = lcm(common_den, denominator(val));
  }
  IntRow row;
  row.reserve(entries.size());
  for (const auto& [col, val] : entries) {
    row.push_back({pos_of[static_cast<size_t>(col)],
                   numerator(val) * (common_den / denominator(val))});
  }
  std::sort(row.begin(), row.end(),
            [](const Entry& a, const Entry& b) { return a.pos < b.pos; });
  return row;
}

std::vector<int> invert_order(const std::vector<int>& order) {
  std::vector<int> pos_of(order.size());
  for (size_t p = 0; p < order.size(); ++p) {
    pos_of[static_cast<size_t>(order[p])] = static_cast<int>(p);
  }
  return pos_of;
}

std::vector<IntRow> matrix_rows(const RationalMatrix& m, const std::vector<int>& pos_of) {
  std::vector<IntRow> rows;
  rows.reserve(static_cast<size_t>(m.rows));
  for (int r = 0; r < m.rows; ++r) {
    std::vector<std::pair<int, Rational>> entries;
    for (int c = 0; c < m.cols; ++c) {
      if (m.at(r, c) != 0) entries.emplace_back(c, m.at(r, c));
    }
    if (!entries.empty()) rows.push_back(to_int_row(entries, pos_of));
  }
  return rows;
}

std::vector<IntRow> system_rows(const LinearSystem& sys, const std::vector<int>& pos_of) {
  std::vector<IntRow> rows;
  rows.reserve(sys.rows.size());
  for (const auto& r : sys.rows) {
    IntRow row;
    row.reserve(r.size());
    for (const auto& [col, coef] : r) {
      row.push_back({pos_of[static_cast<size_t>(col)], Integer(coef)});
    }
    std::sort(row.begin(), row.end(),
              [](const Entry& a, const Entry& b) { return a.pos < b.pos; });
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m, ElimOrder order) {
  const auto col_order = make_order(m.cols, order);
  const auto pos_of = invert_order(col_order);
  return kernel_from_echelon(eliminate(matrix_rows(m, pos_of), m.cols, order));
}

int rank(const RationalMatrix& m, ElimOrder order) {
  const auto col_order = make_order(m.cols, order);
  const auto pos_of = invert_order(col_order);
  return eliminate(matrix_rows(m, pos_of), m.cols, order).rank;
}

std::vector<std::vector<Rational>> nullspace(const LinearSystem& sys, ElimOrder order) {
  const auto col_order = make_order(sys.cols, order);
  const auto pos_of = invert_order(col_order);
  return kernel_from_echelon(eliminate(system_rows(sys, pos_of), sys.cols, order));
}

int float_rank(const LinearSystem& sys) {
  const auto n = static_cast<size_t>(sys.cols);
  std::map<int, std::vector<double>> pivots;  // lead column -> normalized row
  int rank = 0;
  std::vector<double> row(n);
  for (const auto& r : sys.rows) {
    std::fill(row.begin(), row.end(), 0.0);
    for (const auto& [col, coef] : r) row[static_cast<size_t>(col)] = coef;
    // Reduce against stored pivots in lead order.
    for (const auto& [lead, prow] : pivots) {
      const double f = row[static_cast<size_t>(lead)];
      if (f == 0.0) continue;
      for (size_t c = static_cast<size_t>(lead); c < n; ++c) row[c] -= f * prow[c];
    }
    size_t lead = n;
    double best = 0.0;
    for (size_t c = 0; c < n; ++c) {
      if (std::abs(row[c]) > best) best = std::abs(row[c]);
    }
    if (best < 1e-6) continue;  // numerically zero after reduction
    for (size_t c = 0; c < n; ++c) {
      if (std::abs(row[c]) > 1e-6) { lead = c; break; }
    }
    const double f = row[lead];
    for (size_t c = 0; c < n; ++c) row[c] /= f;
    for (size_t c = 0; c < lead; ++c) row[c] = 0.0;
    pivots.emplace(static_cast<int>(lead), row);
    ++rank;
  }
  return rank;
}

LinearSystem kaehler_constraint_system(const Space& space) {
  const int n = space.dim();
  const auto idx = [n](int i, int j, int k, int l) {
    return ((i * n + j) * n + k) * n + l;
  };

  std::set<std::vector<std::pair<int, int>>> unique_rows;
  const auto push = [&unique_rows](std::map<int, int> terms) {
    std::vector<std::pair<int, int>> row;
    for (const auto& [col, coef] : terms) {
      if (coef != 0) row.emplace_back(col, coef);
    }
    if (row.empty()) return;
    if (row.front().second < 0) {
      for (auto& [col, coef] : row) coef = -coef;
    }
    unique_rows.insert(std::move(row));
  };

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          {  // R(x,y,z,u) + R(y,x,z,u) = 0
            std::map<int, int> t;
            t[idx(i, j, k, l)] += 1;
            t[idx(j, i, k, l)] += 1;
            push(std::move(t));
          }
          {  // R(x,y,z,u) + R(x,y,u,z) = 0
            std::map<int, int> t;
            t[idx(i, j, k, l)] += 1;
            t[idx(i, j, l, k)] += 1;
            push(std::move(t));
          }
          {  // first Bianchi
            std::map<int, int> t;
            t[idx(i, j, k, l)] += 1;
            t[idx(j, k, i, l)] += 1;
            t[idx(k, i, j, l)] += 1;
            push(std::move(t));
          }
          {  // R(x,y,z,u) - R(x,y,Jz,Ju) = 0 on basis indices
            const auto [kk, sk] = space.j_index(k);
            const auto [ll, sl] = space.j_index(l);
            std::map<int, int> t;
            t[idx(i, j, k, l)] += 1;
            t[idx(i, j, kk, ll)] -= sk * sl;
            push(std::move(t));
          }
          {  // R(x,y,z,u) - R(z,u,x,y) = 0
            std::map<int, int> t;
            t[idx(i, j, k, l)] += 1;
            t[idx(k, l, i, j)] -= 1;
            push(std::move(t));
          }
        }
      }
    }
  }

  LinearSystem sys;
  sys.cols = n * n * n * n;
  sys.rows.assign(unique_rows.begin(), unique_rows.end());
  return sys;
}

TensorBasis kaehler_basis(const Space& space, ElimOrder order) {
  const LinearSystem sys = kaehler_constraint_system(space);
  const auto col_order = make_order(sys.cols, order);
  const auto pos_of = invert_order(col_order);
  const Echelon ech = eliminate(system_rows(sys, pos_of), sys.cols, order);

  TensorBasis basis{space, {}, {}};
  for (int f = 0; f < ech.cols; ++f) {
    if (ech.pivot_at[static_cast<size_t>(f)] >= 0) continue;
    basis.free_components.push_back(
        static_cast<size_t>(ech.order[static_cast<size_t>(f)]));
  }
  auto kernel = kernel_from_echelon(ech);
  basis.elements.reserve(kernel.size());
  for (auto& v : kernel) {
    CurvatureTensor t(space);
    for (size_t c = 0; c < v.size(); ++c) t.component(c) = std::move(v[c]);
    basis.elements.push_back(std::move(t));
  }
  return basis;
}

std::optional<std::vector<Rational>> coordinates(const TensorBasis& basis,
                                                 const CurvatureTensor& r) {
  if (basis.space != r.space()) throw DimensionMismatch("basis/tensor space mismatch");
  std::vector<Rational> coords;
  coords.reserve(basis.free_components.size());
  for (size_t f : basis.free_components) coords.push_back(r.component(f));

  CurvatureTensor recon(basis.space);
  for (size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] != 0) recon.add_scaled(coords[k], basis.elements[k]);
  }
  for (size_t c = 0; c < recon.component_count(); ++c) {
    if (recon.component(c) != r.component(c)) return std::nullopt;
  }
  return coords;
}

}  // namespace kcurv
