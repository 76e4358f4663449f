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

#include "kcurv/expand.hpp"

#include <sstream>

#include "kcurv/errors.hpp"

namespace kcurv {

Poly::Poly(const Rational& c0) {
  if (c0 != 0) c_.push_back(c0);
}

Poly Poly::alpha_power(int degree, const Rational& coef) {
  Poly p;
  if (coef == 0) return p;
  p.c_.assign(static_cast<size_t>(degree) + 1, Rational(0));
  p.c_.back() = coef;
  return p;
}

const Rational& Poly::coef(int degree) const {
  static const Rational zero(0);
  if (degree < 0 || degree >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<size_t>(degree)];
}

Rational Poly::operator()(const Rational& alpha) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * alpha + *it;
  return acc;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), Rational(0));
  for (size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), Rational(0));
  for (size_t i = 0; i < other.c_.size(); ++i) c_[i] -= other.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  Poly out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  out.c_.assign(lhs.c_.size() + rhs.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < lhs.c_.size(); ++i) {
    if (lhs.c_[i] == 0) continue;
    for (size_t j = 0; j < rhs.c_.size(); ++j) {
      if (rhs.c_[j] != 0) out.c_[i + j] += lhs.c_[i] * rhs.c_[j];
    }
  }
  out.trim();
  return out;
}

Poly operator*(const Rational& c, const Poly& p) {
  Poly out;
  if (c == 0) return out;
  out.c_ = p.c_;
  for (auto& v : out.c_) v *= c;
  return out;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t d = 0; d < c_.size(); ++d) {
    if (c_[d] == 0) continue;
    Rational c = c_[d];
    if (first) {
      if (c < 0) { os << "-"; c = -c; }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (d == 0 || c != 1) os << c.str();
    if (d > 0) {
      if (c != 1) os << "*";
      os << "a";
      if (d > 1) os << "^" << d;
    }
    first = false;
  }
  return os.str();
}

std::string to_string(Sym s) {
  switch (s) {
    case Sym::X: return "x";
    case Sym::JX: return "Jx";
    case Sym::Y: return "y";
    case Sym::JY: return "Jy";
    case Sym::Z: return "z";
    case Sym::JZ: return "Jz";
  }
  return "?";
}

std::pair<Sym, int> j_sym(Sym s) {
  const auto v = static_cast<std::uint8_t>(s);
  return v % 2 == 0 ? std::pair{static_cast<Sym>(v + 1), +1}
                    : std::pair{static_cast<Sym>(v - 1), -1};
}

SymbolVector sym(Sym s) {
  SymbolVector v;
  v.comp[static_cast<size_t>(s)] = Poly(1);
  return v;
}

SymbolVector j(const SymbolVector& v) {
  SymbolVector out;
  for (size_t s = 0; s < 6; ++s) {
    if (v.comp[s].is_zero()) continue;
    const auto [img, sign] = j_sym(static_cast<Sym>(s));
    out.comp[static_cast<size_t>(img)] += Rational(sign) * v.comp[s];
  }
  return out;
}

SymbolVector operator+(const SymbolVector& a, const SymbolVector& b) {
  SymbolVector out;
  for (size_t s = 0; s < 6; ++s) out.comp[s] = a.comp[s] + b.comp[s];
  return out;
}

SymbolVector operator*(const Poly& p, const SymbolVector& v) {
  SymbolVector out;
  for (size_t s = 0; s < 6; ++s) out.comp[s] = p * v.comp[s];
  return out;
}

std::optional<std::pair<Monomial, int>> canonical_monomial(const Monomial& m) {
  // Breadth-first closure of the signed relabeling group. The orbit is tiny
  // (at most 32 tuples), so the map stays small.
  std::map<Monomial, int> seen{{m, +1}};
  std::vector<Monomial> queue{m};
  bool vanishes = false;

  const auto visit = [&](const Monomial& t, int sign) {
    auto it = seen.find(t);
    if (it == seen.end()) {
      seen.emplace(t, sign);
      queue.push_back(t);
    } else if (it->second != sign) {
      vanishes = true;
    }
  };

  while (!queue.empty() && !vanishes) {
    const Monomial cur = queue.back();
    queue.pop_back();
    const int sign = seen.at(cur);

    Monomial t = cur;
    std::swap(t.s[0], t.s[1]);
    visit(t, -sign);

    t = cur;
    std::swap(t.s[2], t.s[3]);
    visit(t, -sign);

    t = {{cur.s[2], cur.s[3], cur.s[0], cur.s[1]}};
    visit(t, sign);

    const auto [c3, s3] = j_sym(cur.s[2]);
    const auto [c4, s4] = j_sym(cur.s[3]);
    t = {{cur.s[0], cur.s[1], c3, c4}};
    visit(t, sign * s3 * s4);
  }

  if (vanishes) return std::nullopt;
  const auto best = seen.begin();  // std::map is ordered: first key is minimal
  return std::pair{best->first, best->second};
}

void MonomialSum::add(const Monomial& m, const Poly& coef) {
  if (coef.is_zero()) return;
  const auto canon = canonical_monomial(m);
  if (!canon) return;
  const auto& [rep, sign] = *canon;
  // `sign` relates the representative back to m: m = sign * rep.
  auto it = terms_.find(rep);
  if (it == terms_.end()) {
    terms_.emplace(rep, Rational(sign) * coef);
  } else {
    it->second += Rational(sign) * coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int MonomialSum::degree() const {
  int d = -1;
  for (const auto& [m, p] : terms_) d = std::max(d, p.degree());
  return d;
}

MonomialSum& MonomialSum::operator+=(const MonomialSum& other) {
  for (const auto& [m, p] : other.terms_) add(m, p);
  return *this;
}

MonomialSum& MonomialSum::operator-=(const MonomialSum& other) {
  for (const auto& [m, p] : other.terms_) add(m, Rational(-1) * p);
  return *this;
}

std::string MonomialSum::pretty() const {
  std::ostringstream os;
  for (const auto& [m, p] : terms_) {
    os << "R(" << to_string(m.s[0]) << "," << to_string(m.s[1]) << ","
       << to_string(m.s[2]) << "," << to_string(m.s[3]) << "): " << p.str() << "\n";
  }
  return os.str();
}

MonomialSum expand(const SymbolVector& a, const SymbolVector& b,
                   const SymbolVector& c, const SymbolVector& d) {
  MonomialSum out;
  for (size_t sa = 0; sa < 6; ++sa) {
    if (a.comp[sa].is_zero()) continue;
    for (size_t sb = 0; sb < 6; ++sb) {
      if (b.comp[sb].is_zero()) continue;
      const Poly pab = a.comp[sa] * b.comp[sb];
      for (size_t sc = 0; sc < 6; ++sc) {
        if (c.comp[sc].is_zero()) continue;
        const Poly pabc = pab * c.comp[sc];
        for (size_t sd = 0; sd < 6; ++sd) {
          if (d.comp[sd].is_zero()) continue;
          out.add({{static_cast<Sym>(sa), static_cast<Sym>(sb), static_cast<Sym>(sc),
                    static_cast<Sym>(sd)}},
                  pabc * d.comp[sd]);
        }
      }
    }
  }
  return out;
}

Rational evaluate(const MonomialSum& ms, const CurvatureTensor& R,
                  const Assignment& assignment, const Rational& alpha) {
  const Space& space = R.space();
  std::array<std::optional<Vector>, 6> resolved;
  const auto vector_for = [&](Sym s) -> const Vector& {
    const auto i = static_cast<size_t>(s);
    if (!resolved[i]) {
      const auto base = static_cast<size_t>(s) / 2;
      const std::optional<Vector>* basev =
          base == 0 ? &assignment.x : base == 1 ? &assignment.y : &assignment.z;
      if (!basev->has_value()) {
        throw Error("missing symbol assignment for " +
                    to_string(static_cast<Sym>(base * 2)));
      }
      resolved[i] = static_cast<size_t>(s) % 2 == 0 ? **basev
                                                     : apply_j(space, **basev);
    }
    return *resolved[i];
  };

  Rational acc = 0;
  for (const auto& [m, p] : ms.terms()) {
    const Rational c = p(alpha);
    if (c == 0) continue;
    acc += c * eval(R, vector_for(m.s[0]), vector_for(m.s[1]), vector_for(m.s[2]),
                    vector_for(m.s[3]));
  }
  return acc;
}

MonomialSum prop1_expression() {
  const Poly a = Poly::alpha_power(1);
  const SymbolVector v1 = sym(Sym::X) + a * sym(Sym::Y);
  const SymbolVector v23 = sym(Sym::JX) + a * sym(Sym::JY);
  const SymbolVector v4 = a * sym(Sym::X) + sym(Sym::Y);
  return expand(v1, v23, v23, v4);
}

MonomialSum theorem1_expression() {
  const Poly a = Poly::alpha_power(1);
  const SymbolVector v = sym(Sym::X) + a * sym(Sym::Y);
  const SymbolVector jv = j(v);
  return expand(v, jv, jv, v);
}

MonomialSum theorem2_expression() {
  const Poly a = Poly::alpha_power(1);
  const SymbolVector v = sym(Sym::X) + a * sym(Sym::Y);
  const SymbolVector z = sym(Sym::Z);
  return expand(v, z, z, v);
}

}  // namespace kcurv
