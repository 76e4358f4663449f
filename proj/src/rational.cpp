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

#include "kcurv/rational.hpp"

#include <boost/multiprecision/gmp.hpp>

#include "kcurv/errors.hpp"

namespace kcurv {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  if (!is_integer_token(num_part)) {
    throw ParseError("malformed rational '" + text + "'");
  }
  Integer num(num_part);
  if (slash == std::string::npos) {
    return Rational(num);
  }
  const std::string den_part = text.substr(slash + 1);
  if (!is_integer_token(den_part)) {
    throw ParseError("malformed rational '" + text + "'");
  }
  Integer den(den_part);
  if (den == 0) {
    throw ParseError("zero denominator in rational '" + text + "'");
  }
  // Division canonicalizes (reduced form, positive denominator); raw
  // string construction of a gmp rational would not.
  return Rational(num) / Rational(den);
}

std::string to_string(const Rational& r) { return r.str(); }

std::string decimal_approx(const Rational& r, unsigned digits) {
  if (r == 0) return "0";
  boost::multiprecision::mpf_float_50 f(r);
  return f.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

}  // namespace kcurv
