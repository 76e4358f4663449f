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

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace kcurv {

// Exact arbitrary-precision scalars. Everything in the core is computed over
// these; no floating point appears outside the explicitly named float oracles.
// Expression templates are disabled so that abs()/gcd() return plain values.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// Parses "p", "-p" or "p/q" (q != 0). Result is always canonical
/// (reduced, positive denominator). Throws ParseError on malformed input.
Rational parse_rational(const std::string& text);

/// Canonical rendering: "p" when the denominator is 1, else "p/q" with
/// q > 0 and gcd(p, q) = 1.
std::string to_string(const Rational& r);

/// Display-only scientific approximation, e.g. "1.234568e+12".
std::string decimal_approx(const Rational& r, unsigned digits = 7);

}  // namespace kcurv
