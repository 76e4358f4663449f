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

#include <iosfwd>
#include <string>
#include <vector>

#include "kcurv/curvature.hpp"

namespace kcurv {

/// Sparse textual tensor format:
///
///   format_version 1
///   m 2
///   signature +-
///   entry 0 2 2 0 1
///   entry 0 2 2 1 -1/2
///
/// Indices are 0-based into the ordered basis e_1..e_m, f_1..f_m; omitted
/// entries are zero; values are exact rationals. Emission is canonical:
/// entries sorted lexicographically by (i,j,k,l), rationals reduced with a
/// positive denominator, so emitting a parsed file is byte-identical.
struct TensorFile {
  struct Entry {
    int i, j, k, l;
    Rational value;
  };
  int format_version = 1;
  int m = 1;
  std::string signature;
  std::vector<Entry> entries;
};

/// Parses and fully validates indices/duplicates. Throws ParseError with a
/// line diagnostic on malformed input.
TensorFile read_tensor_file(std::istream& in);
TensorFile read_tensor_file(const std::string& path);

void write_tensor_file(std::ostream& out, const TensorFile& file);
void write_tensor_file(const std::string& path, const TensorFile& file);

/// Dense tensor from a parsed file (symmetries are not checked here;
/// commands that need a curvature tensor validate separately).
CurvatureTensor to_tensor(const TensorFile& file);

/// Sparse file image of a tensor, zeros omitted, canonical order.
TensorFile from_tensor(const CurvatureTensor& tensor);

}  // namespace kcurv
