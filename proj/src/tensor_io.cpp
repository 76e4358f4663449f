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

#include "kcurv/tensor_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "kcurv/errors.hpp"

namespace kcurv {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

int parse_int(int line, const std::string& tok, const char* what) {
  try {
    size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) fail(line, std::string("malformed ") + what);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    fail(line, std::string("malformed ") + what + " '" + tok + "'");
  }
}

}  // namespace

TensorFile read_tensor_file(std::istream& in) {
  TensorFile file;
  bool saw_version = false, saw_m = false, saw_signature = false;
  std::set<std::array<int, 4>> keys;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(raw);
    std::string key;
    if (!(ls >> key)) continue;  // blank line

    if (key == "format_version") {
      std::string tok;
      if (!(ls >> tok)) fail(line, "missing format_version value");
      file.format_version = parse_int(line, tok, "format_version");
      if (file.format_version != 1) fail(line, "unsupported format_version");
      saw_version = true;
    } else if (key == "m") {
      std::string tok;
      if (!(ls >> tok)) fail(line, "missing m value");
      file.m = parse_int(line, tok, "m");
      if (file.m < 1) fail(line, "m must be at least 1");
      saw_m = true;
    } else if (key == "signature") {
      if (!(ls >> file.signature)) fail(line, "missing signature value");
      for (char c : file.signature) {
        if (c != '+' && c != '-') fail(line, "signature characters must be + or -");
      }
      saw_signature = true;
    } else if (key == "entry") {
      if (!saw_m) fail(line, "entry before m");
      std::array<std::string, 5> tok;
      for (auto& t : tok) {
        if (!(ls >> t)) fail(line, "entry needs 4 indices and a value");
      }
      TensorFile::Entry e;
      e.i = parse_int(line, tok[0], "index");
      e.j = parse_int(line, tok[1], "index");
      e.k = parse_int(line, tok[2], "index");
      e.l = parse_int(line, tok[3], "index");
      const int n = 2 * file.m;
      for (int idx : {e.i, e.j, e.k, e.l}) {
        if (idx < 0 || idx >= n) fail(line, "index out of range");
      }
      if (!keys.insert({e.i, e.j, e.k, e.l}).second) {
        fail(line, "duplicate entry (" + tok[0] + "," + tok[1] + "," + tok[2] + "," +
                       tok[3] + ")");
      }
      try {
        e.value = parse_rational(tok[4]);
      } catch (const ParseError& err) {
        fail(line, err.what());
      }
      file.entries.push_back(std::move(e));
    } else {
      fail(line, "unknown key '" + key + "'");
    }
    std::string trailing;
    if (ls >> trailing) fail(line, "trailing tokens");
  }

  if (!saw_version) throw ParseError("missing format_version");
  if (!saw_m) throw ParseError("missing m");
  if (!saw_signature) throw ParseError("missing signature");
  if (file.signature.size() != static_cast<size_t>(file.m)) {
    throw ParseError("signature length does not match m");
  }
  return file;
}

TensorFile read_tensor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_tensor_file(in);
}

void write_tensor_file(std::ostream& out, const TensorFile& file) {
  out << "format_version " << file.format_version << "\n";
  out << "m " << file.m << "\n";
  out << "signature " << file.signature << "\n";
  auto entries = file.entries;
  std::sort(entries.begin(), entries.end(),
            [](const TensorFile::Entry& a, const TensorFile::Entry& b) {
              return std::array{a.i, a.j, a.k, a.l} < std::array{b.i, b.j, b.k, b.l};
            });
  for (const auto& e : entries) {
    out << "entry " << e.i << " " << e.j << " " << e.k << " " << e.l << " "
        << e.value.str() << "\n";
  }
}

void write_tensor_file(const std::string& path, const TensorFile& file) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_tensor_file(out, file);
}

CurvatureTensor to_tensor(const TensorFile& file) {
  CurvatureTensor t(Space::from_signature(file.signature));
  for (const auto& e : file.entries) t.at(e.i, e.j, e.k, e.l) = e.value;
  return t;
}

TensorFile from_tensor(const CurvatureTensor& tensor) {
  TensorFile file;
  file.m = tensor.space().m();
  file.signature = tensor.space().signature_string();
  const int n = tensor.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          if (tensor.at(i, j, k, l) != 0) {
            file.entries.push_back({i, j, k, l, tensor.at(i, j, k, l)});
          }
        }
      }
    }
  }
  return file;
}

}  // namespace kcurv
