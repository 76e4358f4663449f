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

#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kcurv/errors.hpp"
#include "kcurv/expand.hpp"
#include "kcurv/rigidity.hpp"
#include "kcurv/tensor_io.hpp"
#include "kcurv/tensor_space.hpp"

namespace {

using kcurv::Rational;

class Report {
 public:
  void add(const std::string& key, const std::string& value) {
    kv_.emplace_back(key, value);
  }
  void add(const std::string& key, int value) { add(key, std::to_string(value)); }
  void add(const std::string& key, std::uint64_t value) { add(key, std::to_string(value)); }
  void add(const std::string& key, bool value) { add(key, value ? std::string("true") : std::string("false")); }
  void add(const std::string& key, const Rational& value) { add(key, value.str()); }

  void print(bool as_json) const {
    if (as_json) {
      nlohmann::ordered_json j;
      for (const auto& [k, v] : kv_) j[k] = v;
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& [k, v] : kv_) std::cout << k << ": " << v << "\n";
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> kv_;
};

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

const std::map<std::string, kcurv::PairClass> kPairClasses{
    {"pos-pos", kcurv::PairClass::PosPos},
    {"pos-neg", kcurv::PairClass::PosNeg},
    {"neg-neg", kcurv::PairClass::NegNeg}};

const std::map<std::string, kcurv::TripleClass> kTripleClasses{
    {"pos-pos-pos", kcurv::TripleClass::PosPosPos},
    {"pos-pos-neg", kcurv::TripleClass::PosPosNeg},
    {"pos-neg-neg", kcurv::TripleClass::PosNegNeg},
    {"neg-neg-neg", kcurv::TripleClass::NegNegNeg}};

kcurv::Space make_space(int m, const std::string& signature) {
  if (signature.size() != static_cast<size_t>(m)) {
    throw kcurv::ParseError("signature length must equal m");
  }
  return kcurv::Space::from_signature(signature);
}

std::string sym_tuple(const kcurv::Monomial& m) {
  return "R(" + kcurv::to_string(m.s[0]) + "," + kcurv::to_string(m.s[1]) + "," +
         kcurv::to_string(m.s[2]) + "," + kcurv::to_string(m.s[3]) + ")";
}

int run_check(const std::string& path, bool json) {
  Timer timer;
  const kcurv::TensorFile file = kcurv::read_tensor_file(path);
  const kcurv::CurvatureTensor tensor = kcurv::to_tensor(file);
  const kcurv::SymmetryReport sym = kcurv::validate_symmetries(tensor);

  Report rep;
  rep.add("command", std::string("check"));
  rep.add("file", path);
  rep.add("format_version", file.format_version);
  rep.add("m", file.m);
  rep.add("signature", file.signature);
  rep.add("entries", static_cast<int>(file.entries.size()));
  const auto prop = [&rep](const char* name, const kcurv::SymmetryReport::Check& c) {
    rep.add(name, c.ok ? std::string("pass")
                       : "fail at (" + std::to_string(c.index[0]) + "," +
                             std::to_string(c.index[1]) + "," +
                             std::to_string(c.index[2]) + "," +
                             std::to_string(c.index[3]) + ")");
  };
  prop("antisymmetry_12", sym.antisym_12);
  prop("antisymmetry_34", sym.antisym_34);
  prop("bianchi", sym.bianchi);
  prop("j_invariance", sym.j_invariance);
  prop("pair_symmetry", sym.pair_symmetry);

  if (!sym.all_ok()) {
    rep.add("valid", false);
    rep.add("timing_ms", std::to_string(timer.ms()));
    rep.print(json);
    return 2;
  }
  rep.add("valid", true);

  const kcurv::Verdict verdict = kcurv::is_constant_hsc(tensor);
  if (const auto* c = std::get_if<kcurv::ConstantHsc>(&verdict)) {
    rep.add("constant_hsc", true);
    rep.add("mu", c->mu);
  } else {
    const auto& nc = std::get<kcurv::NotConstant>(verdict);
    rep.add("constant_hsc", false);
    rep.add("deviation_at", "(" + std::to_string(nc.index[0]) + "," +
                                std::to_string(nc.index[1]) + "," +
                                std::to_string(nc.index[2]) + "," +
                                std::to_string(nc.index[3]) + ")");
    rep.add("deviation_value", nc.residual);
  }
  rep.add("timing_ms", std::to_string(timer.ms()));
  rep.print(json);
  return 0;
}

int run_emit_model(int m, const std::string& signature, const std::string& mu_text,
                   const std::string& out_path, bool json) {
  Timer timer;
  const kcurv::Space space = make_space(m, signature);
  const Rational mu = kcurv::parse_rational(mu_text);
  const kcurv::TensorFile file = kcurv::from_tensor(kcurv::model_tensor(space, mu));
  kcurv::write_tensor_file(out_path, file);

  Report rep;
  rep.add("command", std::string("emit-model"));
  rep.add("m", m);
  rep.add("signature", signature);
  rep.add("mu", mu);
  rep.add("output", out_path);
  rep.add("entries", static_cast<int>(file.entries.size()));
  rep.add("timing_ms", std::to_string(timer.ms()));
  rep.print(json);
  return 0;
}

int run_rigidity(int m, const std::string& signature, const std::string& hypothesis,
                 const std::string& pair_class, const std::string& triple_class,
                 int samples, std::uint64_t seed, bool json) {
  Timer timer;
  const kcurv::Space space = make_space(m, signature);
  const kcurv::PairClass pc = kPairClasses.at(pair_class);

  kcurv::Hypothesis hyp;
  if (hypothesis == "prop1") {
    hyp = kcurv::Prop1{pc};
  } else {
    kcurv::TripleClass tc;
    if (!triple_class.empty()) {
      tc = kTripleClasses.at(triple_class);
    } else {
      // Extend the pair by a positive direction when realizable, else negative.
      bool found = false;
      tc = kcurv::TripleClass::PosPosPos;
      for (int zs : {1, -1}) {
        for (const auto& [name, cand] : kTripleClasses) {
          try {
            kcurv::Hypothesis probe = kcurv::Prop3{pc, cand};
            (void)probe;
            // candidate must extend the pair by exactly the sign zs
            const auto count = [](kcurv::TripleClass t) {
              switch (t) {
                case kcurv::TripleClass::PosPosPos: return std::pair{3, 0};
                case kcurv::TripleClass::PosPosNeg: return std::pair{2, 1};
                case kcurv::TripleClass::PosNegNeg: return std::pair{1, 2};
                default: return std::pair{0, 3};
              }
            };
            const auto pcount = [](kcurv::PairClass p) {
              switch (p) {
                case kcurv::PairClass::PosPos: return std::pair{2, 0};
                case kcurv::PairClass::PosNeg: return std::pair{1, 1};
                default: return std::pair{0, 2};
              }
            };
            const auto [tp, tn] = count(cand);
            const auto [pp, pn] = pcount(pc);
            if (tp - pp != (zs > 0 ? 1 : 0) || tn - pn != (zs > 0 ? 0 : 1)) continue;
            if (!kcurv::triple_class_realizable(space, cand)) continue;
            tc = cand;
            found = true;
            break;
          } catch (const kcurv::Error&) {
            continue;
          }
        }
        if (found) break;
      }
      if (!found) {
        throw kcurv::UnrealizableSignature("no realizable triple class extends pair " +
                                           pair_class + " in " + signature);
      }
    }
    hyp = kcurv::Prop3{pc, tc};
  }

  const kcurv::RigidityReport result = kcurv::rigidity_verdict(space, hyp, samples, seed);

  Report rep;
  rep.add("command", std::string("rigidity"));
  rep.add("m", m);
  rep.add("signature", signature);
  rep.add("hypothesis", hypothesis);
  rep.add("pair_class", pair_class);
  if (const auto* p3 = std::get_if<kcurv::Prop3>(&hyp)) {
    rep.add("triple_class", kcurv::to_string(p3->triple_class));
  }
  rep.add("constraint", kcurv::describe(hyp));
  rep.add("samples", result.n_samples);
  rep.add("seed", result.seed);
  rep.add("kaehler_dimension", result.kaehler_dimension);
  rep.add("constraint_rank", result.constraint_rank);
  rep.add("rank_stabilized", result.rank_stabilized);
  rep.add("surviving_dimension", result.surviving_dimension);
  rep.add("verdict", kcurv::to_string(result.verdict));
  rep.add("timing_ms", std::to_string(timer.ms()));
  rep.print(json);
  return 0;
}

int run_witness(const std::string& path, const std::string& bound_text, int max_trials,
                std::uint64_t seed, bool json) {
  Timer timer;
  const kcurv::TensorFile file = kcurv::read_tensor_file(path);
  const kcurv::CurvatureTensor tensor = kcurv::to_tensor(file);
  const Rational bound = kcurv::parse_rational(bound_text);

  const auto witness = kcurv::theorem1_witness(tensor, bound, max_trials, seed);

  Report rep;
  rep.add("command", std::string("witness"));
  rep.add("file", path);
  rep.add("bound", bound);
  rep.add("max_trials", max_trials);
  rep.add("seed", seed);
  rep.add("witness_found", witness.has_value());
  if (witness) {
    rep.add("family", witness->timelike_family ? std::string("timelike")
                                               : std::string("spacelike"));
    rep.add("x", kcurv::to_string(witness->x));
    rep.add("y", kcurv::to_string(witness->y));
    rep.add("alpha", witness->alpha);
    rep.add("h_exact", witness->h_value);
    rep.add("h_decimal", kcurv::decimal_approx(witness->h_value));
  }
  rep.add("timing_ms", std::to_string(timer.ms()));
  rep.print(json);
  return 0;
}

int run_expand(const std::string& expression, bool json) {
  Timer timer;
  kcurv::MonomialSum ms;
  if (expression == "prop1") {
    ms = kcurv::prop1_expression();
  } else if (expression == "thm1") {
    ms = kcurv::theorem1_expression();
  } else {
    ms = kcurv::theorem2_expression();
  }

  Report rep;
  rep.add("command", std::string("expand"));
  rep.add("expression", expression);
  rep.add("degree", ms.degree());
  rep.add("monomials", static_cast<int>(ms.terms().size()));
  for (const auto& [mono, poly] : ms.terms()) {
    rep.add(sym_tuple(mono), poly.str());
  }
  rep.add("timing_ms", std::to_string(timer.ms()));
  rep.print(json);
  return 0;
}

int run_basis(int m, const std::string& signature, bool json) {
  Timer timer;
  const kcurv::Space space = make_space(m, signature);
  const kcurv::TensorBasis basis = kcurv::kaehler_basis(space);

  Report rep;
  rep.add("command", std::string("basis"));
  rep.add("m", m);
  rep.add("signature", signature);
  rep.add("dimension", basis.dimension());
  for (int e = 0; e < basis.dimension(); ++e) {
    const auto idx = basis.elements[static_cast<size_t>(e)].unindex(
        basis.free_components[static_cast<size_t>(e)]);
    int nonzeros = 0;
    for (size_t c = 0; c < basis.elements[static_cast<size_t>(e)].component_count(); ++c) {
      if (basis.elements[static_cast<size_t>(e)].component(c) != 0) ++nonzeros;
    }
    rep.add("element_" + std::to_string(e),
            "free (" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
                std::to_string(idx[2]) + "," + std::to_string(idx[3]) + "), " +
                std::to_string(nonzeros) + " nonzero components");
  }
  const auto model_coords = kcurv::coordinates(basis, kcurv::model_tensor(space, 4));
  if (model_coords) {
    std::string coords;
    for (size_t i = 0; i < model_coords->size(); ++i) {
      if (i) coords += " ";
      coords += (*model_coords)[i].str();
    }
    rep.add("model_coordinates", coords);
  }
  rep.add("timing_ms", std::to_string(timer.ms()));
  rep.print(json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact pointwise curvature toolkit for indefinite Kaehler tangent spaces"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");
  app.fallthrough();

  auto* check = app.add_subcommand("check", "validate a tensor file and classify it");
  std::string check_path;
  check->add_option("file", check_path, "tensor file")->required();

  auto* rigidity = app.add_subcommand("rigidity", "surviving subspace of a hypothesis");
  int rig_m = 2;
  std::string rig_sig, rig_hyp = "prop1", rig_pair = "pos-neg", rig_triple;
  int rig_samples = 0;
  std::uint64_t rig_seed = 0;
  rigidity->add_option("--m", rig_m, "complex dimension")->required();
  rigidity->add_option("--signature", rig_sig, "signs per complex direction, e.g. +-")
      ->required();
  rigidity->add_option("--hypothesis", rig_hyp, "prop1 or prop3")
      ->check(CLI::IsMember({"prop1", "prop3"}));
  rigidity->add_option("--pair-class", rig_pair, "pair signature class")
      ->check(CLI::IsMember({"pos-pos", "pos-neg", "neg-neg"}));
  rigidity->add_option("--triple-class", rig_triple, "triple signature class (prop3)")
      ->check(CLI::IsMember({"pos-pos-pos", "pos-pos-neg", "pos-neg-neg", "neg-neg-neg"}));
  rigidity->add_option("--samples", rig_samples,
                       "sampled constraints (0 = 3x basis dimension)");
  rigidity->add_option("--seed", rig_seed, "sampling seed");

  auto* witness = app.add_subcommand("witness", "search for unbounded |H|");
  std::string wit_path, wit_bound = "1000000";
  int wit_trials = 500;
  std::uint64_t wit_seed = 0;
  witness->add_option("file", wit_path, "tensor file")->required();
  witness->add_option("--bound", wit_bound, "rational bound to exceed");
  witness->add_option("--max-trials", wit_trials, "sampled pairs to try");
  witness->add_option("--seed", wit_seed, "sampling seed");

  auto* expand = app.add_subcommand("expand", "print a formal expansion");
  std::string exp_expr;
  expand->add_option("--expression", exp_expr, "prop1, thm1 or thm2")
      ->required()
      ->check(CLI::IsMember({"prop1", "thm1", "thm2"}));

  auto* emit = app.add_subcommand("emit-model", "write a constant-curvature tensor file");
  int emit_m = 2;
  std::string emit_sig, emit_mu = "4", emit_out;
  emit->add_option("--m", emit_m, "complex dimension")->required();
  emit->add_option("--signature", emit_sig, "signs per complex direction")->required();
  emit->add_option("--mu", emit_mu, "holomorphic sectional curvature (rational)");
  emit->add_option("-o,--output", emit_out, "output path")->required();

  auto* basis = app.add_subcommand("basis", "exact basis of the tensor space");
  int basis_m = 2;
  std::string basis_sig;
  basis->add_option("--m", basis_m, "complex dimension")->required();
  basis->add_option("--signature", basis_sig, "signs per complex direction")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(check)) return run_check(check_path, json);
    if (app.got_subcommand(rigidity)) {
      return run_rigidity(rig_m, rig_sig, rig_hyp, rig_pair, rig_triple, rig_samples,
                          rig_seed, json);
    }
    if (app.got_subcommand(witness)) {
      return run_witness(wit_path, wit_bound, wit_trials, wit_seed, json);
    }
    if (app.got_subcommand(expand)) return run_expand(exp_expr, json);
    if (app.got_subcommand(emit)) {
      return run_emit_model(emit_m, emit_sig, emit_mu, emit_out, json);
    }
    if (app.got_subcommand(basis)) return run_basis(basis_m, basis_sig, json);
  } catch (const kcurv::UnrealizableSignature& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const kcurv::RankNotStabilized& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const kcurv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
