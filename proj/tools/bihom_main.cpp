// Command-line front end: load/save algebras in the canonical JSON format,
// run checks, solvers, constructions and cohomology, and enumerate the
// parametric families over grids.
//
// Exit codes: 0 = pass/success, 1 = a check failed (witness in the report),
// 2 = input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bihom/axioms.hpp"
#include "bihom/cohomology.hpp"
#include "bihom/constructions.hpp"
#include "bihom/families.hpp"
#include "bihom/ideals.hpp"
#include "bihom/json_io.hpp"
#include "bihom/representations.hpp"
#include "bihom/solvers.hpp"

using namespace bihom;
using ordered_json = nlohmann::ordered_json;

namespace {

int cyclo_env() {
  const char* v = std::getenv("BIHOM_CYCLOTOMIC");
  return v ? std::atoi(v) : 0;
}

Matrix matrix_from_file(const std::string& path, int dim) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open map file: " + path);
  ordered_json j = ordered_json::parse(in);
  if (!j.is_array() || int(j.size()) != dim * dim)
    throw std::invalid_argument("map file must hold " + std::to_string(dim * dim) +
                                " fraction strings");
  Matrix m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      m.at(r, c) = Scalar::parse(j[size_t(r) * dim + c].get<std::string>(), cyclo_env());
  return m;
}

Cochain cochain_from_file(const std::string& path, int k, int n, int m) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open cochain file: " + path);
  ordered_json j = ordered_json::parse(in);
  Cochain f = Cochain::zero(k, n, m);
  for (const auto& entry : j.at("entries")) {
    if (int(entry.size()) != k + 2)
      throw std::invalid_argument("cochain entries must be [i_1..i_k, b, value]");
    std::vector<int> tuple;
    for (int s = 0; s < k; ++s) tuple.push_back(entry[size_t(s)].get<int>());
    int b = entry[size_t(k)].get<int>();
    f.values[f.flat_index(tuple, b)] =
        Scalar::parse(entry[size_t(k) + 1].get<std::string>(), cyclo_env());
  }
  return f;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << text;
  }
}

ordered_json witness_json(const CheckReport& r) {
  ordered_json w;
  w["passed"] = r.passed;
  if (!r.passed) {
    w["axiom"] = r.witness->axiom;
    w["tuple"] = r.witness->tuple;
    ordered_json res = ordered_json::array();
    for (const auto& s : r.witness->residual) res.push_back(s.str());
    w["residual"] = res;
  }
  return w;
}

int report_check(const CheckReport& r, bool as_json, const std::string& label) {
  if (as_json) {
    ordered_json out;
    out["command"] = label;
    out["result"] = witness_json(r);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << label << ": " << r.describe() << "\n";
  }
  return r.passed ? 0 : 1;
}

// ---- enumerate ------------------------------------------------------------

std::vector<Scalar> parse_range(const std::string& text) {
  std::vector<Scalar> vals;
  auto dots = text.find("..");
  if (dots != std::string::npos) {
    long lo = std::stol(text.substr(0, dots));
    long hi = std::stol(text.substr(dots + 2));
    for (long v = lo; v <= hi; ++v) vals.push_back(Scalar(v));
    return vals;
  }
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) vals.push_back(Scalar::parse(tok, cyclo_env()));
  return vals;
}

const std::map<std::string, std::vector<std::string>>& family_params() {
  static const std::map<std::string, std::vector<std::string>> fams = {
      {"table_case1", {"x", "y"}},   {"table_case2", {"c", "d"}},
      {"table_case3", {"a", "x"}},   {"table_case4", {"b", "y"}},
      {"super3d", {"a", "x", "d", "mu"}},
  };
  return fams;
}

std::map<std::string, std::vector<Scalar>> default_grid(const std::string& family) {
  std::map<std::string, std::vector<Scalar>> g;
  auto range = [](long lo, long hi) {
    std::vector<Scalar> v;
    for (long t = lo; t <= hi; ++t) v.push_back(Scalar(t));
    return v;
  };
  if (family == "super3d") {
    g["a"] = range(0, 1);
    g["x"] = range(1, 2);
    g["d"] = range(0, 1);
    g["mu"] = {Scalar(-1), Scalar(1)};
  } else {
    for (const auto& p : family_params().at(family)) g[p] = range(-2, 2);
  }
  return g;
}

struct EnumRow {
  std::map<std::string, Scalar> point;
  bool skipped = false;
  std::string note;
  std::map<std::string, bool> predicates;
};

std::vector<EnumRow> run_family(const std::string& family,
                                const std::map<std::string, std::vector<Scalar>>& grid) {
  const auto& params = family_params().at(family);
  std::vector<EnumRow> rows;
  std::vector<size_t> idx(params.size(), 0);
  while (true) {
    EnumRow row;
    for (size_t p = 0; p < params.size(); ++p)
      row.point[params[p]] = grid.at(params[p])[idx[p]];
    Algebra L;
    bool ok = true;
    if (family == "table_case1") {
      L = table_case1(row.point["x"], row.point["y"]);
    } else if (family == "table_case2") {
      L = table_case2(row.point["c"], row.point["d"]);
    } else if (family == "table_case3") {
      if (row.point["x"].is_zero()) {
        row.skipped = true;
        row.note = "skipped: bracket uses a/x, x must be nonzero";
        ok = false;
      } else {
        L = table_case3(row.point["a"], row.point["x"]);
      }
    } else if (family == "table_case4") {
      L = table_case4(row.point["b"], row.point["y"]);
    } else if (family == "super3d") {
      if (row.point["x"].is_zero()) {
        row.skipped = true;
        row.note = "skipped: bracket uses a/x, x must be nonzero";
        ok = false;
      } else {
        L = super3d(row.point["a"], row.point["x"], row.point["d"], row.point["mu"]);
      }
    } else {
      throw std::invalid_argument("unknown family: " + family);
    }
    if (ok) {
      row.predicates["left"] = check_left_hom_leibniz(L).passed;
      row.predicates["right"] = check_right_hom_leibniz(L).passed;
      row.predicates["symmetric"] = check_symmetric_hom_leibniz(L).passed;
      row.predicates["multiplicative"] = check_multiplicative(L).passed;
      row.predicates["hom_lie"] = check_hom_lie(L).passed;
      if (family == "super3d") row.predicates["valid"] = validate(L).passed;
    }
    rows.push_back(std::move(row));
    size_t p = params.size();
    while (p > 0) {
      --p;
      if (++idx[p] < grid.at(params[p]).size()) break;
      idx[p] = 0;
      if (p == 0) return rows;
    }
  }
}

int cmd_enumerate(const std::string& family, const std::vector<std::string>& param_specs,
                  bool as_json) {
  if (!family_params().count(family)) {
    std::cerr << "unknown family: " << family << " (expected table_case1..4 or super3d)\n";
    return 2;
  }
  auto grid = default_grid(family);
  for (const auto& spec : param_specs) {
    auto eq = spec.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad --param, expected name=values");
    std::string name = spec.substr(0, eq);
    if (!grid.count(name))
      throw std::invalid_argument("unknown parameter " + name + " for family " + family);
    grid[name] = parse_range(spec.substr(eq + 1));
  }
  auto rows = run_family(family, grid);
  if (as_json) {
    ordered_json out;
    out["family"] = family;
    ordered_json jr = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json r;
      for (const auto& p : family_params().at(family)) r[p] = row.point.at(p).str();
      if (row.skipped) {
        r["skipped"] = true;
        r["note"] = row.note;
      } else {
        for (const auto& [k, v] : row.predicates) r[k] = v;
      }
      jr.push_back(r);
    }
    out["rows"] = jr;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "family " << family << " (" << rows.size() << " grid points)\n";
    for (const auto& row : rows) {
      for (const auto& p : family_params().at(family))
        std::cout << p << "=" << row.point.at(p).str() << " ";
      if (row.skipped) {
        std::cout << "| " << row.note << "\n";
        continue;
      }
      std::cout << "|";
      for (const auto& [k, v] : row.predicates) std::cout << " " << k << "=" << (v ? 1 : 0);
      std::cout << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure-constant toolkit for Hom/BiHom Leibniz algebras"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable reports");

  std::string file, axioms_name, out_path;
  std::string mode_name = "auto";

  auto exec_mode = [&]() {
    if (mode_name == "serial") return ExecMode::Serial;
    if (mode_name == "parallel") return ExecMode::Parallel;
    return default_exec_mode();
  };

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "shape, grading and bicharacter checks");
  validate_cmd->add_option("file", file)->required();

  // check
  auto* check_cmd = app.add_subcommand("check", "run an axiom-set check");
  check_cmd->add_option("file", file)->required();
  std::string check_axioms;
  check_cmd->add_option("--axioms", check_axioms, "axiom set name")->required();
  check_cmd->add_option("--mode", mode_name, "serial|parallel|auto");

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "center, L^2, I_L and their ideal kinds");
  analyze_cmd->add_option("file", file)->required();

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "derivation-type subspaces");
  solve_cmd->add_option("file", file)->required();
  std::string space = "der";
  int sk = 0, sl = 0;
  std::string s_lambda = "1", s_mu = "1", s_gamma = "1";
  solve_cmd->add_option("--space", space, "der|centroid|qc|zder|ider|omega");
  solve_cmd->add_option("--k", sk);
  solve_cmd->add_option("--l", sl);
  solve_cmd->add_option("--lambda", s_lambda);
  solve_cmd->add_option("--mu", s_mu);
  solve_cmd->add_option("--gamma", s_gamma);

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "builders; writes canonical JSON");
  std::string cname, map_a_path, map_b_path, rep_path, cochain_path;
  bool second_output = false, epsilon_commutator = false;
  construct_cmd->add_option("name", cname,
                            "yau_twist_hom|lie_tensor|hom_lie_tensor|bihom_yau_twist|"
                            "bihom_to_hom|colour_assoc|centroid_twist|centroid_double_twist|"
                            "extension")
      ->required();
  construct_cmd->add_option("file", file)->required();
  construct_cmd->add_option("--map-a", map_a_path, "JSON list of dim^2 fractions");
  construct_cmd->add_option("--map-b", map_b_path);
  construct_cmd->add_option("--rep", rep_path, "representation file (extension)");
  construct_cmd->add_option("--cochain", cochain_path, "2-cochain file (extension)");
  construct_cmd->add_flag("--second", second_output, "emit the second output of a pair");
  construct_cmd->add_flag("--epsilon-commutator", epsilon_commutator,
                          "insert eps(x,y) into the commutator bracket");
  construct_cmd->add_option("-o,--output", out_path);

  // cohomology
  auto* coh_cmd = app.add_subcommand("cohomology", "cochain spaces, delta, dims");
  coh_cmd->add_option("file", file)->required();
  int ck = 2, cn = 0, cm = 0;
  std::string coefficients = "adjoint", reading_name = "printed";
  coh_cmd->add_option("--k", ck);
  coh_cmd->add_option("--n", cn);
  coh_cmd->add_option("--m", cm);
  coh_cmd->add_option("--coefficients", coefficients, "adjoint|trivial|<rep file>");
  coh_cmd->add_option("--reading", reading_name, "printed|alpha|power");

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "parametric families over grids");
  std::string family;
  std::vector<std::string> param_specs;
  enum_cmd->add_option("family", family, "table_case1..4|super3d")->required();
  enum_cmd->add_option("--param", param_specs, "name=lo..hi or name=v1,v2,...");

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate_cmd) {
      Algebra L = load_algebra_file(file, cyclo_env());
      return report_check(validate(L), as_json, "validate " + file);
    }
    if (*check_cmd) {
      auto set = axiom_set_from_name(check_axioms);
      if (!set) {
        std::cerr << "unknown axiom set '" << check_axioms << "'; valid names:\n";
        for (AxiomSet s : all_axiom_sets()) std::cerr << "  " << axiom_set_name(s) << "\n";
        return 2;
      }
      Algebra L = load_algebra_file(file, cyclo_env());
      CheckReport shape = validate(L);
      if (!shape.passed) return report_check(shape, as_json, "validate " + file);
      return report_check(check(L, *set, exec_mode()), as_json,
                          std::string("check ") + check_axioms);
    }
    if (*analyze_cmd) {
      Algebra L = load_algebra_file(file, cyclo_env());
      Subspace z = center(L), sq = squared(L), il = ideal_IL(L);
      auto kinds_text = [&](const Subspace& s) {
        std::string t;
        for (IdealKind k : classify_subspace(L, s)) {
          if (!t.empty()) t += ",";
          t += ideal_kind_name(k);
        }
        return t.empty() ? std::string("none") : t;
      };
      if (as_json) {
        ordered_json out;
        out["dim"] = L.dim;
        out["center_dim"] = z.dim();
        out["squared_dim"] = sq.dim();
        out["IL_dim"] = il.dim();
        out["center_kinds"] = kinds_text(z);
        out["squared_kinds"] = kinds_text(sq);
        out["IL_kinds"] = kinds_text(il);
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "dim L = " << L.dim << "\n";
        std::cout << "center: dim " << z.dim() << " [" << kinds_text(z) << "]\n";
        std::cout << "L^2: dim " << sq.dim() << " [" << kinds_text(sq) << "]\n";
        std::cout << "I_L: dim " << il.dim() << " [" << kinds_text(il) << "]\n";
      }
      return 0;
    }
    if (*solve_cmd) {
      Algebra L = load_algebra_file(file, cyclo_env());
      DerivationSpec spec{Scalar::parse(s_lambda, cyclo_env()), Scalar::parse(s_mu, cyclo_env()),
                          Scalar::parse(s_gamma, cyclo_env()), sk, sl};
      Subspace result(L.dim * L.dim);
      if (space == "der")
        result = generalized_derivation_space(L, spec, exec_mode());
      else if (space == "centroid")
        result = centroid_space(L, sk, sl, exec_mode());
      else if (space == "qc")
        result = quasi_centroid_space(L, sk, sl, exec_mode());
      else if (space == "zder")
        result = central_derivation_space(L, sk, sl, exec_mode());
      else if (space == "ider")
        result = ider_space(L, spec, exec_mode());
      else if (space == "omega")
        result = omega_space(L);
      else {
        std::cerr << "unknown space '" << space << "' (der|centroid|qc|zder|ider|omega)\n";
        return 2;
      }
      if (as_json) {
        ordered_json out;
        out["space"] = space;
        out["dim"] = result.dim();
        ordered_json basis = ordered_json::array();
        for (int i = 0; i < result.dim(); ++i) {
          ordered_json row = ordered_json::array();
          for (const auto& s : result.basis_vector(i)) row.push_back(s.str());
          basis.push_back(row);
        }
        out["basis"] = basis;
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << space << " dim = " << result.dim() << "\n";
        for (int i = 0; i < result.dim(); ++i) {
          std::cout << "basis[" << i << "] =\n"
                    << unvec_row_major(result.basis_vector(i), L.dim).str() << "\n";
        }
      }
      return 0;
    }
    if (*construct_cmd) {
      Algebra L = load_algebra_file(file, cyclo_env());
      auto need_map = [&](const std::string& p) {
        if (p.empty()) throw std::invalid_argument("this construction needs a map file");
        return matrix_from_file(p, L.dim);
      };
      Algebra out;
      if (cname == "yau_twist_hom") {
        out = yau_twist_hom(L, need_map(map_a_path));
      } else if (cname == "lie_tensor") {
        out = lie_tensor_to_leibniz(L);
      } else if (cname == "hom_lie_tensor") {
        out = hom_lie_tensor_construction(L, need_map(map_a_path));
      } else if (cname == "bihom_yau_twist") {
        out = bihom_yau_twist(L, need_map(map_a_path), need_map(map_b_path));
      } else if (cname == "bihom_to_hom") {
        out = bihom_to_hom_leibniz(L);
      } else if (cname == "colour_assoc") {
        auto pair = colour_assoc_to_bihom(L, need_map(map_a_path), need_map(map_b_path),
                                          epsilon_commutator);
        out = second_output ? pair.second : pair.first;
      } else if (cname == "centroid_twist") {
        out = colour_centroid_idempotent_twist(L, need_map(map_a_path), need_map(map_b_path));
      } else if (cname == "centroid_double_twist") {
        auto pair = colour_centroid_double_twist(L, need_map(map_a_path), need_map(map_b_path));
        out = second_output ? pair.second : pair.first;
      } else if (cname == "extension") {
        if (rep_path.empty() || cochain_path.empty())
          throw std::invalid_argument("extension needs --rep and --cochain");
        Representation V = load_representation_file(rep_path, cyclo_env());
        Cochain f = cochain_from_file(cochain_path, 2, L.dim, V.dim);
        out = extension_direct_sum(L, V, f);
      } else {
        std::cerr << "unknown construction '" << cname << "'\n";
        return 2;
      }
      emit(algebra_to_json(out), out_path);
      return 0;
    }
    if (*coh_cmd) {
      Algebra L = load_algebra_file(file, cyclo_env());
      Representation V = Representation::trivial(L);
      if (coefficients == "adjoint")
        V = adjoint_representation(L, 0, 0);
      else if (coefficients != "trivial")
        V = load_representation_file(coefficients, cyclo_env());
      DeltaReading reading = kDefaultDeltaReading;
      if (reading_name == "printed")
        reading = DeltaReading::printed;
      else if (reading_name == "alpha")
        reading = DeltaReading::alpha_on_survivors;
      else if (reading_name == "power")
        reading = DeltaReading::power_shift;
      else {
        std::cerr << "unknown reading '" << reading_name << "'\n";
        return 2;
      }
      CheckReport complex_ok =
          ck >= 1 ? verify_complex(L, V, ck, cn, cm, reading) : CheckReport::pass();
      if (as_json) {
        ordered_json out;
        out["k"] = ck;
        out["n"] = cn;
        out["m"] = cm;
        out["reading"] = delta_reading_name(reading);
        out["complex"] = witness_json(complex_ok);
        if (complex_ok.passed) {
          CohomologyDims dims = cohomology_dims(L, V, ck, cn, cm, reading);
          out["dim_C"] = dims.c;
          out["dim_Z"] = dims.z;
          out["dim_B"] = dims.b;
          out["dim_H"] = dims.h;
        }
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "delta^" << ck << " at (n,m)=(" << cn << "," << cm << "), reading "
                  << delta_reading_name(reading) << "\n";
        std::cout << "complex check: " << complex_ok.describe() << "\n";
        if (complex_ok.passed) {
          CohomologyDims dims = cohomology_dims(L, V, ck, cn, cm, reading);
          std::cout << "dim C^" << ck << " = " << dims.c << ", dim Z^" << ck << " = " << dims.z
                    << ", dim B^" << ck << " = " << dims.b << ", dim H^" << ck << " = "
                    << dims.h << "\n";
        }
      }
      return complex_ok.passed ? 0 : 1;
    }
    if (*enum_cmd) return cmd_enumerate(family, param_specs, as_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
