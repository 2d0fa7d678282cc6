// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Everything is exact; the timed budgets are generous
// wall-clock bounds for desk-scale inputs.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bihom/axioms.hpp"
#include "bihom/cohomology.hpp"
#include "bihom/constructions.hpp"
#include "bihom/families.hpp"
#include "bihom/ideals.hpp"
#include "bihom/json_io.hpp"
#include "bihom/representations.hpp"
#include "bihom/solvers.hpp"
#include "solver_oracle.hpp"

using namespace bihom;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::ostringstream detail;

void criterion(int number, const std::string& name, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name << "\n";
  std::string lines = detail.str();
  detail.str("");
  if (!lines.empty()) std::cout << lines;
  if (!ok) ++failures;
}

Matrix diag(std::vector<long> d) {
  Matrix m(int(d.size()), int(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = Scalar(d[i]);
  return m;
}

Algebra yau2d() {
  return bihom_yau_twist(table_case1_untwisted(Scalar(1), Scalar(0)), diag({-1, 1}),
                         diag({2, 4}));
}

Algebra sl2_bihom() {
  Algebra sl2 = Algebra::zero(3);
  sl2.c_at(0, 1, 1) = Scalar(2);
  sl2.c_at(1, 0, 1) = Scalar(-2);
  sl2.c_at(0, 2, 2) = Scalar(-2);
  sl2.c_at(2, 0, 2) = Scalar(2);
  sl2.c_at(1, 2, 0) = Scalar(1);
  sl2.c_at(2, 1, 0) = Scalar(-1);
  Matrix a(3, 3), b(3, 3);
  a.at(0, 0) = Scalar(1);
  a.at(1, 1) = Scalar(2);
  a.at(2, 2) = Scalar(1, 2);
  b.at(0, 0) = Scalar(1);
  b.at(1, 1) = Scalar(3);
  b.at(2, 2) = Scalar(1, 3);
  Algebra tw = sl2;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vec v = bracket_eval(sl2, a.col(i), b.col(j));
      for (int k = 0; k < 3; ++k) tw.c_at(i, j, k) = v[k];
    }
  tw.alpha = a;
  tw.beta = b;
  return tw;
}

Representation central_rep() {
  Representation V = Representation::zero(abelian(1), 2);
  V.l[(0 * 2 + 0) * 2 + 1] = Scalar(1);
  V.r[(0 * 2 + 0) * 2 + 1] = Scalar(1);
  V.betaV = diag({-1, -1});
  return V;
}

Algebra ext3d() {
  Representation V = central_rep();
  Cochain f = Cochain::zero(2, 1, 2);
  f.values[f.flat_index({0, 0}, 1)] = Scalar(1);
  return extension_direct_sum(V.algebra, V, f);
}

std::vector<std::pair<std::string, Algebra>> corpus() {
  return {{"abelian2", abelian(2)},
          {"case1(1,0)", table_case1(Scalar(1), Scalar(0))},
          {"case1(1,2)", table_case1(Scalar(1), Scalar(2))},
          {"case2(1,2)", table_case2(Scalar(1), Scalar(2))},
          {"case3(1,1)", table_case3(Scalar(1), Scalar(1))},
          {"case4(1,1)", table_case4(Scalar(1), Scalar(1))},
          {"lie2d", lie2d()},
          {"super3d(0,1,1,-1)", super3d(Scalar(0), Scalar(1), Scalar(1), Scalar(-1))},
          {"super3d(1,1,1,2)", super3d(Scalar(1), Scalar(1), Scalar(1), Scalar(2))},
          {"yau2d", yau2d()},
          {"sl2_bihom", sl2_bihom()},
          {"ext3d", ext3d()},
          {"tensor_gg", tensor_gg()},
          {"tensor_gg_twisted", tensor_gg(diag({1, 1, -1}))}};
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

bool criterion1_tables() {
  auto t0 = Clock::now();
  bool ok = true;
  auto column = [&](const std::string& label, int mismatches, int total) {
    detail << "  - " << label << ": " << (total - mismatches) << "/" << total << " grid points";
    if (mismatches) detail << " (" << mismatches << " mismatches)";
    detail << "\n";
    if (mismatches) ok = false;
  };

  int m_left1 = 0, m_mult1 = 0, m_sym1 = 0;
  for (long x = -2; x <= 2; ++x)
    for (long y = -2; y <= 2; ++y) {
      Algebra L = table_case1(Scalar(x), Scalar(y));
      if (!check_left_hom_leibniz(L).passed) ++m_left1;
      if (check_multiplicative(L).passed != (y == 0)) ++m_mult1;
      if (check_symmetric_hom_leibniz(L).passed != (x * y == 0)) ++m_sym1;
    }
  column("case1 left always", m_left1, 25);
  column("case1 multiplicative iff y=0", m_mult1, 25);
  column("case1 symmetric iff xy=0 (printed)", m_sym1, 25);
  if (m_sym1)
    detail << "      computed truth is: symmetric iff y=0 (right law fails at x=0, y!=0)\n";

  int m_left2 = 0, m_mult2 = 0, m_sym2 = 0;
  for (long c = -2; c <= 2; ++c)
    for (long d = -2; d <= 2; ++d) {
      Algebra L = table_case2(Scalar(c), Scalar(d));
      if (!check_left_hom_leibniz(L).passed) ++m_left2;
      if (check_multiplicative(L).passed != (c == 0)) ++m_mult2;
      if (check_symmetric_hom_leibniz(L).passed != (c == 0)) ++m_sym2;
    }
  column("case2 left always", m_left2, 25);
  column("case2 multiplicative iff c=0 (printed)", m_mult2, 25);
  if (m_mult2)
    detail << "      computed truth is: multiplicative iff d=0 "
              "(alpha([e2,e2]) = -d e1 but [alpha e2, alpha e2] = d e1)\n";
  column("case2 symmetric iff c=0", m_sym2, 25);

  int m_left3 = 0, m_mult3 = 0, m_sym3 = 0, total3 = 0;
  for (long a = -2; a <= 2; ++a)
    for (long x = -2; x <= 2; ++x) {
      if (x == 0) continue;
      ++total3;
      Algebra L = table_case3(Scalar(a), Scalar(x));
      if (!check_left_hom_leibniz(L).passed) ++m_left3;
      if (check_multiplicative(L).passed != (a == 0)) ++m_mult3;
      if (!check_symmetric_hom_leibniz(L).passed) ++m_sym3;
    }
  column("case3 left always", m_left3, total3);
  column("case3 multiplicative iff a=0", m_mult3, total3);
  column("case3 symmetric always", m_sym3, total3);

  int m_left4 = 0, m_mult4 = 0, m_lie4 = 0;
  for (long b = -2; b <= 2; ++b)
    for (long y = -2; y <= 2; ++y) {
      Algebra L = table_case4(Scalar(b), Scalar(y));
      if (!check_left_hom_leibniz(L).passed) ++m_left4;
      if (check_multiplicative(L).passed != (y == 0)) ++m_mult4;
      if (!check_hom_lie(L).passed) ++m_lie4;
    }
  column("case4 left always", m_left4, 25);
  column("case4 multiplicative iff y=0", m_mult4, 25);
  column("case4 hom-Lie everywhere", m_lie4, 25);

  double dt = seconds_since(t0);
  detail << "  - elapsed " << dt << " s (budget 1 s per case, 4 s total)\n";
  if (dt >= 4.0) ok = false;

  // the CLI front end runs the same enumeration
  std::string cmd = std::string(BIHOM_CLI_PATH) + " enumerate table_case1 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe) {
    while (fgets(buf.data(), int(buf.size()), pipe)) out += buf.data();
    int status = pclose(pipe);
    if (WEXITSTATUS(status) != 0 || out.find("25 grid points") == std::string::npos) {
      detail << "  - CLI enumerate table_case1 failed\n";
      ok = false;
    }
  }
  return ok;
}

bool criterion2_tensor_gg() {
  auto t0 = Clock::now();
  bool ok = true;
  for (const auto& [name, GG] :
       {std::pair<std::string, Algebra>{"alpha=id", tensor_gg()},
        {"alpha=diag(1,1,-1)x2", tensor_gg(diag({1, 1, -1}))}}) {
    bool sym = check_symmetric_hom_leibniz(GG).passed;
    CheckReport lie = check_hom_lie(GG);
    bool witness_ok = !lie.passed && lie.witness.has_value() &&
                      lie.witness->tuple.size() == 2 &&
                      lie.witness->tuple[0] == lie.witness->tuple[1] &&
                      !vec_is_zero(lie.witness->residual);
    detail << "  - " << name << ": symmetric=" << sym
           << ", hom-Lie fails with [u,u] != 0 witness=" << witness_ok << "\n";
    ok = ok && sym && witness_ok;
  }
  double dt = seconds_since(t0);
  detail << "  - elapsed " << dt << " s (budget 5 s)\n";
  return ok && dt < 5.0;
}

bool criterion3_super() {
  int total = 0, pass = 0;
  for (long a = -1; a <= 2; ++a)
    for (long x = -2; x <= 2; ++x) {
      if (x == 0) continue;
      for (long d = -1; d <= 1; ++d)
        for (long mu : {-1L, 1L, 2L}) {
          ++total;
          Algebra s = super3d(Scalar(a), Scalar(x), Scalar(d), Scalar(mu));
          if (validate(s).passed &&
              check(s, AxiomSet::symmetric_hom_leibniz).passed &&
              check(s, AxiomSet::symmetric_bihom_leibniz_colour).passed)
            ++pass;
        }
    }
  detail << "  - " << pass << "/" << total << " grid points pass the graded symmetric check\n";
  return pass == total;
}

bool criterion4_yau_closure() {
  // symmetric Leibniz fixtures with stored commuting endomorphism pairs
  Matrix id2 = Matrix::identity(2), z2m = Matrix::zero(2, 2);
  Matrix wphi(2, 2);  // rank-one endomorphism of case 3: u -> phi(u) w
  wphi.at(0, 0) = Scalar(1);
  wphi.at(0, 1) = Scalar(-1);
  wphi.at(1, 0) = Scalar(1);
  wphi.at(1, 1) = Scalar(-1);
  Matrix k3 = diag({1, 1, -1});
  Matrix id9 = Matrix::identity(9), k9 = kronecker(k3, k3);
  struct Item {
    std::string name;
    Algebra base;
    std::vector<std::pair<Matrix, Matrix>> pairs;
  };
  std::vector<Item> items = {
      {"case1u(1,0)",
       table_case1_untwisted(Scalar(1), Scalar(0)),
       {{id2, id2}, {diag({-1, 1}), diag({2, 4})}, {diag({-1, 1}), id2}, {z2m, id2}}},
      {"case3u(1,1)", table_case3_untwisted(Scalar(1), Scalar(1)), {{id2, id2}, {wphi, wphi}, {wphi, id2}}},
      {"lie2d", lie2d(), {{id2, id2}, {diag({1, 2}), diag({1, 3})}, {z2m, z2m}}},
      {"abelian2", abelian(2), {{diag({2, 3}), diag({5, 7})}}},
      {"tensor_gg", tensor_gg(), {{id9, id9}, {k9, id9}, {k9, k9}}},
  };
  int total = 0, pass = 0;
  for (const auto& item : items) {
    for (const auto& [a, b] : item.pairs) {
      ++total;
      try {
        Algebra tw = bihom_yau_twist(item.base, a, b);
        if (check_symmetric_bihom_leibniz(tw).passed) ++pass;
      } catch (const std::exception& e) {
        detail << "  - " << item.name << ": " << e.what() << "\n";
      }
    }
  }
  detail << "  - " << pass << "/" << total << " stored twists pass the symmetric check\n";
  return pass == total;
}

bool criterion5_zder() {
  bool ok = true;
  for (const auto& [name, L] : corpus()) {
    for (int k = 0; k <= 1; ++k)
      for (int l = 0; l <= 1; ++l) {
        Subspace zder = central_derivation_space(L, k, l);
        Subspace meet = subspace_intersect(
            generalized_derivation_space(L, {Scalar(1), Scalar(1), Scalar(1), k, l}),
            centroid_space(L, k, l));
        if (!(zder == meet)) {
          detail << "  - " << name << " (k,l)=(" << k << "," << l << "): mismatch\n";
          ok = false;
        }
      }
  }
  detail << "  - exact subspace equality over " << corpus().size() << " fixtures x 4 powers\n";
  return ok;
}

bool criterion6_oracle() {
  bool ok = true;
  int solves = 0;
  for (const auto& [name, L] : corpus()) {
    if (L.dim > 3) continue;
    for (auto [k, l] : std::vector<std::pair<int, int>>{{0, 0}, {1, 1}}) {
      DerivationSpec der{Scalar(1), Scalar(1), Scalar(1), k, l};
      if (!(generalized_derivation_space(L, der) == bihom_test::brute_force_space(L, der))) {
        detail << "  - " << name << ": derivation oracle mismatch\n";
        ok = false;
      }
      if (!(quasi_centroid_space(L, k, l) ==
            bihom_test::brute_force_space(L, {Scalar(0), Scalar(1), Scalar(-1), k, l}))) {
        detail << "  - " << name << ": quasi-centroid oracle mismatch\n";
        ok = false;
      }
      if (!(centroid_space(L, k, l) == bihom_test::brute_force_centroid(L, k, l))) {
        detail << "  - " << name << ": centroid oracle mismatch\n";
        ok = false;
      }
      solves += 3;
    }
  }
  detail << "  - " << solves << " Kronecker-lifted spaces matched the brute-force systems\n";
  return ok;
}

bool criterion7_ider() {
  std::vector<std::array<Scalar, 3>> grid = {
      {Scalar(2), Scalar(3), Scalar(1)},   {Scalar(1), Scalar(2), Scalar(-2)},
      {Scalar(3), Scalar(2), Scalar(2)},   {Scalar(5), Scalar(0), Scalar(0)},
      {Scalar(0), Scalar(3), Scalar(1)},   {Scalar(0), Scalar(2), Scalar(2)},
      {Scalar(0), Scalar(2), Scalar(-2)}};
  Algebra tw = yau2d();
  bool hyp = check_symmetric_bihom_leibniz(tw).passed && map_is_surjective(tw.alpha) &&
             map_is_surjective(tw.beta);
  bool ok = hyp;
  for (auto [k, l] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}}) {
    CheckReport r = verify_ider_classification(tw, k, l, grid);
    if (!r.passed) {
      detail << "  - (k,l)=(" << k << "," << l << "): " << r.describe() << "\n";
      ok = false;
    }
  }
  detail << "  - 7 parameter triples covering all seven predicates, three twist powers\n";
  return ok;
}

bool criterion8_complex() {
  std::vector<std::pair<std::string, Algebra>> fixtures = {
      {"case1(1,0)", table_case1(Scalar(1), Scalar(0))},
      {"yau2d", yau2d()},
      {"lie2d", lie2d()},
      {"super3d(0,1,1,-1)", super3d(Scalar(0), Scalar(1), Scalar(1), Scalar(-1))}};
  bool ok = true;
  for (const auto& [name, L] : fixtures) {
    bool fixture_has_zero_reading = false;
    for (DeltaReading rd :
         {DeltaReading::printed, DeltaReading::alpha_on_survivors, DeltaReading::power_shift}) {
      bool all = true;
      for (const Representation& V :
           {adjoint_representation(L, 0, 0), Representation::trivial(L)}) {
        for (auto [n, m] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}}) {
          bool d2 = false, d1 = false;
          try {
            d2 = verify_complex(L, V, 2, n, m, rd).passed;
            d1 = verify_complex(L, V, 1, n, m, rd).passed;
          } catch (const std::exception&) {
          }
          all = all && d2 && d1;
        }
      }
      detail << "  - " << name << " / " << delta_reading_name(rd)
             << ": composites zero = " << (all ? "yes" : "no") << "\n";
      fixture_has_zero_reading = fixture_has_zero_reading || all;
      if (rd == kDefaultDeltaReading && !all) ok = false;
    }
    if (!fixture_has_zero_reading) ok = false;
  }
  detail << "  - regression default pinned to the '" << delta_reading_name(kDefaultDeltaReading)
         << "' reading\n";
  return ok;
}

bool criterion9_extensions() {
  struct Pair {
    std::string name;
    Algebra L;
    Representation V;
  };
  std::vector<Pair> pairs;
  for (const Algebra& L : {table_case1(Scalar(1), Scalar(0)), yau2d(), lie2d(),
                           super3d(Scalar(0), Scalar(1), Scalar(1), Scalar(-1))})
    pairs.push_back({"adjoint dim " + std::to_string(L.dim), L, adjoint_representation(L, 0, 0)});
  pairs.push_back({"trivial", table_case1(Scalar(1), Scalar(0)),
                   Representation::trivial(table_case1(Scalar(1), Scalar(0)))});

  unsigned long seed = 99;
  auto rnd = [&seed]() {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    return long((seed >> 33) % 7) - 3;
  };
  bool ok = true;
  for (const auto& [name, L, V] : pairs) {
    CochainSpaceBasis c2 = cochain_space(L, V, 2);
    CochainSpaceBasis c1 = cochain_space(L, V, 1);
    Matrix d2 = coboundary_matrix(L, V, 2, 0, 0);
    Subspace z2 = null_space(d2);
    int checked = 0, agreements = 0, cocycle_count = 0, equivalences = 0, eq_total = 0;
    auto test_f = [&](const Cochain& f) {
      bool z = is_cocycle(L, V, f, 0, 0);
      bool b1 = check_symmetric_bihom_leibniz_B1(extension_direct_sum(L, V, f)).passed;
      ++checked;
      if (z) ++cocycle_count;
      if (z == b1) ++agreements;
    };
    // random compatible cochains (mostly non-cocycles)
    for (int trial = 0; trial < 5; ++trial) {
      Cochain f = Cochain::zero(2, L.dim, V.dim);
      for (const Cochain& b : c2.basis) {
        Scalar coef(rnd());
        for (size_t t = 0; t < f.values.size(); ++t) f.values[t] += coef * b.values[t];
      }
      test_f(f);
    }
    // coboundaries delta^1 g (cocycles); the explicit equivalence map must verify
    for (int trial = 0; trial < 4; ++trial) {
      Cochain g = Cochain::zero(1, L.dim, V.dim);
      for (const Cochain& b : c1.basis) {
        Scalar coef(rnd());
        for (size_t t = 0; t < g.values.size(); ++t) g.values[t] += coef * b.values[t];
      }
      test_f(coboundary(L, V, g, 0, 0));
      ++eq_total;
      if (verify_coboundary_extension_equivalence(L, V, g, 0, 0).passed) ++equivalences;
    }
    // explicit cocycle-space elements
    for (int i = 0; i < z2.dim() && i < 3; ++i) {
      Vec coord = z2.basis_vector(i);
      Cochain f = Cochain::zero(2, L.dim, V.dim);
      for (size_t j = 0; j < c2.basis.size(); ++j)
        if (!coord[j].is_zero())
          for (size_t t = 0; t < f.values.size(); ++t)
            f.values[t] += coord[j] * c2.basis[j].values[t];
      test_f(f);
    }
    bool fixture_ok = checked >= 10 && agreements == checked && cocycle_count > 0 &&
                      cocycle_count < checked && equivalences == eq_total;
    detail << "  - " << name << ": " << agreements << "/" << checked
           << " iff-agreements (" << cocycle_count << " cocycles), " << equivalences << "/"
           << eq_total << " equivalence maps verified\n";
    ok = ok && fixture_ok;
  }
  return ok;
}

bool criterion10_hierarchy() {
  bool ok = true;
  auto trivially_graded = [](Algebra L) {
    Grading g;
    g.group = GradingGroup({1});
    g.degrees.assign(L.dim, {0});
    g.epsilon = Bicharacter::trivial(g.group);
    L.grading = g;
    return L;
  };
  int comparisons = 0;
  for (const auto& [name, L0] : corpus()) {
    // beta = id: B1 checks agree with the hom checks
    Algebra L = L0;
    L.beta = Matrix::identity(L.dim);
    struct Cmp {
      AxiomSet b1, hom;
    };
    for (auto [b1, hom] : {Cmp{AxiomSet::bihom_lie_B1, AxiomSet::hom_lie},
                           Cmp{AxiomSet::left_bihom_leibniz_B1, AxiomSet::left_hom_leibniz},
                           Cmp{AxiomSet::right_bihom_leibniz_B1, AxiomSet::right_hom_leibniz},
                           Cmp{AxiomSet::symmetric_bihom_leibniz_B1,
                               AxiomSet::symmetric_hom_leibniz}}) {
      ++comparisons;
      if (check(L, b1).passed != check(L, hom).passed) {
        detail << "  - " << name << ": " << axiom_set_name(b1) << " != " << axiom_set_name(hom)
               << " at beta=id\n";
        ok = false;
      }
    }
    // alpha = beta = id, trivial grading: colour and BiHom checks agree with
    // the classical (identity-twist hom) checks
    Algebra C = L0;
    C.alpha = Matrix::identity(C.dim);
    C.beta = Matrix::identity(C.dim);
    C.grading.reset();
    Algebra G = trivially_graded(C);
    struct Trip {
      AxiomSet colour, plain;
    };
    for (auto [colour, plain] :
         {Trip{AxiomSet::bihom_lie_colour, AxiomSet::hom_lie},
          Trip{AxiomSet::left_bihom_leibniz_colour, AxiomSet::left_hom_leibniz},
          Trip{AxiomSet::right_bihom_leibniz_colour, AxiomSet::right_hom_leibniz},
          Trip{AxiomSet::symmetric_bihom_leibniz_colour, AxiomSet::symmetric_hom_leibniz}}) {
      ++comparisons;
      if (check(G, colour).passed != check(C, plain).passed) {
        detail << "  - " << name << ": " << axiom_set_name(colour)
               << " != " << axiom_set_name(plain) << " at id maps\n";
        ok = false;
      }
      ++comparisons;
      if (check(C, AxiomSet::bihom_lie).passed != check(C, AxiomSet::hom_lie).passed) {
        detail << "  - " << name << ": bihom_lie != hom_lie at id maps\n";
        ok = false;
      }
    }
  }
  detail << "  - " << comparisons << " check-family comparisons across the corpus\n";
  return ok;
}

std::string deterministic_report(ExecMode mode) {
  std::ostringstream out;
  for (const auto& [name, L] : corpus()) {
    out << name << ":";
    for (AxiomSet s :
         {AxiomSet::multiplicative, AxiomSet::hom_lie, AxiomSet::left_hom_leibniz,
          AxiomSet::right_hom_leibniz, AxiomSet::left_bihom_leibniz,
          AxiomSet::right_bihom_leibniz, AxiomSet::symmetric_bihom_leibniz_B1}) {
      CheckReport r = check(L, s, mode);
      out << " " << axiom_set_name(s) << "=" << (r.passed ? "1" : "0");
      if (!r.passed) {
        out << "@";
        for (int t : r.witness->tuple) out << t << ".";
      }
    }
    out << " der=" << generalized_derivation_space(L, {Scalar(1), Scalar(1), Scalar(1), 0, 0},
                                                   mode)
                          .dim();
    out << " zder=" << central_derivation_space(L, 0, 0, mode).dim();
    out << " IL=" << ideal_IL(L).dim() << " Z=" << center(L).dim();
    out << "\n";
  }
  return out.str();
}

bool criterion11_determinism() {
  std::string first = deterministic_report(ExecMode::Parallel);
  std::string second = deterministic_report(ExecMode::Parallel);
  std::string serial = deterministic_report(ExecMode::Serial);
  bool identical = first == second && first == serial;
  detail << "  - two parallel runs and the serial reference produce byte-identical reports: "
         << (identical ? "yes" : "NO") << "\n";

  // no floating-point literal in any serialized artifact
  bool clean = true;
  int scanned = 0;
  for (const auto& entry :
       std::filesystem::recursive_directory_iterator(BIHOM_FIXTURE_DIR)) {
    if (!entry.is_regular_file()) continue;
    ++scanned;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (text.find('.') != std::string::npos) {
      detail << "  - float-like token in " << entry.path().string() << "\n";
      clean = false;
    }
  }
  detail << "  - scanned " << scanned << " serialized fixtures for float tokens\n";
  return identical && clean;
}

}  // namespace

int main() {
  std::cout << "acceptance suite (exact arithmetic throughout)\n";
  criterion(1, "table reproduction over the -2..2 grids", criterion1_tables());
  criterion(2, "9-dim tensor-square fixture", criterion2_tensor_gg());
  criterion(3, "graded super example over the grid", criterion3_super());
  criterion(4, "Yau-twist closure over the corpus", criterion4_yau_closure());
  criterion(5, "ZDer = Der cap C for (k,l) in {0,1}^2", criterion5_zder());
  criterion(6, "solver oracle equivalence (dim <= 3)", criterion6_oracle());
  criterion(7, "IDer classification over seven predicates", criterion7_ider());
  criterion(8, "cochain complex composites per reading", criterion8_complex());
  criterion(9, "extension correspondence and equivalences", criterion9_extensions());
  criterion(10, "hierarchy collapse at beta=id and id maps", criterion10_hierarchy());
  criterion(11, "determinism and exactness", criterion11_determinism());

  if (failures == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << failures << " criterion(s) failed\n";
  return 1;
}
