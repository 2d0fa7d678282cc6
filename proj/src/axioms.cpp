#include "bihom/axioms.hpp"

#include <array>
#include <functional>
#include <stdexcept>

namespace bihom {

namespace {

const std::array<std::pair<AxiomSet, const char*>, 21> kNames = {{
    {AxiomSet::commuting_maps, "commuting_maps"},
    {AxiomSet::multiplicative, "multiplicative"},
    {AxiomSet::hom_lie, "hom_lie"},
    {AxiomSet::hom_lie_I2, "hom_lie_I2"},
    {AxiomSet::hom_lie_I3, "hom_lie_I3"},
    {AxiomSet::left_hom_leibniz, "left_hom_leibniz"},
    {AxiomSet::right_hom_leibniz, "right_hom_leibniz"},
    {AxiomSet::symmetric_hom_leibniz, "symmetric_hom_leibniz"},
    {AxiomSet::bihom_lie, "bihom_lie"},
    {AxiomSet::left_bihom_leibniz, "left_bihom_leibniz"},
    {AxiomSet::right_bihom_leibniz, "right_bihom_leibniz"},
    {AxiomSet::symmetric_bihom_leibniz, "symmetric_bihom_leibniz"},
    {AxiomSet::bihom_lie_B1, "bihom_lie_B1"},
    {AxiomSet::left_bihom_leibniz_B1, "left_bihom_leibniz_B1"},
    {AxiomSet::right_bihom_leibniz_B1, "right_bihom_leibniz_B1"},
    {AxiomSet::symmetric_bihom_leibniz_B1, "symmetric_bihom_leibniz_B1"},
    {AxiomSet::bihom_associative_colour, "bihom_associative_colour"},
    {AxiomSet::bihom_lie_colour, "bihom_lie_colour"},
    {AxiomSet::left_bihom_leibniz_colour, "left_bihom_leibniz_colour"},
    {AxiomSet::right_bihom_leibniz_colour, "right_bihom_leibniz_colour"},
    {AxiomSet::symmetric_bihom_leibniz_colour, "symmetric_bihom_leibniz_colour"},
}};

// Precomputed basis images shared by the law residuals.
struct Ctx {
  const Algebra& L;
  int n;
  std::vector<Vec> e, al, be, albe, be2;

  explicit Ctx(const Algebra& L_) : L(L_), n(L_.dim) {
    e.resize(n);
    al.resize(n);
    be.resize(n);
    albe.resize(n);
    be2.resize(n);
    Matrix ab = L.alpha * L.beta;
    Matrix bb = L.beta * L.beta;
    for (int i = 0; i < n; ++i) {
      Vec unit(n);
      unit[i] = Scalar(1);
      e[i] = unit;
      al[i] = L.alpha.col(i);
      be[i] = L.beta.col(i);
      albe[i] = ab.col(i);
      be2[i] = bb.col(i);
    }
  }

  Vec br(const Vec& x, const Vec& y) const { return bracket_eval(L, x, y); }
  Vec B(int i, int j) const { return L.bracket_basis(i, j); }
  Scalar eps(int i, int j) const { return epsilon_or_one(L, i, j); }
};

using PairLaw = std::function<Vec(const Ctx&, int, int)>;
using TripleLaw = std::function<Vec(const Ctx&, int, int, int)>;

CheckReport run_pair_law(const Ctx& c, const char* name, ExecMode mode, const PairLaw& law) {
  size_t count = size_t(c.n) * c.n;
  size_t hit = first_violation(count, mode, [&](size_t t) {
    int i = int(t) / c.n, j = int(t) % c.n;
    return !vec_is_zero(law(c, i, j));
  });
  if (hit == kNoViolation) return CheckReport::pass();
  int i = int(hit) / c.n, j = int(hit) % c.n;
  return CheckReport::fail({name, {i, j}, law(c, i, j)});
}

CheckReport run_triple_law(const Ctx& c, const char* name, ExecMode mode, const TripleLaw& law) {
  size_t count = size_t(c.n) * c.n * c.n;
  size_t hit = first_violation(count, mode, [&](size_t t) {
    int k = int(t % size_t(c.n));
    int j = int((t / size_t(c.n)) % size_t(c.n));
    int i = int(t / (size_t(c.n) * c.n));
    return !vec_is_zero(law(c, i, j, k));
  });
  if (hit == kNoViolation) return CheckReport::pass();
  int k = int(hit % size_t(c.n));
  int j = int((hit / size_t(c.n)) % size_t(c.n));
  int i = int(hit / (size_t(c.n) * c.n));
  return CheckReport::fail({name, {i, j, k}, law(c, i, j, k)});
}

CheckReport matrix_equal_report(const char* name, const Matrix& a, const Matrix& b) {
  for (int r = 0; r < a.rows(); ++r)
    for (int cidx = 0; cidx < a.cols(); ++cidx)
      if (a.at(r, cidx) != b.at(r, cidx))
        return CheckReport::fail({name, {r, cidx}, {a.at(r, cidx) - b.at(r, cidx)}});
  return CheckReport::pass();
}

// ---- individual residuals -------------------------------------------------

Vec skew_residual(const Ctx& c, int i, int j) {
  return c.B(i, j) + c.eps(i, j) * c.B(j, i);
}

Vec alpha_morphism_residual(const Ctx& c, int i, int j) {
  return c.L.alpha.apply(c.B(i, j)) - c.br(c.al[i], c.al[j]);
}

Vec beta_morphism_residual(const Ctx& c, int i, int j) {
  return c.L.beta.apply(c.B(i, j)) - c.br(c.be[i], c.be[j]);
}

Vec hom_jacobi_residual(const Ctx& c, int i, int j, int k) {
  return c.eps(i, k) * c.br(c.al[i], c.B(j, k)) + c.eps(j, i) * c.br(c.al[j], c.B(k, i)) +
         c.eps(k, j) * c.br(c.al[k], c.B(i, j));
}

Vec i_type_jacobi_residual(const Ctx& c, int i, int j, int k) {
  return c.eps(i, k) * c.br(c.e[i], c.br(c.e[j], c.al[k])) +
         c.eps(j, i) * c.br(c.e[j], c.br(c.e[k], c.al[i])) +
         c.eps(k, j) * c.br(c.e[k], c.br(c.e[i], c.al[j]));
}

Vec left_hom_residual(const Ctx& c, int x, int y, int z) {
  return c.br(c.al[x], c.B(y, z)) - c.br(c.B(x, y), c.al[z]) -
         c.eps(x, y) * c.br(c.al[y], c.B(x, z));
}

Vec right_hom_residual(const Ctx& c, int x, int y, int z) {
  return c.br(c.al[x], c.B(y, z)) - c.br(c.B(x, y), c.al[z]) +
         c.eps(y, z) * c.br(c.B(x, z), c.al[y]);
}

Vec bihom_skew_residual(const Ctx& c, int i, int j) {
  return c.br(c.be[i], c.al[j]) + c.eps(i, j) * c.br(c.be[j], c.al[i]);
}

Vec bihom_jacobi_residual(const Ctx& c, int i, int j, int k) {
  return c.eps(k, i) * c.br(c.be2[i], c.br(c.be[j], c.al[k])) +
         c.eps(i, j) * c.br(c.be2[j], c.br(c.be[k], c.al[i])) +
         c.eps(j, k) * c.br(c.be2[k], c.br(c.be[i], c.al[j]));
}

Vec left_bihom_residual(const Ctx& c, int x, int y, int z) {
  return c.br(c.albe[x], c.B(y, z)) - c.br(c.br(c.be[x], c.e[y]), c.be[z]) -
         c.eps(x, y) * c.br(c.be[y], c.br(c.al[x], c.e[z]));
}

Vec right_bihom_residual(const Ctx& c, int x, int y, int z) {
  return c.br(c.B(x, y), c.albe[z]) - c.eps(y, z) * c.br(c.br(c.e[x], c.be[z]), c.al[y]) -
         c.br(c.al[x], c.br(c.e[y], c.al[z]));
}

Vec symmetric_bihom_identity_residual(const Ctx& c, int x, int y, int z) {
  return c.br(c.be[y], c.br(c.al[x], c.al[z])) +
         c.eps(y, x) * c.eps(y, z) * c.br(c.br(c.be[x], c.be[z]), c.al[y]);
}

Vec b1_skew_residual(const Ctx& c, int i, int j) {
  return c.br(c.be[i], c.be2[j]) + c.eps(i, j) * c.br(c.be[j], c.be2[i]);
}

Vec b1_jacobi_residual(const Ctx& c, int i, int j, int k) {
  return c.eps(i, k) * c.br(c.al[i], c.br(c.be[j], c.be2[k])) +
         c.eps(j, i) * c.br(c.al[j], c.br(c.be[k], c.be2[i])) +
         c.eps(k, j) * c.br(c.al[k], c.br(c.be[i], c.be2[j]));
}

Vec left_b1_residual(const Ctx& c, int x, int y, int z) {
  return c.br(c.al[x], c.br(c.be[y], c.be[z])) - c.br(c.br(c.e[x], c.be[y]), c.al[z]) -
         c.eps(x, y) * c.br(c.al[y], c.br(c.be[x], c.be[z]));
}

Vec right_b1_residual(const Ctx& c, int x, int y, int z) {
  return c.br(c.B(x, y), c.al[z]) - c.eps(y, z) * c.br(c.B(x, z), c.al[y]) -
         c.br(c.al[x], c.br(c.e[y], c.be[z]));
}

// Characterization pair: right B1 law plus
// [alpha(y),[beta(x),beta(z)]] = -[[x,z],alpha beta(y)].
Vec symmetric_b1_identity_residual(const Ctx& c, int x, int y, int z) {
  return c.br(c.al[y], c.br(c.be[x], c.be[z])) +
         c.eps(y, x) * c.eps(y, z) * c.br(c.B(x, z), c.albe[y]);
}

Vec assoc_residual(const Ctx& c, int x, int y, int z) {
  return c.br(c.al[x], c.B(y, z)) - c.br(c.B(x, y), c.be[z]);
}

CheckReport first_fail(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return r;
  return CheckReport::pass();
}

void require_graded(const Algebra& L, const char* what) {
  if (!L.grading) throw std::domain_error(std::string(what) + " requires a graded algebra");
}

}  // namespace

const char* axiom_set_name(AxiomSet s) {
  for (const auto& [set, name] : kNames)
    if (set == s) return name;
  return "?";
}

std::optional<AxiomSet> axiom_set_from_name(const std::string& name) {
  for (const auto& [set, n] : kNames)
    if (name == n) return set;
  return std::nullopt;
}

const std::vector<AxiomSet>& all_axiom_sets() {
  static const std::vector<AxiomSet> all = [] {
    std::vector<AxiomSet> v;
    for (const auto& [set, name] : kNames) v.push_back(set);
    return v;
  }();
  return all;
}

CheckReport check_commuting_maps(const Algebra& L, ExecMode) {
  return matrix_equal_report("alpha beta != beta alpha", L.alpha * L.beta, L.beta * L.alpha);
}

CheckReport check_multiplicative(const Algebra& L, ExecMode mode) {
  Ctx c(L);
  return first_fail({check_commuting_maps(L, mode),
                     run_pair_law(c, "alpha not a bracket morphism", mode, alpha_morphism_residual),
                     run_pair_law(c, "beta not a bracket morphism", mode, beta_morphism_residual)});
}

CheckReport check_hom_lie(const Algebra& L, ExecMode mode) {
  Ctx c(L);
  return first_fail({run_pair_law(c, "skew-symmetry", mode, skew_residual),
                     run_triple_law(c, "hom-Jacobi", mode, hom_jacobi_residual)});
}

CheckReport check_hom_lie_I2(const Algebra& L, ExecMode mode) {
  Ctx c(L);
  return first_fail({run_pair_law(c, "skew-symmetry", mode, skew_residual),
                     run_triple_law(c, "I2-Jacobi", mode, i_type_jacobi_residual)});
}

CheckReport check_hom_lie_I3(const Algebra& L, ExecMode mode) {
  Ctx c(L);
  return first_fail({run_pair_law(c, "skew-symmetry", mode, skew_residual),
                     run_triple_law(c, "I3-Jacobi", mode, i_type_jacobi_residual)});
}

CheckReport check_left_hom_leibniz(const Algebra& L, ExecMode mode) {
  Ctx c(L);
  return run_triple_law(c, "left hom-Leibniz", mode, left_hom_residual);
}

CheckReport check_right_hom_leibniz(const Algebra& L, ExecMode mode) {
  Ctx c(L);
  return run_triple_law(c, "right hom-Leibniz", mode, right_hom_residual);
}

CheckReport check_symmetric_hom_leibniz(const Algebra& L, ExecMode mode) {
  return first_fail({check_left_hom_leibniz(L, mode), check_right_hom_leibniz(L, mode)});
}

CheckReport check_bihom_lie(const Algebra& L, ExecMode mode) {
  Ctx c(L);
  return first_fail({check_multiplicative(L, mode),
                     run_pair_law(c, "bihom-skew-symmetry", mode, bihom_skew_residual),
                     run_triple_law(c, "bihom-Jacobi", mode, bihom_jacobi_residual)});
}

CheckReport check_left_bihom_leibniz(const Algebra& L, ExecMode mode) {
  Ctx c(L);
  return run_triple_law(c, "left bihom-Leibniz", mode, left_bihom_residual);
}

CheckReport check_right_bihom_leibniz(const Algebra& L, ExecMode mode) {
  Ctx c(L);
  return run_triple_law(c, "right bihom-Leibniz", mode, right_bihom_residual);
}

CheckReport check_symmetric_bihom_leibniz(const Algebra& L, ExecMode mode) {
  Ctx c(L);
  return first_fail({check_left_bihom_leibniz(L, mode),
                     run_triple_law(c, "symmetric bihom-Leibniz identity", mode,
                                    symmetric_bihom_identity_residual)});
}

CheckReport check_bihom_lie_B1(const Algebra& L, ExecMode mode) {
  Ctx c(L);
  return first_fail({run_pair_law(c, "B1 skew-symmetry", mode, b1_skew_residual),
                     run_triple_law(c, "B1 Jacobi", mode, b1_jacobi_residual)});
}

CheckReport check_left_bihom_leibniz_B1(const Algebra& L, ExecMode mode) {
  Ctx c(L);
  return run_triple_law(c, "left bihom-Leibniz B1", mode, left_b1_residual);
}

CheckReport check_right_bihom_leibniz_B1(const Algebra& L, ExecMode mode) {
  Ctx c(L);
  return run_triple_law(c, "right bihom-Leibniz B1", mode, right_b1_residual);
}

CheckReport check_symmetric_bihom_leibniz_B1(const Algebra& L, ExecMode mode) {
  return first_fail(
      {check_left_bihom_leibniz_B1(L, mode), check_right_bihom_leibniz_B1(L, mode)});
}

CheckReport check_symmetric_bihom_leibniz_B1_pair(const Algebra& L, ExecMode mode) {
  Ctx c(L);
  return first_fail({run_triple_law(c, "right bihom-Leibniz B1", mode, right_b1_residual),
                     run_triple_law(c, "symmetric B1 identity", mode,
                                    symmetric_b1_identity_residual)});
}

CheckReport check_bihom_associative_colour(const Algebra& L, ExecMode mode) {
  require_graded(L, "bihom_associative_colour");
  Ctx c(L);
  return first_fail({check_commuting_maps(L, mode),
                     run_triple_law(c, "bihom-associativity", mode, assoc_residual)});
}

CheckReport check(const Algebra& L, AxiomSet s, ExecMode mode) {
  switch (s) {
    case AxiomSet::commuting_maps:
      return check_commuting_maps(L, mode);
    case AxiomSet::multiplicative:
      return check_multiplicative(L, mode);
    case AxiomSet::hom_lie:
      return check_hom_lie(L, mode);
    case AxiomSet::hom_lie_I2:
      return check_hom_lie_I2(L, mode);
    case AxiomSet::hom_lie_I3:
      return check_hom_lie_I3(L, mode);
    case AxiomSet::left_hom_leibniz:
      return check_left_hom_leibniz(L, mode);
    case AxiomSet::right_hom_leibniz:
      return check_right_hom_leibniz(L, mode);
    case AxiomSet::symmetric_hom_leibniz:
      return check_symmetric_hom_leibniz(L, mode);
    case AxiomSet::bihom_lie:
      return check_bihom_lie(L, mode);
    case AxiomSet::left_bihom_leibniz:
      return check_left_bihom_leibniz(L, mode);
    case AxiomSet::right_bihom_leibniz:
      return check_right_bihom_leibniz(L, mode);
    case AxiomSet::symmetric_bihom_leibniz:
      return check_symmetric_bihom_leibniz(L, mode);
    case AxiomSet::bihom_lie_B1:
      return check_bihom_lie_B1(L, mode);
    case AxiomSet::left_bihom_leibniz_B1:
      return check_left_bihom_leibniz_B1(L, mode);
    case AxiomSet::right_bihom_leibniz_B1:
      return check_right_bihom_leibniz_B1(L, mode);
    case AxiomSet::symmetric_bihom_leibniz_B1:
      return check_symmetric_bihom_leibniz_B1(L, mode);
    case AxiomSet::bihom_associative_colour:
      return check_bihom_associative_colour(L, mode);
    case AxiomSet::bihom_lie_colour:
      require_graded(L, "bihom_lie_colour");
      return check_bihom_lie(L, mode);
    case AxiomSet::left_bihom_leibniz_colour:
      require_graded(L, "left_bihom_leibniz_colour");
      return check_left_bihom_leibniz(L, mode);
    case AxiomSet::right_bihom_leibniz_colour:
      require_graded(L, "right_bihom_leibniz_colour");
      return check_right_bihom_leibniz(L, mode);
    case AxiomSet::symmetric_bihom_leibniz_colour:
      require_graded(L, "symmetric_bihom_leibniz_colour");
      return check_symmetric_bihom_leibniz(L, mode);
  }
  throw std::logic_error("unknown axiom set");
}

CheckReport triple_delta_membership(const Algebra& L, const Matrix& f, const Matrix& f1,
                                    const Matrix& f2, int k, int l, ExecMode mode) {
  if (k < 0 || l < 0) throw std::invalid_argument("Delta_{k,l} powers must be non-negative");
  if (f.rows() != L.dim || f.cols() != L.dim || f1.rows() != L.dim || f1.cols() != L.dim ||
      f2.rows() != L.dim || f2.cols() != L.dim)
    throw std::invalid_argument("Delta membership needs square n x n maps");
  Ctx c(L);
  Matrix tw = L.alpha.power(k) * L.beta.power(l);
  auto law = [&](const Ctx& ctx, int i, int j) {
    return ctx.br(f.col(i), tw.col(j)) + ctx.br(tw.col(i), f1.col(j)) -
           f2.apply(ctx.B(i, j));
  };
  return run_pair_law(c, "Delta_{k,l} membership", mode, law);
}

CheckReport check_consequence_props(const Algebra& L, ExecMode mode) {
  Ctx c(L);
  std::vector<CheckReport> applicable;
  if (check_left_bihom_leibniz(L, mode).passed) {
    auto law = [](const Ctx& ctx, int x, int y, int z) {
      return ctx.br(ctx.br(ctx.be[x], ctx.al[y]), ctx.albe[z]) +
             ctx.eps(x, y) * ctx.br(ctx.br(ctx.be[y], ctx.al[x]), ctx.albe[z]);
    };
    applicable.push_back(run_triple_law(c, "left consequence", mode, law));
  }
  if (check_right_bihom_leibniz(L, mode).passed) {
    auto law = [](const Ctx& ctx, int x, int y, int z) {
      return ctx.br(ctx.albe[x], ctx.br(ctx.be[y], ctx.al[z])) +
             ctx.eps(y, z) * ctx.br(ctx.albe[x], ctx.br(ctx.be[z], ctx.al[y]));
    };
    applicable.push_back(run_triple_law(c, "right consequence", mode, law));
  }
  if (check_left_bihom_leibniz_B1(L, mode).passed) {
    auto law = [](const Ctx& ctx, int x, int y, int z) {
      return ctx.br(ctx.br(ctx.e[y], ctx.be[x]), ctx.al[z]) +
             ctx.eps(x, y) * ctx.br(ctx.br(ctx.e[x], ctx.be[y]), ctx.al[z]);
    };
    applicable.push_back(run_triple_law(c, "left B1 consequence", mode, law));
  }
  if (check_right_bihom_leibniz_B1(L, mode).passed) {
    auto law = [](const Ctx& ctx, int x, int y, int z) {
      return ctx.br(ctx.al[x], ctx.br(ctx.e[z], ctx.be[y])) +
             ctx.eps(y, z) * ctx.br(ctx.al[x], ctx.br(ctx.e[y], ctx.be[z]));
    };
    applicable.push_back(run_triple_law(c, "right B1 consequence", mode, law));
  }
  return first_fail(applicable);
}

}  // namespace bihom
