// Timing comparison between the serial reference kernels and the OpenMP
// versions: axiom-check enumeration on a dense synthetic algebra and
// derivation-system solves on a sparse one.
// Usage: bihom_bench [dim] [repeats]

#include <chrono>
#include <iostream>

#include "bihom/axioms.hpp"
#include "bihom/solvers.hpp"

using namespace bihom;
using Clock = std::chrono::steady_clock;

namespace {

// Rank-one bracket [u,v] = B(u,v) e_{n-1} with a dense form B vanishing on
// the last coordinate: all nested brackets vanish, so the one-sided Leibniz
// laws hold for any twisting maps and the enumeration kernels sweep the full
// n^3 tuple range doing dense rational work.
Algebra dense_synthetic(int n) {
  Algebra L = Algebra::zero(n);
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j)
      L.c_at(i, j, n - 1) = Scalar(((i * 7 + j * 3) % 5) - 2, 1 + (i + j) % 3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) L.alpha.at(i, j) = Scalar(1, 1 + (i + j) % 2);
  return L;
}

// Sparse nilpotent-flavoured algebra for the solver benchmark.
Algebra sparse_synthetic(int n) {
  Algebra L = Algebra::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = i + j + 1;
      if (k < n) L.c_at(i, j, k) = Scalar(((i * 7 + j * 3) % 5) - 2);
    }
  Vec d(n);
  for (int i = 0; i < n; ++i) d[i] = Scalar(i % 2 == 0 ? 1 : -1);
  L.alpha = Matrix::diagonal(d);
  return L;
}

double seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double time_best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    auto t0 = Clock::now();
    f();
    auto t1 = Clock::now();
    best = std::min(best, seconds(t0, t1));
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 12;
  int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

  Algebra dense = dense_synthetic(n);
  std::cout << "dense synthetic algebra: dim " << n << ", " << n * n * n
            << " basis triples per law\n";

  bool agree = true;
  {
    auto s = check_symmetric_hom_leibniz(dense, ExecMode::Serial);
    auto p = check_symmetric_hom_leibniz(dense, ExecMode::Parallel);
    agree = agree && s.passed && p.passed;
  }
  double t_serial = time_best_of(repeats, [&] {
    (void)check_symmetric_hom_leibniz(dense, ExecMode::Serial);
  });
  double t_parallel = time_best_of(repeats, [&] {
    (void)check_symmetric_hom_leibniz(dense, ExecMode::Parallel);
  });
  std::cout << "axiom enumeration   serial " << t_serial << " s, parallel " << t_parallel
            << " s, speedup " << (t_parallel > 0 ? t_serial / t_parallel : 0) << "x\n";

  Algebra sparse = sparse_synthetic(n);
  DerivationSpec der{Scalar(1), Scalar(1), Scalar(1), 0, 0};
  agree = agree && generalized_derivation_space(sparse, der, ExecMode::Serial) ==
                       generalized_derivation_space(sparse, der, ExecMode::Parallel);
  double a_serial = time_best_of(repeats, [&] {
    (void)generalized_derivation_space(sparse, der, ExecMode::Serial);
  });
  double a_parallel = time_best_of(repeats, [&] {
    (void)generalized_derivation_space(sparse, der, ExecMode::Parallel);
  });
  std::cout << "derivation solve    serial " << a_serial << " s, parallel " << a_parallel
            << " s, speedup " << (a_parallel > 0 ? a_serial / a_parallel : 0) << "x\n";

  std::cout << "serial/parallel results " << (agree ? "agree" : "DISAGREE") << "\n";
  return agree ? 0 : 1;
}
