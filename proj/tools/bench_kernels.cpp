#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include <omp.h>

#include "endotriv/families.hpp"
#include "endotriv/grouptheory.hpp"
#include "endotriv/kernels.hpp"

using namespace endotriv;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel, bool agree) {
  std::printf("%-34s %10.4f %10.4f %8.2fx  %s\n", name, serial, parallel, serial / parallel,
              agree ? "agree" : "MISMATCH");
}

std::vector<Elem> random_block(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> d(0, f.size() - 1);
  std::vector<Elem> out(n);
  for (auto& x : out) x = static_cast<Elem>(d(rng));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial reference kernels against their OpenMP versions"};
  int reps = 3;
  std::size_t dim = 512;
  app.add_option("--reps", reps, "repetitions, best time reported");
  app.add_option("--dim", dim, "matrix size");
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");
  bool ok = true;

  PermImage su = sl3_eps(-1, 5);
  const PermGroup& g = su.group;
  PermGroup p = sylow_2(g);
  Perm z = p.generators()[0].pow(static_cast<long long>(p.generators()[0].order() / 2));
  auto commutes = [&](const kernels::LazyElement& e) {
    for (Point x = 0; x < g.degree(); ++x) {
      if (e.apply(z(x)) != z(e.apply(x))) return false;
    }
    return true;
  };
  std::vector<std::uint64_t> a, b;
  double ts = best_of(reps, [&] { a = kernels::serial::scan(g, commutes); });
  double tp = best_of(reps, [&] { b = kernels::omp::scan(g, commutes); });
  ok = ok && a == b;
  row("scan: centralizer in SU_3(5)", ts, tp, a == b);

  auto f = Field::get(2, 8);
  std::mt19937_64 rng(1);
  auto x = random_block(*f, dim * dim, rng), y = random_block(*f, dim * dim, rng);
  std::vector<Elem> c1(dim * dim), c2(dim * dim);
  ts = best_of(reps, [&] { kernels::serial::matmul(*f, x, y, c1, dim, dim, dim); });
  tp = best_of(reps, [&] { kernels::omp::matmul(*f, x, y, c2, dim, dim, dim); });
  ok = ok && c1 == c2;
  row("matmul GF(2^8)", ts, tp, c1 == c2);

  std::vector<Elem> e1, e2;
  std::vector<std::size_t> p1, p2;
  ts = best_of(reps, [&] {
    e1 = x;
    p1 = kernels::serial::echelonize(*f, e1, dim, dim);
  });
  tp = best_of(reps, [&] {
    e2 = x;
    p2 = kernels::omp::echelonize(*f, e2, dim, dim);
  });
  bool same = e1 == e2 && p1 == p2;
  ok = ok && same;
  row("echelonize GF(2^8)", ts, tp, same);
  return ok ? 0 : 1;
}
