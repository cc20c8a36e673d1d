// Benchmark: serial reference enumeration kernel versus the OpenMP
// kernel, on workloads where the m-range is wide enough to matter.
// Verifies set equality on every run before reporting timings.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "seshadri/enumerate.hpp"
#include "seshadri/surface.hpp"

using namespace seshadri;

namespace {

template <typename F>
double time_best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto start = std::chrono::steady_clock::now();
    f();
    auto stop = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(stop - start).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  SurfaceData s = SurfaceData::p2();

  struct Case {
    int n;
    long long mu;
  };
  const Case cases[] = {{10, 2000}, {10, 8000}, {50, 4000}, {200, 2000}, {1000, 1000}};

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP; parallel falls back to serial)\n");
#endif
  std::printf("%6s %8s %12s %12s %10s %10s\n", "n", "mu", "serial[s]", "parallel[s]", "speedup",
              "classes");

  for (const Case& c : cases) {
    EnumParams p = EnumParams::from_mu(Rational(c.mu), c.n);
    CandidateSet serial_set, parallel_set;
    double ts = time_best_of(reps, [&] { serial_set = enumerate_homogeneous_serial(s, c.n, p); });
    double tp =
        time_best_of(reps, [&] { parallel_set = enumerate_homogeneous_parallel(s, c.n, p); });
    if (!same_candidates(serial_set, parallel_set)) {
      std::fprintf(stderr, "kernel mismatch at n=%d mu=%lld\n", c.n, c.mu);
      return 1;
    }
    std::printf("%6d %8lld %12.4f %12.4f %9.2fx %10zu\n", c.n, c.mu, ts, tp, ts / tp,
                serial_set.classes.size());
  }
  return 0;
}
