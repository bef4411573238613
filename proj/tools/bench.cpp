// Benchmark of the parallel kernels against their serial reference
// implementations: the exact transition-matrix product and the sampled
// one-step law.  Both pairs must agree exactly; the table reports wall
// times and the speedup.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "updown/chains.hpp"
#include "updown/rational.hpp"

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main(int argc, char** argv) {
  int threads = 4;
  if (argc > 1) threads = std::max(1, std::atoi(argv[1]));
  const updown::Alpha alpha(updown::Rat(2));

  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial s", "parallel s",
              "speedup");

  {
    const std::int64_t n = 40;  // 1113 states
    auto t0 = std::chrono::steady_clock::now();
    auto serial = updown::transition_matrix(n, alpha, 1);
    auto t1 = std::chrono::steady_clock::now();
    auto parallel = updown::transition_matrix(n, alpha, threads);
    auto t2 = std::chrono::steady_clock::now();
    bool same = serial.T == parallel.T;
    std::string label = "transition matrix n=" + std::to_string(n) +
                        (same ? "" : "  MISMATCH");
    double s = seconds(t0, t1), p = seconds(t1, t2);
    std::printf("%-34s %10.3f %10.3f %8.2fx\n", label.c_str(), s, p,
                p > 0 ? s / p : 0.0);
    if (!same) return 1;
  }

  {
    const updown::StrictPartition la({5, 4, 2, 1});
    const std::int64_t samples = 400000;
    auto t0 = std::chrono::steady_clock::now();
    auto serial = updown::one_step_law(la, alpha, samples, 7, 1);
    auto t1 = std::chrono::steady_clock::now();
    auto parallel = updown::one_step_law(la, alpha, samples, 7, threads);
    auto t2 = std::chrono::steady_clock::now();
    bool same = serial == parallel;
    std::string label = "one-step law 4e5 draws from [5,4,2,1]";
    if (!same) label += "  MISMATCH";
    double s = seconds(t0, t1), p = seconds(t1, t2);
    std::printf("%-34s %10.3f %10.3f %8.2fx\n", label.c_str(), s, p,
                p > 0 ? s / p : 0.0);
    if (!same) return 1;
  }
  return 0;
}
