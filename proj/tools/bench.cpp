// Benchmark comparing the serial reference implementations against the
// OpenMP kernels: the ensemble runner (samples in parallel) and the
// brute-force subset scan (mask range in parallel). Results must agree
// bit for bit; the table reports times and speedups.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>

#include "isk/experiment.hpp"
#include "isk/oracle.hpp"
#include "isk/rng.hpp"

using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

void bench_ensemble(int jobs) {
  isk::EnsembleConfig cfg;
  cfg.sizes = {16, 20, 24};
  cfg.samples_per_size = 60;
  cfg.mode = isk::ConstraintMode::IndependentSet;
  cfg.master_seed = 7;

  auto t0 = clock_type::now();
  const auto serial = isk::run_ensemble(cfg);
  const double t_serial = seconds_since(t0);

  t0 = clock_type::now();
  const auto parallel = isk::run_ensemble_parallel(cfg, jobs);
  const double t_parallel = seconds_since(t0);

  bool equal = serial.size() == parallel.size();
  for (std::size_t i = 0; equal && i < serial.size(); ++i)
    equal = serial[i].count == parallel[i].count &&
            serial[i].seed == parallel[i].seed;

  std::printf("ensemble IS sizes=16,20,24 x60   serial %7.2fs  omp(%d) %7.2fs  speedup %.2fx  match %s\n",
              t_serial, jobs, t_parallel, t_serial / t_parallel,
              equal ? "yes" : "NO");
}

void bench_oracle(int jobs) {
  const isk::Graph g = isk::random_regular(24, 3, 99);

  auto t0 = clock_type::now();
  const mpz_class serial = isk::brute_count(g, isk::ConstraintMode::Kernel);
  const double t_serial = seconds_since(t0);

  t0 = clock_type::now();
  const mpz_class parallel =
      isk::brute_count_parallel(g, isk::ConstraintMode::Kernel, jobs);
  const double t_parallel = seconds_since(t0);

  std::printf("oracle kernel n=24 (2^24 masks)  serial %7.2fs  omp(%d) %7.2fs  speedup %.2fx  match %s\n",
              t_serial, jobs, t_parallel, t_serial / t_parallel,
              serial == parallel ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  int jobs = omp_get_max_threads();
  if (argc > 1) jobs = std::stoi(argv[1]);
  std::printf("threads: %d\n", jobs);
  bench_ensemble(jobs);
  bench_oracle(jobs);
  return 0;
}
