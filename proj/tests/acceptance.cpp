// Acceptance suite: every criterion runs at its stated tolerance and prints
// exactly one PASS/FAIL line; the process exits nonzero if any fail.
// Ensembles are seeded, so reruns are bit-for-bit repeatable.

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "isk/cli.hpp"
#include "isk/experiment.hpp"
#include "isk/oracle.hpp"
#include "isk/rng.hpp"
#include "test_graphs.hpp"

using namespace isk;

namespace {

constexpr std::uint64_t kSeed = 42;

int failures = 0;

void report(const std::string& label, bool pass, const std::string& detail) {
  std::printf("%-4s %s  [%s]\n", pass ? "PASS" : "FAIL", label.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// Largest deviation at one size: f(0) of the empirical curve.
double f_at_zero(const FluctuationCurve& curve) {
  return curve.points.front().second;
}

// Curve value at epsilon = 0.5 (the median deviation).
double f_at_half(const FluctuationCurve& curve) {
  const std::size_t idx = curve.points.size() / 2;
  return curve.points[idx].second;
}

double mean_diff(const std::vector<CountRecord>& records, int size) {
  double sum = 0;
  long count = 0;
  for (const auto& r : records)
    if (r.size == size) {
      sum += r.diff;
      ++count;
    }
  return sum / static_cast<double>(count);
}

}  // namespace

int main() {
  const int jobs = omp_get_max_threads();
  std::fprintf(stderr, "acceptance: running with %d workers, seed %llu\n",
               jobs, static_cast<unsigned long long>(kSeed));

  // ---- criterion 1: golden small graphs, exact ----
  {
    const bool pass =
        independent_set_bdd(prism_graph()).count_solutions() == 13 &&
        kernel_bdd(prism_graph()).count_solutions() == 6 &&
        independent_set_bdd(k33_graph()).count_solutions() == 15 &&
        kernel_bdd(k33_graph()).count_solutions() == 2 &&
        independent_set_bdd(nonregular_graph()).count_solutions() == 14;
    report("criterion 01 golden small-graph counts", pass,
           "prism 13/6, K33 15/2, nonregular 14");
  }

  // ---- criterion 2: oracle equivalence on random graphs, n <= 16 ----
  {
    const std::vector<int> sizes = {6, 8, 10, 12, 14, 16};
    long checked = 0, agreed = 0;
    for (const auto mode :
         {ConstraintMode::IndependentSet, ConstraintMode::Kernel}) {
      for (int i = 0; i < 200; ++i) {
        const int n = sizes[i % sizes.size()];
        const auto strategy = i % 2 == 0 ? RegularStrategy::EdgeAddition
                                         : RegularStrategy::Pairing;
        const Graph g =
            random_regular(n, 3, derive_seed(kSeed + 1, n, i), strategy);
        ++checked;
        if (constraint_bdd(g, mode).count_solutions() == brute_count(g, mode))
          ++agreed;
      }
      for (int i = 0; i < 200; ++i) {
        const int n = sizes[i % sizes.size()];
        const Graph g =
            random_average_degree(n, 3, derive_seed(kSeed + 2, n, i));
        ++checked;
        if (constraint_bdd(g, mode).count_solutions() == brute_count(g, mode))
          ++agreed;
      }
    }
    report("criterion 02 oracle equivalence (800 graphs)", agreed == checked,
           std::to_string(agreed) + "/" + std::to_string(checked) + " exact");
  }

  // ---- criterion 3: Bethe constant ----
  const BetheConstants bethe = bethe_constants();
  report("criterion 03 Bethe constant", std::abs(bethe.w - 1.545634155) < 1e-9,
         "w = " + fmt(bethe.w));

  // ---- independent-set sweep: shared by criteria 4, 6, 7, 9, 10 ----
  std::fprintf(stderr, "acceptance: IS regular sweep 6..40 x1000...\n");
  EnsembleConfig is_cfg;
  is_cfg.sizes = parse_sizes("6:40:2");
  is_cfg.samples_per_size = 1000;
  is_cfg.mode = ConstraintMode::IndependentSet;
  is_cfg.master_seed = kSeed;
  std::vector<CountRecord> is_records = run_ensemble_parallel(is_cfg, jobs);
  const ReferenceRate is_rate =
      resolve_rate({}, is_cfg.mode, is_cfg.ensemble, is_records);
  apply_reference_rate(is_records, is_rate);
  std::map<int, SizeSummary> is_summary;
  std::map<int, FluctuationCurve> is_curve;
  for (const int n : is_cfg.sizes) {
    is_summary[n] = summarize(is_records, n);
    is_curve[n] = fluctuation_curve(is_records, n);
  }

  // ---- criterion 4: independent-set table reproduction ----
  {
    const double mean20 = is_summary[20].mean;
    const double mean40 = is_summary[40].mean;
    const double west40 = is_summary[40].rate_estimate;
    const bool pass = std::abs(mean20 - 5930.353) <= 0.03 * 5930.353 &&
                      std::abs(mean40 - 36075768.0) <= 0.03 * 36075768.0 &&
                      west40 >= 1.5435 && west40 <= 1.5465;
    report("criterion 04 IS table (n=20, n=40, w_est)", pass,
           "mean20 = " + fmt(mean20) + ", mean40 = " + fmt(mean40) +
               ", w_est40 = " + fmt(west40));
  }

  // ---- kernel runs: criteria 5 and 9 ----
  std::fprintf(stderr, "acceptance: kernel runs at n in {24,40} x1000...\n");
  EnsembleConfig kernel_cfg;
  kernel_cfg.sizes = {24, 40};
  kernel_cfg.samples_per_size = 1000;
  kernel_cfg.mode = ConstraintMode::Kernel;
  kernel_cfg.master_seed = kSeed;
  std::vector<CountRecord> kernel_records =
      run_ensemble_parallel(kernel_cfg, jobs);
  const ReferenceRate kernel_rate =
      resolve_rate({}, kernel_cfg.mode, kernel_cfg.ensemble, kernel_records);
  apply_reference_rate(kernel_records, kernel_rate);

  {
    const SizeSummary s24 = summarize(kernel_records, 24);
    const SizeSummary s40 = summarize(kernel_records, 40);
    const bool pass = s40.rate_estimate >= 1.296 && s40.rate_estimate <= 1.302 &&
                      std::abs(s24.mean - 540.124) <= 0.05 * 540.124;
    report("criterion 05 kernel table (n=24 mean, y_est)", pass,
           "mean24 = " + fmt(s24.mean) + ", y_est40 = " + fmt(s40.rate_estimate));
  }

  // ---- criterion 6: fluctuation levels at n=6 and n=8 ----
  {
    std::set<double> levels;
    for (const auto& r : is_records)
      if (r.size == 6) levels.insert(r.diff);
    bool pass = levels.size() == 2;
    if (pass) {
      const double low = *levels.begin();
      const double high = *levels.rbegin();
      pass = std::abs(high - 0.0954) <= 0.0005 &&
             std::abs(low - 0.0476) <= 0.0005;
    }
    const double f0_8 = f_at_zero(is_curve[8]);
    pass = pass && std::abs(f0_8 - 0.2646) <= 0.01;
    report("criterion 06 level structure (n=6 two levels, n=8 max)", pass,
           std::to_string(levels.size()) + " levels, f0(8) = " + fmt(f0_8));
  }

  // ---- criterion 7: non-growth of IS fluctuations over n = 18..40 ----
  {
    double f0_min = 1e30, f0_max = 0, fh_min = 1e30, fh_max = 0;
    std::vector<double> halves;
    for (int n = 18; n <= 40; n += 2) {
      const double f0 = f_at_zero(is_curve[n]);
      const double fh = f_at_half(is_curve[n]);
      f0_min = std::min(f0_min, f0);
      f0_max = std::max(f0_max, f0);
      fh_min = std::min(fh_min, fh);
      fh_max = std::max(fh_max, fh);
      halves.push_back(fh);
    }
    std::nth_element(halves.begin(), halves.begin() + halves.size() / 2,
                     halves.end());
    const double median_half = halves[halves.size() / 2];
    const bool pass = f0_max <= 1.5 * f0_min &&
                      fh_max <= 1.2 * median_half &&
                      fh_min >= 0.8 * median_half;
    report("criterion 07 IS fluctuations non-growing (18..40)", pass,
           "f0 in [" + fmt(f0_min) + ", " + fmt(f0_max) + "], f(.5) in [" +
               fmt(fh_min) + ", " + fmt(fh_max) + "]");
  }

  // ---- criterion 8: contrast with the average-degree ensemble ----
  std::fprintf(stderr, "acceptance: avgdeg runs at n in {10,36} x1000...\n");
  {
    EnsembleConfig avg_cfg;
    avg_cfg.sizes = {10, 36};
    avg_cfg.samples_per_size = 1000;
    avg_cfg.mode = ConstraintMode::IndependentSet;
    avg_cfg.ensemble = EnsembleKind::average_degree(3);
    avg_cfg.master_seed = kSeed;
    std::vector<CountRecord> avg_records =
        run_ensemble_parallel(avg_cfg, jobs);
    const ReferenceRate avg_rate =
        resolve_rate({}, avg_cfg.mode, avg_cfg.ensemble, avg_records);
    apply_reference_rate(avg_records, avg_rate);
    const double f0_10 = f_at_zero(fluctuation_curve(avg_records, 10));
    const double f0_36 = f_at_zero(fluctuation_curve(avg_records, 36));
    report("criterion 08 avgdeg fluctuations grow (n=36 vs n=10)",
           f0_36 > f0_10 && avg_rate.rate == 1.594,
           "f0(10) = " + fmt(f0_10) + ", f0(36) = " + fmt(f0_36));
  }

  // ---- criterion 9: kernel vs IS fluctuation magnitude at n=40 ----
  {
    const double kernel_diff = mean_diff(kernel_records, 40);
    const double is_diff = mean_diff(is_records, 40);
    const double ratio = kernel_diff / is_diff;
    report("criterion 09 kernel/IS mean-deviation ratio at n=40",
           ratio >= 2.0 && ratio <= 6.0, "ratio = " + fmt(ratio));
  }

  // ---- criterion 10: complexity growth of IS builds ----
  {
    std::vector<std::pair<int, double>> points;
    for (const auto& [n, accesses] : mean_accesses_by_size(is_records))
      if (n == 20 || n == 24 || n == 28 || n == 32 || n == 36)
        points.emplace_back(n, accesses);
    const ComplexityFit fit = complexity_fit(points);
    report("criterion 10 complexity slope in [1.20, 1.36]",
           fit.base >= 1.20 && fit.base <= 1.36,
           "base = " + fmt(fit.base) + ", prefactor = " + fmt(fit.prefactor));
  }

  // ---- criterion 11: determinism across runs and worker counts ----
  {
    EnsembleConfig small;
    small.sizes = parse_sizes("6:16:2");
    small.samples_per_size = 100;
    small.mode = ConstraintMode::IndependentSet;
    small.master_seed = 777;
    const ExperimentOutput a = run_experiment(small, 1);
    const ExperimentOutput b = run_experiment(small, 1);
    const ExperimentOutput c = run_experiment(small, 8);
    const bool pass = a.records_csv == b.records_csv &&
                      a.summary_csv == b.summary_csv &&
                      a.curve_csv == b.curve_csv &&
                      a.records_csv == c.records_csv &&
                      a.summary_csv == c.summary_csv &&
                      a.curve_csv == c.curve_csv;
    report("criterion 11 byte-identical CSVs (reruns, jobs 1 vs 8)", pass,
           std::to_string(a.records_csv.size()) + " bytes compared");
  }

  // ---- spec invariants that need the full sweep (not numbered criteria) ----
  {
    bool below = true;
    for (const int n : is_cfg.sizes)
      below = below && is_summary[n].rate_estimate < bethe.w;
    const bool pass =
        below && is_summary[40].rate_estimate > is_summary[6].rate_estimate;
    report("property    w_est approaches w from below", pass,
           "w_est6 = " + fmt(is_summary[6].rate_estimate) +
               ", w_est40 = " + fmt(is_summary[40].rate_estimate));
  }

  if (failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d FAILED\n", failures);
  return 1;
}
