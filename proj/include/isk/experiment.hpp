#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "isk/constraints.hpp"
#include "isk/generators.hpp"

namespace isk {

// z is the unique real root of z^3 + z - 1 in (0,1); the per-vertex growth
// rate of the mean independent-set count of random 3-regular graphs is
// w = z^{-3/2} (2-z)^{-1/2} ~= 1.545634155.
struct BetheConstants {
  double z;
  double w;
};
BetheConstants bethe_constants();

// Empirical growth rates used as fixed reference constants: kernels of
// 3-regular graphs and independent sets of average-degree-3 graphs.
inline constexpr double kKernelRate = 1.299;
inline constexpr double kAvgDegreeRate = 1.594;

// Reference growth rate r for the per-sample deviation |ln Z - n ln r|.
struct ReferenceRate {
  double rate = 0.0;
  double ln_rate = 0.0;
  std::string tag;  // "is-bethe", "kernel-fit", "avgdeg-fit", "self", "fixed"
};

ReferenceRate reference_rate(double rate, std::string tag);

// How the reference rate is chosen. Auto picks the constant that matches
// the (mode, ensemble) combination and falls back to self-calibration when
// there is none; Self calibrates from the largest-size mean.
struct RateSpec {
  enum class Kind { Auto, Self, Fixed };
  Kind kind = Kind::Auto;
  double value = 0.0;  // Fixed only

  std::string label() const;
};

// One sampled graph: the exact count and its deviation from the reference
// rate. `accesses` is the BDD build cost (not serialized in the CSV).
struct CountRecord {
  int size = 0;
  int sample = 0;
  std::uint64_t seed = 0;
  mpz_class count;
  double ln_count = 0.0;
  double diff = 0.0;
  std::uint64_t accesses = 0;
};

struct EnsembleConfig {
  std::vector<int> sizes;
  int samples_per_size = 1000;
  ConstraintMode mode = ConstraintMode::IndependentSet;
  EnsembleKind ensemble = EnsembleKind::regular(3);
  RegularStrategy strategy = RegularStrategy::EdgeAddition;
  std::uint64_t master_seed = 1;
  RateSpec rate;

  // Throws bad_config on invalid sizes/samples or parity violations.
  void validate() const;
};

// Generates, builds and counts every (size, sample) cell. Records come out
// sorted by (size, sample index); diff is left at 0 until
// apply_reference_rate. Zero-count records are dropped with a warning on
// stderr (a count of 0 has no logarithm).
//
// The serial runner is the reference; the OpenMP runner distributes samples
// across `jobs` threads and returns bit-identical records for any jobs >= 1.
std::vector<CountRecord> run_ensemble(const EnsembleConfig& cfg);
std::vector<CountRecord> run_ensemble_parallel(const EnsembleConfig& cfg,
                                               int jobs);

// Drops records with count == 0 (warns on stderr); returns how many.
int drop_zero_counts(std::vector<CountRecord>& records);

// Resolves the rate choice against the finished records (self-calibration
// reads the largest-size mean).
ReferenceRate resolve_rate(const RateSpec& spec, ConstraintMode mode,
                           const EnsembleKind& ensemble,
                           const std::vector<CountRecord>& records);

// Fills diff = |ln Z - n ln r| on every record.
void apply_reference_rate(std::vector<CountRecord>& records,
                          const ReferenceRate& rate);

struct SizeSummary {
  int size = 0;
  int samples = 0;
  double mean = 0.0;           // exact big-integer mean, converted
  double rate_estimate = 0.0;  // exp(ln(mean)/n)
};

double rate_from_mean(double mean, int n);

// Summary over the records of one size (other sizes are ignored).
SizeSummary summarize(const std::vector<CountRecord>& records, int size);

// Empirical upper quantile function of the deviations at one size: with the
// M diffs sorted descending as d_(1) >= ... >= d_(M), the points are
// (epsilon_i, f_i) = ((i-1)/M, d_(i)), so f(0) is the maximum deviation and
// f is nonincreasing in epsilon.
struct FluctuationCurve {
  int size = 0;
  std::vector<std::pair<double, double>> points;  // epsilon ascending
};

FluctuationCurve fluctuation_curve(const std::vector<CountRecord>& records,
                                   int size);

// Least-squares fit of ln(accesses) against n; returns exp(slope) and
// exp(intercept). Needs at least 4 distinct sizes.
struct ComplexityFit {
  double base = 0.0;
  double prefactor = 0.0;
};

ComplexityFit complexity_fit(
    const std::vector<std::pair<int, double>>& size_accesses);

// Mean access count per size, for complexity_fit.
std::vector<std::pair<int, double>> mean_accesses_by_size(
    const std::vector<CountRecord>& records);

}  // namespace isk
