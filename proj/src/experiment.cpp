#include "isk/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>

#include "isk/rng.hpp"

namespace isk {

BetheConstants bethe_constants() {
  // z^3 + z - 1 is strictly increasing with a sign change on [0,1]:
  // bisection to machine precision.
  auto cubic = [](double z) { return z * z * z + z - 1.0; };
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (cubic(mid) < 0.0 ? lo : hi) = mid;
  }
  const double z = 0.5 * (lo + hi);
  const double w = std::pow(z, -1.5) * std::pow(2.0 - z, -0.5);
  return {z, w};
}

ReferenceRate reference_rate(double rate, std::string tag) {
  if (!(rate > 1.0))
    fail(Errc::bad_config, "reference rate must exceed 1, got " +
                               std::to_string(rate));
  return {rate, std::log(rate), std::move(tag)};
}

std::string RateSpec::label() const {
  switch (kind) {
    case Kind::Auto:
      return "auto";
    case Kind::Self:
      return "self";
    case Kind::Fixed: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.12g", value);
      return buf;
    }
  }
  return "auto";
}

void EnsembleConfig::validate() const {
  if (sizes.empty()) fail(Errc::bad_config, "no sizes given");
  if (samples_per_size < 1)
    fail(Errc::bad_config, "samples_per_size must be >= 1");
  for (const int n : sizes) {
    if (n < 1) fail(Errc::bad_config, "sizes must be >= 1");
    if (ensemble.kind == EnsembleKind::Kind::Regular) {
      if (ensemble.k >= n)
        fail(Errc::bad_config,
             "size " + std::to_string(n) + " too small for degree " +
                 std::to_string(ensemble.k));
      if ((static_cast<long long>(n) * ensemble.k) % 2 != 0)
        fail(Errc::bad_config,
             "size " + std::to_string(n) + " odd with odd degree " +
                 std::to_string(ensemble.k));
    } else {
      average_degree_edge_count(n, ensemble.avg);  // throws if invalid
    }
  }
}

namespace {

CountRecord run_one(const EnsembleConfig& cfg, int size, int sample) {
  const std::uint64_t seed = derive_seed(cfg.master_seed,
                                         static_cast<std::uint64_t>(size),
                                         static_cast<std::uint64_t>(sample));
  const Graph g = generate(cfg.ensemble, size, seed, cfg.strategy);
  const Bdd f = constraint_bdd(g, cfg.mode);
  CountRecord rec;
  rec.size = size;
  rec.sample = sample;
  rec.seed = seed;
  rec.accesses = f.store().access_count();
  rec.count = f.count_solutions();
  rec.ln_count = rec.count > 0 ? ln_count(rec.count) : 0.0;
  rec.diff = 0.0;
  return rec;
}

}  // namespace

std::vector<CountRecord> run_ensemble(const EnsembleConfig& cfg) {
  cfg.validate();
  std::vector<CountRecord> records;
  records.reserve(cfg.sizes.size() * cfg.samples_per_size);
  for (const int size : cfg.sizes)
    for (int sample = 0; sample < cfg.samples_per_size; ++sample)
      records.push_back(run_one(cfg, size, sample));
  drop_zero_counts(records);
  return records;
}

std::vector<CountRecord> run_ensemble_parallel(const EnsembleConfig& cfg,
                                               int jobs) {
  cfg.validate();
  if (jobs < 1) jobs = 1;
  const int num_sizes = static_cast<int>(cfg.sizes.size());
  const int per_size = cfg.samples_per_size;
  const long long cells = static_cast<long long>(num_sizes) * per_size;
  std::vector<CountRecord> records(cells);

  // Exceptions cannot cross the parallel region; remember the first one.
  bool failed = false;
  std::string failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (long long cell = 0; cell < cells; ++cell) {
    const int size = cfg.sizes[static_cast<std::size_t>(cell / per_size)];
    const int sample = static_cast<int>(cell % per_size);
    try {
      records[cell] = run_one(cfg, size, sample);
    } catch (const std::exception& e) {
#pragma omp critical
      if (!failed) {
        failed = true;
        failure = "size " + std::to_string(size) + " sample " +
                  std::to_string(sample) + ": " + e.what();
      }
    }
  }
  if (failed) fail(Errc::generation_failed, failure);
  drop_zero_counts(records);
  return records;
}

int drop_zero_counts(std::vector<CountRecord>& records) {
  int dropped = 0;
  auto keep = std::remove_if(records.begin(), records.end(),
                             [&](const CountRecord& r) {
                               if (r.count == 0) {
                                 ++dropped;
                                 std::cerr << "warning: zero count at size "
                                           << r.size << " sample " << r.sample
                                           << ", record excluded\n";
                                 return true;
                               }
                               return false;
                             });
  records.erase(keep, records.end());
  return dropped;
}

ReferenceRate resolve_rate(const RateSpec& spec, ConstraintMode mode,
                           const EnsembleKind& ensemble,
                           const std::vector<CountRecord>& records) {
  switch (spec.kind) {
    case RateSpec::Kind::Fixed:
      return reference_rate(spec.value, "fixed");
    case RateSpec::Kind::Self:
      break;
    case RateSpec::Kind::Auto: {
      const bool regular3 = ensemble.kind == EnsembleKind::Kind::Regular &&
                            ensemble.k == 3;
      const bool avg3 = ensemble.kind == EnsembleKind::Kind::AverageDegree &&
                        std::abs(ensemble.avg - 3.0) < 1e-12;
      if (mode == ConstraintMode::IndependentSet && regular3)
        return reference_rate(bethe_constants().w, "is-bethe");
      if (mode == ConstraintMode::Kernel && regular3)
        return reference_rate(kKernelRate, "kernel-fit");
      if (mode == ConstraintMode::IndependentSet && avg3)
        return reference_rate(kAvgDegreeRate, "avgdeg-fit");
      break;  // nothing tabulated: self-calibrate
    }
  }
  if (records.empty())
    fail(Errc::empty_sample, "self-calibration needs at least one record");
  int max_size = 0;
  for (const auto& r : records) max_size = std::max(max_size, r.size);
  const SizeSummary s = summarize(records, max_size);
  return reference_rate(s.rate_estimate, "self");
}

void apply_reference_rate(std::vector<CountRecord>& records,
                          const ReferenceRate& rate) {
  for (auto& r : records)
    r.diff = std::abs(r.ln_count - r.size * rate.ln_rate);
}

double rate_from_mean(double mean, int n) {
  if (!(mean > 0.0) || n < 1)
    fail(Errc::empty_sample, "rate estimate needs a positive mean and size");
  return std::exp(std::log(mean) / n);
}

SizeSummary summarize(const std::vector<CountRecord>& records, int size) {
  mpz_class sum = 0;
  long count = 0;
  for (const auto& r : records) {
    if (r.size != size) continue;
    sum += r.count;
    ++count;
  }
  if (count == 0)
    fail(Errc::empty_sample,
         "no records of size " + std::to_string(size));
  // Exact rational mean, converted to double at the end.
  mpq_class mean_q(sum, count);
  mean_q.canonicalize();
  const double mean = mean_q.get_d();
  return {size, static_cast<int>(count), mean, rate_from_mean(mean, size)};
}

FluctuationCurve fluctuation_curve(const std::vector<CountRecord>& records,
                                   int size) {
  std::vector<double> diffs;
  for (const auto& r : records)
    if (r.size == size) diffs.push_back(r.diff);
  if (diffs.empty())
    fail(Errc::empty_sample,
         "no records of size " + std::to_string(size));
  std::sort(diffs.begin(), diffs.end(), std::greater<>());
  FluctuationCurve curve;
  curve.size = size;
  curve.points.reserve(diffs.size());
  const double m = static_cast<double>(diffs.size());
  for (std::size_t i = 0; i < diffs.size(); ++i)
    curve.points.emplace_back(static_cast<double>(i) / m, diffs[i]);
  return curve;
}

ComplexityFit complexity_fit(
    const std::vector<std::pair<int, double>>& size_accesses) {
  std::map<int, double> by_size(size_accesses.begin(), size_accesses.end());
  if (by_size.size() < 4)
    fail(Errc::insufficient_data,
         "complexity fit needs at least 4 distinct sizes, got " +
             std::to_string(by_size.size()));
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(size_accesses.size());
  for (const auto& [n, accesses] : size_accesses) {
    const double x = n, y = std::log(accesses);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / m;
  return {std::exp(slope), std::exp(intercept)};
}

std::vector<std::pair<int, double>> mean_accesses_by_size(
    const std::vector<CountRecord>& records) {
  std::map<int, std::pair<double, long>> acc;
  for (const auto& r : records) {
    auto& [sum, count] = acc[r.size];
    sum += static_cast<double>(r.accesses);
    ++count;
  }
  std::vector<std::pair<int, double>> out;
  out.reserve(acc.size());
  for (const auto& [size, sc] : acc)
    out.emplace_back(size, sc.first / static_cast<double>(sc.second));
  return out;
}

}  // namespace isk
