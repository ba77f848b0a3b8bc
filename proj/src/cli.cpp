#include "isk/cli.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "isk/rng.hpp"

namespace isk {

namespace {

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    fail(Errc::bad_config, "bad " + what + ": '" + text + "'");
  }
}

}  // namespace

std::vector<int> parse_sizes(const std::string& spec) {
  std::vector<int> sizes;
  std::istringstream tokens(spec);
  std::string token;
  while (std::getline(tokens, token, ',')) {
    if (token.empty()) fail(Errc::bad_config, "empty size token in: " + spec);
    std::vector<std::string> parts;
    std::istringstream ts(token);
    std::string part;
    while (std::getline(ts, part, ':')) parts.push_back(part);
    if (parts.size() == 1) {
      sizes.push_back(parse_int(parts[0], "size"));
    } else if (parts.size() == 2 || parts.size() == 3) {
      const int from = parse_int(parts[0], "range start");
      const int to = parse_int(parts[1], "range end");
      const int step = parts.size() == 3 ? parse_int(parts[2], "range step") : 1;
      if (step < 1) fail(Errc::bad_config, "range step must be >= 1: " + token);
      if (to < from) fail(Errc::bad_config, "empty range: " + token);
      for (int n = from; n <= to; n += step) sizes.push_back(n);
    } else {
      fail(Errc::bad_config, "bad size token: " + token);
    }
  }
  if (sizes.empty()) fail(Errc::bad_config, "no sizes in: " + spec);
  std::set<int> seen(sizes.begin(), sizes.end());
  if (seen.size() != sizes.size())
    fail(Errc::bad_config, "duplicate sizes in: " + spec);
  return sizes;
}

std::string format_sizes(const std::vector<int>& sizes) {
  std::string out;
  for (const int n : sizes) {
    if (!out.empty()) out += ',';
    out += std::to_string(n);
  }
  return out;
}

EnsembleKind ensemble_from_label(const std::string& label) {
  const std::size_t colon = label.find(':');
  if (colon != std::string::npos) {
    const std::string kind = label.substr(0, colon);
    const std::string arg = label.substr(colon + 1);
    try {
      if (kind == "regular") return EnsembleKind::regular(std::stoi(arg));
      if (kind == "avgdeg") return EnsembleKind::average_degree(std::stod(arg));
    } catch (const std::exception&) {
    }
  }
  fail(Errc::bad_config, "bad ensemble label: " + label);
}

RateSpec rate_spec_from_string(const std::string& text) {
  if (text == "auto") return {RateSpec::Kind::Auto, 0.0};
  if (text == "self") return {RateSpec::Kind::Self, 0.0};
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return {RateSpec::Kind::Fixed, value};
  } catch (const std::exception&) {
    fail(Errc::bad_config, "rate must be 'auto', 'self' or a number, got '" +
                               text + "'");
  }
}

CsvMeta experiment_meta(const EnsembleConfig& cfg, const ReferenceRate& rate) {
  return {
      {"tool", "isk"},
      {"mode", mode_name(cfg.mode)},
      {"ensemble", cfg.ensemble.label()},
      {"strategy", strategy_name(cfg.strategy)},
      {"sizes", format_sizes(cfg.sizes)},
      {"samples", std::to_string(cfg.samples_per_size)},
      {"seed", std::to_string(cfg.master_seed)},
      {"rng", kRngId},
      {"rate", format_g12(rate.rate)},
      {"rate_tag", rate.tag},
  };
}

ExperimentOutput run_experiment(const EnsembleConfig& cfg, int jobs) {
  ExperimentOutput out;
  out.records = run_ensemble_parallel(cfg, jobs);
  out.rate = resolve_rate(cfg.rate, cfg.mode, cfg.ensemble, out.records);
  apply_reference_rate(out.records, out.rate);

  std::vector<SizeSummary> summaries;
  std::vector<FluctuationCurve> curves;
  for (const int n : cfg.sizes) {
    summaries.push_back(summarize(out.records, n));
    curves.push_back(fluctuation_curve(out.records, n));
  }

  const CsvMeta meta = experiment_meta(cfg, out.rate);
  std::ostringstream records_os, summary_os, curve_os;
  write_records_csv(records_os, out.records, meta);
  write_summary_csv(summary_os, summaries, out.rate.rate, meta);
  write_curve_csv(curve_os, curves, meta);
  out.records_csv = records_os.str();
  out.summary_csv = summary_os.str();
  out.curve_csv = curve_os.str();
  return out;
}

std::string rederive_curve_csv(const RecordsFile& file, const RateSpec& spec) {
  if (file.records.empty())
    fail(Errc::empty_sample, "records file has no rows");

  ConstraintMode mode = ConstraintMode::IndependentSet;
  EnsembleKind ensemble = EnsembleKind::regular(3);
  const auto mode_it = file.meta.find("mode");
  const auto ens_it = file.meta.find("ensemble");
  if (spec.kind == RateSpec::Kind::Auto &&
      (mode_it == file.meta.end() || ens_it == file.meta.end()))
    fail(Errc::bad_config,
         "records file lacks mode/ensemble headers; pass an explicit rate");
  if (mode_it != file.meta.end()) mode = mode_from_name(mode_it->second);
  if (ens_it != file.meta.end()) ensemble = ensemble_from_label(ens_it->second);

  std::vector<CountRecord> records = file.records;
  const ReferenceRate rate = resolve_rate(spec, mode, ensemble, records);
  apply_reference_rate(records, rate);

  std::set<int> sizes;
  for (const auto& r : records) sizes.insert(r.size);
  std::vector<FluctuationCurve> curves;
  for (const int n : sizes) curves.push_back(fluctuation_curve(records, n));

  // carry the original provenance forward, with the rate updated
  CsvMeta meta;
  for (const char* key : {"tool", "mode", "ensemble", "strategy", "sizes",
                          "samples", "seed", "rng"}) {
    const auto it = file.meta.find(key);
    if (it != file.meta.end()) meta.emplace_back(key, it->second);
  }
  meta.emplace_back("rate", format_g12(rate.rate));
  meta.emplace_back("rate_tag", rate.tag);

  std::ostringstream out;
  write_curve_csv(out, curves, meta);
  return out.str();
}

}  // namespace isk
