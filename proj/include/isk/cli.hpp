#pragma once

#include <string>
#include <vector>

#include "isk/csv.hpp"
#include "isk/experiment.hpp"

namespace isk {

// "6:40:2" (inclusive range with step), "6:10" (step 1), "6,8,10", or any
// comma-separated mix. Duplicates are rejected.
std::vector<int> parse_sizes(const std::string& spec);

std::string format_sizes(const std::vector<int>& sizes);

// Inverse of EnsembleKind::label(): "regular:3" or "avgdeg:3".
EnsembleKind ensemble_from_label(const std::string& label);

// "auto", "self", or a literal rate like "1.594".
RateSpec rate_spec_from_string(const std::string& text);

// Provenance block shared by the three CSVs. Intentionally excludes the
// worker count: outputs are identical for every --jobs value, and the
// headers must be too.
CsvMeta experiment_meta(const EnsembleConfig& cfg, const ReferenceRate& rate);

struct ExperimentOutput {
  ReferenceRate rate;
  std::vector<CountRecord> records;  // diffs filled against `rate`
  std::string records_csv;
  std::string summary_csv;
  std::string curve_csv;
};

// The full experiment pipeline: run, resolve the rate, fill diffs,
// summarize per size, build per-size curves, render all three CSVs.
// Identical output for every jobs >= 1.
ExperimentOutput run_experiment(const EnsembleConfig& cfg, int jobs);

// Re-derives a curve CSV from an existing records file under a different
// reference rate. `auto` resolves from the mode/ensemble recorded in the
// file's header.
std::string rederive_curve_csv(const RecordsFile& file, const RateSpec& spec);

}  // namespace isk
