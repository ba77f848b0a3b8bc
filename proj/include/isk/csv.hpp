#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "isk/experiment.hpp"

namespace isk {

// '#'-prefixed provenance lines written at the top of every CSV so a file
// is replayable on its own. Keys are free-form; values must not contain
// newlines.
using CsvMeta = std::vector<std::pair<std::string, std::string>>;

// Doubles are printed with 12 significant digits.
std::string format_g12(double x);

// records CSV: header `size,sample,seed,count,ln_count,diff`, one row per
// sample, counts in full decimal, rows sorted by (size, sample).
void write_records_csv(std::ostream& out, const std::vector<CountRecord>& recs,
                       const CsvMeta& meta);

// summary CSV: header `size,samples,mean,rate_estimate,reference_rate`.
void write_summary_csv(std::ostream& out,
                       const std::vector<SizeSummary>& summaries,
                       double reference_rate, const CsvMeta& meta);

// curve CSV: header `size,epsilon,f`, sorted by size then epsilon ascending.
void write_curve_csv(std::ostream& out,
                     const std::vector<FluctuationCurve>& curves,
                     const CsvMeta& meta);

struct RecordsFile {
  std::map<std::string, std::string> meta;  // parsed "# key=value" lines
  std::vector<CountRecord> records;         // diff as stored in the file
};

// Reads a records CSV back (meta plus rows). ln_count is recomputed from
// the count so downstream curves never depend on printed precision.
RecordsFile read_records_csv(std::istream& in);
RecordsFile read_records_csv_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace isk
