#include "isk/csv.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "isk/bdd.hpp"

namespace isk {

std::string format_g12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

void write_meta(std::ostream& out, const CsvMeta& meta) {
  for (const auto& [key, value] : meta) out << "# " << key << '=' << value << '\n';
}

}  // namespace

void write_records_csv(std::ostream& out, const std::vector<CountRecord>& recs,
                       const CsvMeta& meta) {
  write_meta(out, meta);
  out << "size,sample,seed,count,ln_count,diff\n";
  for (const auto& r : recs)
    out << r.size << ',' << r.sample << ',' << r.seed << ','
        << r.count.get_str() << ',' << format_g12(r.ln_count) << ','
        << format_g12(r.diff) << '\n';
}

void write_summary_csv(std::ostream& out,
                       const std::vector<SizeSummary>& summaries,
                       double reference_rate, const CsvMeta& meta) {
  write_meta(out, meta);
  out << "size,samples,mean,rate_estimate,reference_rate\n";
  for (const auto& s : summaries)
    out << s.size << ',' << s.samples << ',' << format_g12(s.mean) << ','
        << format_g12(s.rate_estimate) << ',' << format_g12(reference_rate)
        << '\n';
}

void write_curve_csv(std::ostream& out,
                     const std::vector<FluctuationCurve>& curves,
                     const CsvMeta& meta) {
  write_meta(out, meta);
  out << "size,epsilon,f\n";
  for (const auto& curve : curves)
    for (const auto& [epsilon, f] : curve.points)
      out << curve.size << ',' << format_g12(epsilon) << ',' << format_g12(f)
          << '\n';
}

RecordsFile read_records_csv(std::istream& in) {
  RecordsFile result;
  std::string line;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = line.substr(1);
      const std::size_t start = body.find_first_not_of(' ');
      if (start == std::string::npos) continue;
      body = body.substr(start);
      const std::size_t eq = body.find('=');
      if (eq != std::string::npos)
        result.meta[body.substr(0, eq)] = body.substr(eq + 1);
      continue;
    }
    if (!header_seen) {
      if (line != "size,sample,seed,count,ln_count,diff")
        fail(Errc::parse_error,
             "unexpected records header at line " + std::to_string(line_no) +
                 ": " + line);
      header_seen = true;
      continue;
    }
    std::istringstream row(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 6)
      fail(Errc::parse_error,
           "expected 6 fields at line " + std::to_string(line_no));
    try {
      CountRecord r;
      r.size = std::stoi(fields[0]);
      r.sample = std::stoi(fields[1]);
      r.seed = std::stoull(fields[2]);
      r.count = mpz_class(fields[3]);
      r.ln_count = r.count > 0 ? ln_count(r.count) : 0.0;
      r.diff = std::stod(fields[5]);
      result.records.push_back(std::move(r));
    } catch (const std::exception&) {
      fail(Errc::parse_error, "bad record at line " + std::to_string(line_no) +
                                  ": " + line);
    }
  }
  if (!header_seen) fail(Errc::parse_error, "records CSV has no header row");
  return result;
}

RecordsFile read_records_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  return read_records_csv(in);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot open " + path + " for writing");
  out << content;
  if (!out) fail(Errc::io_error, "write failed: " + path);
}

}  // namespace isk
