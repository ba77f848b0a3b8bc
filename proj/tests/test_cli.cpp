#include <doctest.h>

#include <sstream>

#include "isk/cli.hpp"

using namespace isk;

TEST_CASE("size spec parsing") {
  CHECK(parse_sizes("6:40:2").size() == 18);
  CHECK(parse_sizes("6:40:2").front() == 6);
  CHECK(parse_sizes("6:40:2").back() == 40);
  CHECK(parse_sizes("6:9") == std::vector<int>{6, 7, 8, 9});
  CHECK(parse_sizes("6,8,10") == std::vector<int>{6, 8, 10});
  CHECK(parse_sizes("4,10:14:2") == std::vector<int>{4, 10, 12, 14});
  CHECK(parse_sizes("12") == std::vector<int>{12});

  CHECK_THROWS_AS(parse_sizes(""), Error);
  CHECK_THROWS_AS(parse_sizes("6,6"), Error);          // duplicate
  CHECK_THROWS_AS(parse_sizes("10:6"), Error);         // reversed
  CHECK_THROWS_AS(parse_sizes("6:10:0"), Error);       // zero step
  CHECK_THROWS_AS(parse_sizes("6:10:2:4"), Error);     // too many parts
  CHECK_THROWS_AS(parse_sizes("six"), Error);
  CHECK_THROWS_AS(parse_sizes("6,,8"), Error);
}

TEST_CASE("ensemble labels round trip") {
  const EnsembleKind reg = ensemble_from_label("regular:3");
  CHECK(reg.kind == EnsembleKind::Kind::Regular);
  CHECK(reg.k == 3);
  CHECK(reg.label() == "regular:3");

  const EnsembleKind avg = ensemble_from_label("avgdeg:3");
  CHECK(avg.kind == EnsembleKind::Kind::AverageDegree);
  CHECK(avg.avg == 3.0);
  CHECK(avg.label() == "avgdeg:3");

  CHECK_THROWS_AS(ensemble_from_label("cubic"), Error);
  CHECK_THROWS_AS(ensemble_from_label("regular:x"), Error);
}

TEST_CASE("rate spec parsing") {
  CHECK(rate_spec_from_string("auto").kind == RateSpec::Kind::Auto);
  CHECK(rate_spec_from_string("self").kind == RateSpec::Kind::Self);
  const RateSpec fixed = rate_spec_from_string("1.594");
  CHECK(fixed.kind == RateSpec::Kind::Fixed);
  CHECK(fixed.value == 1.594);
  CHECK_THROWS_AS(rate_spec_from_string("fast"), Error);
  CHECK_THROWS_AS(rate_spec_from_string("1.2x"), Error);
}

TEST_CASE("experiment meta carries the resolved config without jobs") {
  EnsembleConfig cfg;
  cfg.sizes = {6, 8};
  cfg.samples_per_size = 10;
  cfg.master_seed = 77;
  const CsvMeta meta = experiment_meta(cfg, reference_rate(1.5, "fixed"));
  bool saw_seed = false;
  for (const auto& [key, value] : meta) {
    CHECK(key != "jobs");
    if (key == "seed") {
      saw_seed = true;
      CHECK(value == "77");
    }
  }
  CHECK(saw_seed);
}

TEST_CASE("experiment output is byte-identical across runs and workers") {
  EnsembleConfig cfg;
  cfg.sizes = {6, 8, 10};
  cfg.samples_per_size = 30;
  cfg.mode = ConstraintMode::IndependentSet;
  cfg.master_seed = 5;

  const ExperimentOutput a = run_experiment(cfg, 1);
  const ExperimentOutput b = run_experiment(cfg, 4);
  const ExperimentOutput c = run_experiment(cfg, 4);
  CHECK(a.records_csv == b.records_csv);
  CHECK(a.summary_csv == b.summary_csv);
  CHECK(a.curve_csv == b.curve_csv);
  CHECK(b.records_csv == c.records_csv);
  CHECK(b.summary_csv == c.summary_csv);
  CHECK(b.curve_csv == c.curve_csv);
}

TEST_CASE("curve CSVs can be re-derived from records under a new rate") {
  EnsembleConfig cfg;
  cfg.sizes = {6};
  cfg.samples_per_size = 25;
  cfg.mode = ConstraintMode::Kernel;
  cfg.master_seed = 9;
  const ExperimentOutput out = run_experiment(cfg, 2);

  std::istringstream in(out.records_csv);
  const RecordsFile file = read_records_csv(in);
  CHECK(file.meta.at("mode") == "kernel");

  // auto resolves kernel-fit from the stored headers: same curve back
  const std::string again = rederive_curve_csv(file, {});
  CHECK(again == out.curve_csv);

  // an explicit rate changes the curve but keeps provenance
  const std::string other =
      rederive_curve_csv(file, {RateSpec::Kind::Fixed, 1.5});
  CHECK(other != out.curve_csv);
  CHECK(other.find("# rate_tag=fixed\n") != std::string::npos);
  CHECK(other.find("# seed=9\n") != std::string::npos);

  RecordsFile bare = file;
  bare.meta.clear();
  CHECK_THROWS_AS(rederive_curve_csv(bare, {}), Error);
  CHECK(rederive_curve_csv(bare, {RateSpec::Kind::Fixed, 1.5}).size() > 0);
}
