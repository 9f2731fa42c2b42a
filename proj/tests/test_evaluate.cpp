#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "data/data.hpp"
#include "data/rng.hpp"
#include "eval/evaluate.hpp"

using namespace intervalcast;

namespace {

// Small yearly-format corpus: trend plus AR noise, 30 train values,
// 6 test values (the yearly horizon).
data::M4Corpus make_corpus(int n_series, uint64_t seed) {
  data::Rng rng(seed);
  data::M4Corpus c;
  c.frequency = Frequency::Yearly;
  for (int i = 0; i < n_series; ++i) {
    data::M4Item item;
    item.id = "Y" + std::to_string(i + 1);
    const double base = rng.uniform(100.0, 1000.0);
    const double slope = base * rng.uniform(0.0, 0.03);
    double prev = 0.0;
    for (int t = 0; t < 36; ++t) {
      prev = 0.6 * prev + 0.02 * base * rng.normal();
      const double v = base + slope * t + prev;
      if (t < 30)
        item.train.push_back(v);
      else
        item.test.push_back(v);
    }
    c.items.push_back(item);
  }
  return c;
}

}  // namespace

TEST_CASE("evaluate scores every series and aggregates") {
  data::M4Corpus corpus = make_corpus(6, 31);
  eval::EvalOptions opts;
  eval::Report rep = eval::evaluate_corpus(corpus, opts);
  REQUIRE(rep.rows.size() == 6);
  CHECK(rep.ok_count == 6);
  CHECK(rep.failed_count == 0);
  CHECK(rep.total_points == 36);
  CHECK(rep.covered_points >= 0);
  CHECK(rep.coverage == doctest::Approx(double(rep.covered_points) / 36.0));
  CHECK(rep.acd == doctest::Approx(std::abs(0.95 - rep.coverage)));
  CHECK(rep.mean_msis > 0.0);
  CHECK(rep.mean_width > 0.0);
  CHECK(rep.rule == "mqr");
  CHECK(rep.conformity == "all_bounds");
  for (const auto& row : rep.rows) {
    CHECK(row.ok);
    CHECK(row.points == 6);
    CHECK(std::isfinite(row.msis));
  }
  // rows stay in corpus order
  for (size_t i = 0; i < rep.rows.size(); ++i)
    CHECK(rep.rows[i].id == corpus.items[i].id);
}

TEST_CASE("a failing series becomes a failed row, not an aborted run") {
  data::M4Corpus corpus = make_corpus(4, 7);
  // too short for any window: the pipeline throws for this series only
  corpus.items[1].train = {1.0, 2.0};
  eval::EvalOptions opts;
  eval::Report rep = eval::evaluate_corpus(corpus, opts);
  REQUIRE(rep.rows.size() == 4);
  CHECK(rep.ok_count == 3);
  CHECK(rep.failed_count == 1);
  CHECK_FALSE(rep.rows[1].ok);
  CHECK_FALSE(rep.rows[1].error.empty());
  CHECK(rep.rows[0].ok);
  CHECK(rep.total_points == 18);  // failed series contributes no points
}

TEST_CASE("thread count does not change the rendered output") {
  data::M4Corpus corpus = make_corpus(8, 12);
  eval::EvalOptions one;
  one.jobs = 1;
  eval::EvalOptions four;
  four.jobs = 4;
  eval::Report r1 = eval::evaluate_corpus(corpus, one);
  eval::Report r4 = eval::evaluate_corpus(corpus, four);
  CHECK(eval::render_report_csv(r1) == eval::render_report_csv(r4));
  CHECK(eval::render_report_json(r1) == eval::render_report_json(r4));
}

TEST_CASE("empty corpus is rejected") {
  data::M4Corpus corpus;
  corpus.frequency = Frequency::Yearly;
  eval::EvalOptions opts;
  CHECK_THROWS_AS(eval::evaluate_corpus(corpus, opts), ConfigError);
}

TEST_CASE("renders are parseable and sanitized") {
  data::M4Corpus corpus = make_corpus(3, 3);
  corpus.items[2].train = {3.0};          // will fail
  corpus.items[2].id = "Y,3\nnasty";      // would break CSV if copied raw
  eval::EvalOptions opts;
  eval::Report rep = eval::evaluate_corpus(corpus, opts);

  const std::string csv = eval::render_report_csv(rep);
  // header + one line per series + aggregate line + trailing comment line
  const long lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines == 1 + 3 + 1 + 1);
  CHECK(csv.find("nasty") != std::string::npos);
  // the raw embedded newline must not survive into the table
  CHECK(csv.find("Y,3\nnasty") == std::string::npos);
  CHECK(csv.find("\"Y,3 nasty\"") != std::string::npos);
  const std::string json = eval::render_report_json(rep);
  CHECK(json.find("\"aggregate\"") != std::string::npos);
  CHECK(json.find("\"series\"") != std::string::npos);
  CHECK(json.find("schema_version") != std::string::npos);
}

TEST_CASE("rule and conformity names round-trip") {
  CHECK(eval::rule_name(pipeline::Rule::Mqr) == "mqr");
  CHECK(eval::rule_name(pipeline::Rule::Qr) == "qr");
  CHECK(eval::rule_name(pipeline::Rule::Cp) == "cp");
  CHECK(eval::rule_name(pipeline::Rule::Naive) == "naive");
  CHECK(eval::conformity_name(pipeline::Conformity::AllBounds) == "all_bounds");
  CHECK(eval::conformity_name(pipeline::Conformity::PointOnly) == "point_only");
}
