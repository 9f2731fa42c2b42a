#pragma once

#include <string>
#include <vector>

#include "data/data.hpp"
#include "pipeline/pipeline.hpp"

namespace intervalcast::eval {

struct EvalOptions {
  pipeline::ForecastConfig cfg;  // horizon/seasonal_period filled per corpus
  int jobs = 1;
};

struct SeriesResult {
  std::string id;
  bool ok = false;
  std::string error;
  double msis = 0.0;
  long covered = 0;
  int points = 0;
  double mean_width = 0.0;
  double obs_fit_rmse = 0.0;
};

struct Report {
  std::vector<SeriesResult> rows;  // in corpus order
  double alpha = 0.05;
  std::string rule, conformity;
  int ok_count = 0, failed_count = 0;
  double mean_msis = 0.0;     // over succeeded series
  double coverage = 0.0;      // pooled over all points of succeeded series
  double acd = 0.0;           // |(1 - alpha) - coverage|
  double mean_width = 0.0;
  double mean_obs_fit = 0.0;
  long covered_points = 0;
  long total_points = 0;
};

// Forecast every series of the corpus and score it against its test part.
// Work is distributed across `jobs` threads; each series is handled by one
// worker and the reduction runs in corpus order, so results do not depend
// on the thread count. A failing series becomes a failed row, never an
// aborted run.
Report evaluate_corpus(const data::M4Corpus& corpus, const EvalOptions& opts);

std::string rule_name(pipeline::Rule r);
std::string conformity_name(pipeline::Conformity c);

// Deterministic text renderings (used verbatim by the CLI).
std::string render_report_csv(const Report& report);
std::string render_report_json(const Report& report);

}  // namespace intervalcast::eval
