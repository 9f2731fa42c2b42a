#include "eval/evaluate.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <sstream>
#include <thread>

#include "core/errors.hpp"
#include "metrics/metrics.hpp"

#include <json.hpp>

namespace intervalcast::eval {

std::string rule_name(pipeline::Rule r) {
  switch (r) {
    case pipeline::Rule::Mqr:   return "mqr";
    case pipeline::Rule::Qr:    return "qr";
    case pipeline::Rule::Cp:    return "cp";
    case pipeline::Rule::Naive: return "naive";
  }
  return "mqr";
}

std::string conformity_name(pipeline::Conformity c) {
  return c == pipeline::Conformity::AllBounds ? "all_bounds" : "point_only";
}

namespace {

SeriesResult eval_one(const data::M4Item& item, const data::M4Corpus& corpus,
                      const EvalOptions& opts) {
  SeriesResult r;
  r.id = item.id;
  try {
    const FrequencyInfo info = frequency_info(corpus.frequency);
    pipeline::ForecastConfig cfg = opts.cfg;
    cfg.horizon = static_cast<int>(item.test.size());
    cfg.seasonal_period = info.seasonal_period;
    const Forecast fc = pipeline::forecast_series(item.train, cfg);

    std::vector<double> lower(cfg.horizon), upper(cfg.horizon);
    double width = 0.0;
    for (int t = 0; t < cfg.horizon; ++t) {
      lower[t] = fc.steps[t].cal_lower;
      upper[t] = fc.steps[t].cal_upper;
      width += upper[t] - lower[t];
    }
    r.msis = metrics::msis(item.train, item.test, lower, upper, cfg.alpha,
                           cfg.seasonal_period);
    r.covered = metrics::count_covered(item.test, lower, upper);
    r.points = cfg.horizon;
    r.mean_width = width / cfg.horizon;
    r.obs_fit_rmse = fc.obs_fit_rmse;
    r.ok = true;
  } catch (const std::exception& e) {
    r.ok = false;
    r.error = e.what();
  }
  return r;
}

}  // namespace

Report evaluate_corpus(const data::M4Corpus& corpus, const EvalOptions& opts) {
  const int n = static_cast<int>(corpus.items.size());
  if (n == 0) throw ConfigError("evaluate: empty corpus");
  const int jobs = std::max(1, opts.jobs);

  std::vector<SeriesResult> rows(n);
  std::atomic<int> next{0};
  auto work = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n) break;
      rows[i] = eval_one(corpus.items[i], corpus, opts);
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  Report rep;
  rep.rows = std::move(rows);
  rep.alpha = opts.cfg.alpha;
  rep.rule = rule_name(opts.cfg.rule);
  rep.conformity = conformity_name(opts.cfg.conformity);

  double msis_sum = 0.0, width_sum = 0.0, fit_sum = 0.0;
  long covered = 0, total = 0;
  for (const SeriesResult& r : rep.rows) {
    if (!r.ok) {
      ++rep.failed_count;
      continue;
    }
    ++rep.ok_count;
    msis_sum += r.msis;
    width_sum += r.mean_width;
    fit_sum += r.obs_fit_rmse;
    covered += r.covered;
    total += r.points;
  }
  rep.covered_points = covered;
  rep.total_points = total;
  if (rep.ok_count > 0) {
    rep.mean_msis = msis_sum / rep.ok_count;
    rep.mean_width = width_sum / rep.ok_count;
    rep.mean_obs_fit = fit_sum / rep.ok_count;
    rep.coverage = static_cast<double>(covered) / static_cast<double>(total);
    rep.acd = metrics::acd(rep.coverage, 1.0 - rep.alpha);
  }
  return rep;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

// Quote a CSV field when it needs it (comma, quote or newline inside).
static std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else if (c == '\n' || c == '\r') out += ' ';
    else out += c;
  }
  out += '"';
  return out;
}

std::string render_report_csv(const Report& report) {
  std::ostringstream out;
  out << "series_id,status,msis,covered_points,total_points,mean_width,"
         "obs_fit_rmse,error\n";
  for (const SeriesResult& r : report.rows) {
    if (r.ok) {
      out << csv_field(r.id) << ",ok," << fmt(r.msis) << ',' << r.covered
          << ',' << r.points << ',' << fmt(r.mean_width) << ','
          << fmt(r.obs_fit_rmse) << ",\n";
    } else {
      out << csv_field(r.id) << ",failed,,,,,," << csv_field(r.error) << '\n';
    }
  }
  out << "__aggregate__,ok," << fmt(report.mean_msis) << ','
      << report.covered_points << ',' << report.total_points << ','
      << fmt(report.mean_width) << ',' << fmt(report.mean_obs_fit) << ",\n";
  out << "# coverage=" << fmt(report.coverage) << " acd=" << fmt(report.acd)
      << " target=" << fmt(1.0 - report.alpha) << " rule=" << report.rule
      << " conformity=" << report.conformity
      << " series_ok=" << report.ok_count
      << " series_failed=" << report.failed_count << '\n';
  return out.str();
}

std::string render_report_json(const Report& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["rule"] = report.rule;
  j["conformity"] = report.conformity;
  j["alpha"] = report.alpha;
  j["coverage_target"] = 1.0 - report.alpha;
  // aggregation conventions: coverage pooled over all points; MSIS averaged
  // per series then meaned
  j["aggregation"] = {{"coverage", "pooled_points"},
                      {"msis", "mean_of_per_series"}};
  nlohmann::ordered_json agg;
  agg["mean_msis"] = report.mean_msis;
  agg["coverage"] = report.coverage;
  agg["acd"] = report.acd;
  agg["covered_points"] = report.covered_points;
  agg["total_points"] = report.total_points;
  agg["mean_width"] = report.mean_width;
  agg["mean_obs_fit_rmse"] = report.mean_obs_fit;
  agg["series_ok"] = report.ok_count;
  agg["series_failed"] = report.failed_count;
  j["aggregate"] = agg;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const SeriesResult& r : report.rows) {
    nlohmann::ordered_json row;
    row["series_id"] = r.id;
    row["status"] = r.ok ? "ok" : "failed";
    if (r.ok) {
      row["msis"] = r.msis;
      row["covered_points"] = r.covered;
      row["total_points"] = r.points;
      row["mean_width"] = r.mean_width;
      row["obs_fit_rmse"] = r.obs_fit_rmse;
    } else {
      row["error"] = r.error;
    }
    rows.push_back(row);
  }
  j["series"] = rows;
  return j.dump(2) + "\n";
}

}  // namespace intervalcast::eval
