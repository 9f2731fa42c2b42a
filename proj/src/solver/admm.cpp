#include "solver/admm.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "convop/convop.hpp"
#include "core/errors.hpp"
#include "solver/prox.hpp"

namespace intervalcast::solver {

static void check_rule(const ProxRule& rule) {
  if (!(rule.lambda > 0.0))
    throw ConfigError("solver: rule lambda must be positive");
  if (rule.kind != RuleKind::Mse && !(rule.delta > 0.0 && rule.delta < 1.0))
    throw ConfigError("solver: quantile delta must lie in (0,1)");
}

Vec admm_x_update(const Vec& x_g0, const Vec& y, const std::vector<bool>& omega,
                  const ProxRule& rule, double mu, int k) {
  if (x_g0.size() != y.size() ||
      omega.size() != static_cast<size_t>(y.size()))
    throw DimensionError("admm_x_update: mismatched shapes");
  check_rule(rule);
  Vec x = x_g0;
  if (rule.kind == RuleKind::Mse) {
    for (int i = 0; i < x.size(); ++i)
      if (omega[i])
        x[i] = (mu * x_g0[i] + rule.lambda * y[i]) / (mu + rule.lambda);
    return x;
  }
  const double beta = rule.lambda / (mu * k);
  for (int i = 0; i < x.size(); ++i) {
    if (!omega[i]) continue;
    x[i] = (rule.kind == RuleKind::QrMedian)
               ? prox_quantile_median(x_g0[i], y[i], beta, rule.delta)
               : prox_quantile_mean(x_g0[i], y[i], beta, rule.delta);
  }
  return x;
}

SolveResult solve(const Window& window, const Mat& A, const ProxRule& rule,
                  const SolverOpts& opts) {
  const int m = static_cast<int>(window.values.size());
  if (m < 1) throw DimensionError("solver: empty window");
  if (A.cols() != m)
    throw DimensionError("solver: transform columns must match window length");
  const int q = static_cast<int>(A.rows());
  const int k = opts.k_override > 0 ? opts.k_override : q / 2;
  if (k < 1 || k > q) throw DimensionError("solver: kernel size out of range");
  check_rule(rule);
  if (!(opts.mu0 > 0.0) || !(opts.rho >= 1.0) || opts.max_iter < 1)
    throw ConfigError("solver: invalid schedule options");

  const Vec& y = window.values;
  const std::vector<bool>& omega = window.observed;
  // mean of observed entries; throws ConfigError when nothing is observed
  const double fill = observed_mean(window);

  Vec x = y;
  for (int i = 0; i < m; ++i)
    if (!omega[i]) x[i] = fill;

  // Workspace reused across iterations; C always holds conv_k(A x) for the
  // current x.
  detail::SvtWorkspace svt_ws;
  Vec Ax(q), adj(q), xg0(m);
  Mat C(q, k), B(q, k), Z(q, k), W = Mat::Zero(q, k);
  Ax.noalias() = A * x;
  convop::conv_matrix_into(Ax, k, C);
  Z = C;

  double mu = opts.mu0;
  double res = std::numeric_limits<double>::infinity();
  int it = 0;
  for (it = 1; it <= opts.max_iter; ++it) {
    B = C + W / mu;
    detail::svt_tall_into(B, 1.0 / mu, svt_ws, Z);
    B = W - mu * Z;
    convop::conv_adjoint_into(B, adj);
    xg0.noalias() = -(A.transpose() * adj) / (mu * k);
    x = admm_x_update(xg0, y, omega, rule, mu, k);
    if (!x.allFinite())
      throw SolverError("solver diverged: non-finite iterate at iteration " +
                        std::to_string(it));
    Ax.noalias() = A * x;
    convop::conv_matrix_into(Ax, k, C);
    res = (C - Z).norm() / std::max(1.0, Z.norm());
    W += mu * (C - Z);
    mu = std::min(opts.rho * mu, opts.mu_max);
    if (res < opts.tol) break;
  }

  SolveResult out;
  out.x = std::move(x);
  out.iterations = std::min(it, opts.max_iter);
  out.feas_residual = res;
  out.converged = res < opts.tol;
  double sq = 0.0;
  int nobs = 0;
  for (int i = 0; i < m; ++i)
    if (omega[i]) {
      const double d = out.x[i] - y[i];
      sq += d * d;
      ++nobs;
    }
  out.obs_fit_rmse = nobs ? std::sqrt(sq / nobs) : 0.0;
  return out;
}

double objective(const Window& window, const Mat& A, const Vec& x,
                 const ProxRule& rule, int k) {
  const Mat C = convop::conv_matrix(A * x, k);
  double val = Eigen::BDCSVD<Mat>(C).singularValues().sum();
  for (int i = 0; i < x.size(); ++i) {
    if (!window.observed[i]) continue;
    const double d = window.values[i] - x[i];
    if (rule.kind == RuleKind::Mse)
      val += 0.5 * rule.lambda * k * d * d;
    else
      val += rule.lambda * pinball(d, rule.delta);
  }
  return val;
}

}  // namespace intervalcast::solver
