#include "solver/prox.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace intervalcast::solver {

double pinball(double d, double delta) {
  return delta * std::max(d, 0.0) + (1.0 - delta) * std::max(-d, 0.0);
}

static void check_quantile_params(double beta, double delta) {
  if (!(beta > 0.0)) throw ConfigError("quantile prox: beta must be positive");
  if (!(delta > 0.0 && delta < 1.0))
    throw ConfigError("quantile prox: delta must lie in (0,1)");
}

double prox_quantile_median(double z, double y, double beta, double delta) {
  check_quantile_params(beta, delta);
  const double hi = z + beta * delta;
  const double lo = z + beta * (delta - 1.0);
  // lo < hi always, so the median of {hi, lo, y} is y clipped to [lo, hi]
  return std::clamp(y, lo, hi);
}

double prox_quantile_mean(double z, double y, double beta, double delta) {
  check_quantile_params(beta, delta);
  return (z + beta * delta + z + beta * (delta - 1.0) + y) / 3.0;
}

namespace detail {

void svt_tall_into(const Mat& M, double tau, SvtWorkspace& ws, Mat& out) {
  // M = U S V^T  =>  M^T M = V S^2 V^T, and
  // svt(M) = M Vk diag((s - tau)/s) Vk^T over the columns with s > tau.
  const int k = static_cast<int>(M.cols());
  ws.gram.resize(k, k);
  ws.gram.setZero();
  ws.gram.selfadjointView<Eigen::Lower>().rankUpdate(M.transpose());
  ws.es.compute(ws.gram);
  if (ws.es.info() != Eigen::Success)
    throw SolverError("svt: symmetric eigensolver failed to converge");
  // eigenvalues come out ascending; the kept block is the tail
  const Vec& lam = ws.es.eigenvalues();
  int first = k;
  for (int i = k - 1; i >= 0; --i) {
    if (std::sqrt(std::max(lam[i], 0.0)) > tau)
      first = i;
    else
      break;
  }
  const int nz = k - first;
  if (nz == 0) {
    out.setZero(M.rows(), k);
    return;
  }
  const auto Vk = ws.es.eigenvectors().rightCols(nz);
  ws.mv.resize(M.rows(), nz);
  ws.mv.noalias() = M * Vk;
  for (int i = 0; i < nz; ++i) {
    const double s = std::sqrt(std::max(lam[first + i], 0.0));
    ws.mv.col(i) *= (s - tau) / s;
  }
  out.resize(M.rows(), k);
  out.noalias() = ws.mv * Vk.transpose();
}

}  // namespace detail

Mat svt(const Mat& M, double tau) {
  if (!(tau >= 0.0)) throw ConfigError("svt: tau must be non-negative");
  if (!M.allFinite()) throw SolverError("svt: non-finite input matrix");
  detail::SvtWorkspace ws;
  Mat out;
  if (M.rows() >= M.cols()) {
    detail::svt_tall_into(M, tau, ws, out);
  } else {
    const Mat Mt = M.transpose();
    Mat outT;
    detail::svt_tall_into(Mt, tau, ws, outT);
    out = outT.transpose();
  }
  return out;
}

}  // namespace intervalcast::solver
