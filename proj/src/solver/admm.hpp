#pragma once

#include <vector>

#include "core/types.hpp"
#include "core/window.hpp"

namespace intervalcast::solver {

enum class RuleKind { Mse, QrMedian, MqrMean };

// Data-fit proximal rule for the ADMM x-step. `delta` is the quantile level
// and is ignored by the MSE rule.
struct ProxRule {
  RuleKind kind = RuleKind::Mse;
  double lambda = 1000.0;
  double delta = 0.5;
};

struct SolverOpts {
  double mu0 = 1e-4;
  double rho = 1.03;
  double mu_max = 1e8;
  double tol = 1e-6;     // on relative feasibility ||C - Z||_F / max(1, ||Z||_F)
  int max_iter = 1000;
  int k_override = 0;    // 0 -> k = q/2; anything else forces the kernel size
};

struct SolveResult {
  Vec x;
  int iterations = 0;
  double feas_residual = 0.0;
  bool converged = false;
  double obs_fit_rmse = 0.0;  // RMS of (x - y) over observed entries
};

// One ADMM x-step given the unconstrained minimizer x_g0 of the quadratic
// part. Unobserved entries keep x_g0; observed entries apply the rule with
// beta = lambda / (mu k) (quantile rules) or the weighted average (MSE).
Vec admm_x_update(const Vec& x_g0, const Vec& y, const std::vector<bool>& omega,
                  const ProxRule& rule, double mu, int k);

// Minimize ||conv_k(A x)||_* + data-fit over the window. A must be
// column-orthogonal q x m; Z and W live in R^{q x k}.
SolveResult solve(const Window& window, const Mat& A, const ProxRule& rule,
                  const SolverOpts& opts = {});

// Objective value ||conv_k(A x)||_* + data term; used for convergence
// diagnostics (the solver must never return a worse value than its start).
double objective(const Window& window, const Mat& A, const Vec& x,
                 const ProxRule& rule, int k);

}  // namespace intervalcast::solver
