#pragma once

#include <Eigen/Eigenvalues>

#include "core/types.hpp"

namespace intervalcast::solver {

// Pinball (quantile) loss of a residual d = y - x at level delta.
double pinball(double d, double delta);

// Minimizer of (1/2)(x - z)^2 + beta * pinball(y - x, delta).
// Closed form: median(z + beta*delta, z + beta*(delta - 1), y).
double prox_quantile_median(double z, double y, double beta, double delta);

// Continuous variant: arithmetic mean of the same three candidates.
double prox_quantile_mean(double z, double y, double beta, double delta);

// Singular value soft-thresholding: U * max(S - tau, 0) * V^T.
// Implemented through the Gram matrix of the smaller side, so one symmetric
// eigensolve replaces the full SVD (the iterate matrices here are always
// tall 2m x m).
Mat svt(const Mat& M, double tau);

namespace detail {

// Reusable buffers for the per-iteration SVT inside the ADMM loop.
struct SvtWorkspace {
  Mat gram;
  Mat mv;
  Eigen::SelfAdjointEigenSolver<Mat> es;
};

// svt for rows >= cols, writing into `out` without allocating fresh
// workspace each call.
void svt_tall_into(const Mat& M, double tau, SvtWorkspace& ws, Mat& out);

}  // namespace detail

}  // namespace intervalcast::solver
