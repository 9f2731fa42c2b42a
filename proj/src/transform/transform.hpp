#pragma once

#include <string>
#include <vector>

#include "core/types.hpp"

namespace intervalcast::transform {

// Orthonormal real-DFT basis of R^m. Columns ordered DC, (cos1, sin1),
// (cos2, sin2), ..., Nyquist when m is even. bands[j] is the frequency of
// column j.
struct Basis {
  Mat B;
  std::vector<int> bands;
};

Basis real_dft_basis(int m);

// Analysis basis used to read the training windows; currently the real-DFT
// basis itself. Kept as a separate name so the reading side can diverge
// from the routing side without touching callers.
Basis analysis_basis(int m);

// Column-orthogonal lift R^m -> R^{2m} duplicating the window onto both
// halves: A = [I; I] / sqrt(2). The convolution of A x is then the full
// m-circulant structure repeated, so periodic signals stay low rank.
Mat padded_identity(int m);

// Training-sample matrix: column i is series[i*stride .. i*stride + m - 1],
// n = floor((l - m) / stride) + 1 columns.
Mat extract_training_samples(const std::vector<double>& series, int m,
                             int stride = 1);

struct TransformOptions {
  double energy_threshold = 0.95;
  double ramp_width = 2.0;
  int stride = 1;
};

struct LearnedTransform {
  Mat A;               // q x m, column-orthogonal
  std::string learner_tag;
};

// Learn a column-orthogonal A in R^{q x m}, q = 2m, that routes the
// spectrally dominant atoms of the training windows onto dedicated
// q-sinusoids (so their convolution stays low rank) and spreads the rest
// over the remaining rows. Degenerate (all-zero) samples fall back to the
// padded identity.
Mat spectral_routing(const Mat& samples, int m,
                     const TransformOptions& opts = {});

LearnedTransform learn_transform(const std::vector<double>& series, int m,
                                 const TransformOptions& opts = {});

// Mean nuclear norm of the k-column convolution of A*sample over the
// training columns; used as a soft quality check against the padded
// identity (logged by callers, never asserted).
double average_conv_nuclear_norm(const Mat& A, const Mat& samples, int k);

void save_transform(const std::string& path, const LearnedTransform& t);
LearnedTransform load_transform(const std::string& path);

}  // namespace intervalcast::transform
