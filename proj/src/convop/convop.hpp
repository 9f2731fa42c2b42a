#pragma once

#include "core/types.hpp"

namespace intervalcast::convop {

// Truncated circular convolution matrix of x in R^n with k columns.
// Column j (0-based) is x rotated down by j:
//   M(i, j) = x[(i - j) mod n].
// k = n gives the full circulant; k < n keeps the leading columns.
Mat conv_matrix(const Vec& x, int k);

// Adjoint of conv_matrix as an operator R^n -> R^{n x k}:
//   <conv_matrix(x, k), M> = <x, conv_adjoint(M)> for all x, M.
// Componentwise r[p] = sum_j M[(p + j) mod n, j].
Vec conv_adjoint(const Mat& M);

// Allocation-free variants for the solver inner loop; outputs are resized
// as needed and then filled column-by-column with segment copies.
void conv_matrix_into(const Vec& x, int k, Mat& M);
void conv_adjoint_into(const Mat& M, Vec& r);

}  // namespace intervalcast::convop
