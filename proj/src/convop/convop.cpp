#include "convop/convop.hpp"

#include "core/errors.hpp"

namespace intervalcast::convop {

void conv_matrix_into(const Vec& x, int k, Mat& M) {
  const int n = static_cast<int>(x.size());
  if (n < 1) throw DimensionError("conv_matrix: empty input");
  if (k < 1 || k > n) throw DimensionError("conv_matrix: k must be in [1, n]");
  M.resize(n, k);
  for (int j = 0; j < k; ++j) {
    // column j is x rotated down by j: M(i, j) = x[(i - j) mod n]
    if (j > 0) M.col(j).head(j) = x.tail(j);
    M.col(j).tail(n - j) = x.head(n - j);
  }
}

Mat conv_matrix(const Vec& x, int k) {
  Mat M;
  conv_matrix_into(x, k, M);
  return M;
}

void conv_adjoint_into(const Mat& M, Vec& r) {
  const int n = static_cast<int>(M.rows());
  const int k = static_cast<int>(M.cols());
  if (n < 1 || k < 1 || k > n)
    throw DimensionError("conv_adjoint: matrix must be n x k with 1 <= k <= n");
  r.setZero(n);
  for (int j = 0; j < k; ++j) {
    // r[p] += M[(p + j) mod n, j]
    r.head(n - j) += M.col(j).tail(n - j);
    if (j > 0) r.tail(j) += M.col(j).head(j);
  }
}

Vec conv_adjoint(const Mat& M) {
  Vec r;
  conv_adjoint_into(M, r);
  return r;
}

}  // namespace intervalcast::convop
