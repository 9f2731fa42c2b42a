#include "transform/transform.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "convop/convop.hpp"
#include "core/errors.hpp"

namespace intervalcast::transform {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Basis real_dft_basis(int m) {
  if (m < 1) throw ConfigError("real_dft_basis: m must be positive");
  Basis out;
  out.B.resize(m, m);
  out.bands.reserve(m);
  int col = 0;
  out.B.col(col++).setConstant(1.0 / std::sqrt(double(m)));
  out.bands.push_back(0);
  const double amp = std::sqrt(2.0 / m);
  for (int f = 1; 2 * f < m; ++f) {
    for (int t = 0; t < m; ++t)
      out.B(t, col) = amp * std::cos(kTwoPi * f * t / m);
    out.bands.push_back(f);
    ++col;
    for (int t = 0; t < m; ++t)
      out.B(t, col) = amp * std::sin(kTwoPi * f * t / m);
    out.bands.push_back(f);
    ++col;
  }
  if (m % 2 == 0) {
    for (int t = 0; t < m; ++t)
      out.B(t, col) = ((t % 2 == 0) ? 1.0 : -1.0) / std::sqrt(double(m));
    out.bands.push_back(m / 2);
    ++col;
  }
  return out;
}

Basis analysis_basis(int m) { return real_dft_basis(m); }

Mat padded_identity(int m) {
  if (m < 1) throw ConfigError("padded_identity: m must be positive");
  Mat A(2 * m, m);
  A.topRows(m) = Mat::Identity(m, m);
  A.bottomRows(m) = Mat::Identity(m, m);
  return A / std::sqrt(2.0);
}

Mat extract_training_samples(const std::vector<double>& series, int m,
                             int stride) {
  const int l = static_cast<int>(series.size());
  if (m < 1 || m > l)
    throw ConfigError("extract_training_samples: need 1 <= m <= series length");
  if (stride < 1) throw ConfigError("extract_training_samples: stride >= 1");
  const int n = (l - m) / stride + 1;
  Mat S(m, n);
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < m; ++t) S(t, i) = series[i * stride + t];
  return S;
}

Mat spectral_routing(const Mat& samples, int m, const TransformOptions& opts) {
  if (samples.rows() != m)
    throw ConfigError("spectral_routing: samples must have m rows");
  const int q = 2 * m;
  const Basis F = analysis_basis(m);
  const Basis G = real_dft_basis(q);

  // Mean squared coefficient per analysis atom across training windows.
  const Mat C = F.B.transpose() * samples;
  Vec power = C.array().square().rowwise().mean();
  const double total = power.sum();
  if (!(total > 0.0)) return padded_identity(m);

  // Collapse to band-level energies and rank bands by energy.
  std::map<int, double> band_energy;
  for (int j = 0; j < m; ++j) band_energy[F.bands[j]] += power[j];
  std::vector<std::pair<int, double>> bands(band_energy.begin(),
                                            band_energy.end());
  std::stable_sort(bands.begin(), bands.end(),
                   [](const auto& a, const auto& b) {
                     return a.second > b.second;
                   });
  std::map<int, int> rank_of;
  for (size_t i = 0; i < bands.size(); ++i) rank_of[bands[i].first] = int(i);
  // Smallest number of bands capturing the energy threshold.
  int r = 0;
  double acc = 0.0;
  for (const auto& [tag, e] : bands) {
    acc += e;
    ++r;
    if (acc / total >= opts.energy_threshold) break;
  }

  // Gain per atom: logistic roll-off in band rank around the cut r, so the
  // transition from "own a q-sinusoid" to "share the leftovers" is smooth.
  const double slope = 2.0 * std::log(9.0) / opts.ramp_width;
  Vec a(m), b(m);
  for (int j = 0; j < m; ++j) {
    const double u = r - rank_of[F.bands[j]] - 0.5;
    a[j] = std::sqrt(1.0 / (1.0 + std::exp(-slope * u)));
    b[j] = std::sqrt(std::max(0.0, 1.0 - a[j] * a[j]));
  }

  // Primary q-column per atom: DC -> q DC, Fourier band f -> q band 2f
  // (cosine first, sine for the second atom of the pair). Collisions take
  // the first free column.
  auto qcol = [&](int f_target, bool want_sin) -> int {
    int first = -1, second = -1;
    for (int i = 0; i < q; ++i)
      if (G.bands[i] == f_target) {
        if (first < 0)
          first = i;
        else {
          second = i;
          break;
        }
      }
    if (first < 0) return -1;
    return (want_sin && second >= 0) ? second : first;
  };
  std::vector<bool> taken(q, false);
  std::vector<int> primary(m, -1);
  std::map<int, bool> seen_band;
  for (int j = 0; j < m; ++j) {
    const int f = F.bands[j];
    const bool sin_flag = seen_band.count(f) ? true : false;
    seen_band[f] = true;
    int tgt = (f == 0) ? qcol(0, false) : qcol(2 * f, sin_flag);
    if (tgt < 0 || taken[tgt]) {
      tgt = -1;
      for (int i = 0; i < q; ++i)
        if (!taken[i]) {
          tgt = i;
          break;
        }
    }
    taken[tgt] = true;
    primary[j] = tgt;
  }
  std::vector<int> free_cols;
  for (int i = 0; i < q; ++i)
    if (!taken[i]) free_cols.push_back(i);

  Mat R = Mat::Zero(q, m);
  for (int j = 0; j < m; ++j) {
    R(primary[j], j) = a[j];
    R(free_cols[j], j) = b[j];
  }
  return G.B * R * F.B.transpose();
}

LearnedTransform learn_transform(const std::vector<double>& series, int m,
                                 const TransformOptions& opts) {
  LearnedTransform out;
  if (static_cast<int>(series.size()) < m) {
    out.A = padded_identity(m);
    out.learner_tag = "padded_identity";
    return out;
  }
  const Mat S = extract_training_samples(series, m, opts.stride);
  if (S.isZero(0.0)) {
    // degenerate training set; routing has nothing to read
    out.A = padded_identity(m);
    out.learner_tag = "padded_identity";
    return out;
  }
  out.A = spectral_routing(S, m, opts);
  out.learner_tag = "spectral_routing";
  return out;
}

double average_conv_nuclear_norm(const Mat& A, const Mat& samples, int k) {
  double acc = 0.0;
  for (int i = 0; i < samples.cols(); ++i) {
    const Mat M = convop::conv_matrix(A * samples.col(i), k);
    acc += Eigen::BDCSVD<Mat>(M).singularValues().sum();
  }
  return acc / std::max<int>(1, int(samples.cols()));
}

void save_transform(const std::string& path, const LearnedTransform& t) {
  std::ofstream f(path);
  if (!f) throw IngestError("cannot write transform file: " + path);
  f << t.A.rows() << " " << t.A.cols() << " " << t.learner_tag << "\n";
  char buf[32];
  for (int i = 0; i < t.A.rows(); ++i) {
    for (int j = 0; j < t.A.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", t.A(i, j));
      f << buf << (j + 1 < t.A.cols() ? " " : "\n");
    }
  }
  if (!f) throw IngestError("failed writing transform file: " + path);
}

LearnedTransform load_transform(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IngestError("cannot read transform file: " + path);
  int q = 0, m = 0;
  LearnedTransform t;
  if (!(f >> q >> m >> t.learner_tag) || q < 1 || m < 1)
    throw IngestError("malformed transform header in " + path);
  t.A.resize(q, m);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < m; ++j)
      if (!(f >> t.A(i, j)))
        throw IngestError("truncated transform data in " + path);
  return t;
}

}  // namespace intervalcast::transform
