#include "hcc/embed.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace hcc {

namespace {

// -1/2 * A D A written entrywise through the row/grand means.
Eigen::MatrixXd centered_kernel(const UltrametricMatrix& d) {
  const std::size_t n = d.size();
  Eigen::MatrixXd w(n, n);
  std::vector<double> row_mean(n, 0.0);
  double grand = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += d(i, j);
    row_mean[i] = s / static_cast<double>(n);
    grand += s;
  }
  grand /= static_cast<double>(n) * static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          -0.5 * (d(i, j) - row_mean[i] - row_mean[j] + grand);
    }
  }
  return w;
}

void check_psd(double min_eig, double max_eig) {
  const double band = 1e-8 * std::max(max_eig, 0.0);
  if (min_eig < -band) {
    throw Error(ErrorCode::NotPsd,
                "centered kernel has eigenvalue " + std::to_string(min_eig) +
                    " below -" + std::to_string(band) +
                    "; input is not a dendrogram distance matrix");
  }
}

}  // namespace

GramMatrix gram_from_distances(const UltrametricMatrix& d) {
  const std::size_t n = d.size();
  if (n == 0) return GramMatrix(0, {});
  const Eigen::MatrixXd w = centered_kernel(d);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      w, Eigen::EigenvaluesOnly);
  check_psd(solver.eigenvalues().minCoeff(), solver.eigenvalues().maxCoeff());
  std::vector<double> values(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      values[i * n + j] = w(static_cast<Eigen::Index>(i),
                            static_cast<Eigen::Index>(j));
  return GramMatrix(n, std::move(values));
}

Embedding embed(const UltrametricMatrix& d, std::optional<std::size_t> dims) {
  const std::size_t n = d.size();
  if (dims && *dims > n) {
    throw Error(ErrorCode::DimsTooLarge,
                "requested " + std::to_string(*dims) + " dimensions for " +
                    std::to_string(n) + " objects");
  }
  if (n == 0) return Embedding{};

  const Eigen::MatrixXd w = centered_kernel(d);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(w);
  const Eigen::VectorXd& raw = solver.eigenvalues();  // ascending
  const double max_eig = raw(static_cast<Eigen::Index>(n) - 1);
  check_psd(raw(0), max_eig);

  // Nonincreasing order, negatives inside the band clamped to zero.
  std::vector<double> eigenvalues(n);
  for (std::size_t j = 0; j < n; ++j) {
    eigenvalues[j] = std::max(raw(static_cast<Eigen::Index>(n - 1 - j)), 0.0);
  }

  std::size_t keep;
  if (dims) {
    keep = *dims;
  } else {
    const double cutoff = 1e-9 * std::max(max_eig, 0.0);
    keep = 0;
    while (keep < n && eigenvalues[keep] > cutoff) ++keep;
  }

  Embedding e;
  e.n = n;
  e.dims = keep;
  e.eigenvalues.assign(eigenvalues.begin(), eigenvalues.begin() + keep);
  e.coords.resize(n * keep);
  for (std::size_t j = 0; j < keep; ++j) {
    const double scale = std::sqrt(e.eigenvalues[j]);
    const auto col = solver.eigenvectors().col(
        static_cast<Eigen::Index>(n - 1 - j));
    for (std::size_t i = 0; i < n; ++i) {
      e.coords[i * keep + j] = scale * col(static_cast<Eigen::Index>(i));
    }
  }
  return e;
}

double reconstruction_error(const Embedding& e, const UltrametricMatrix& d) {
  if (e.n != d.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "embedding over " + std::to_string(e.n) +
                    " objects vs distances over " + std::to_string(d.size()));
  }
  const std::size_t n = e.n;
  double d_max = 0.0;
  for (double v : d.values()) d_max = std::max(d_max, v);

  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double sq = 0.0;
      for (std::size_t k = 0; k < e.dims; ++k) {
        const double diff = e.coord(i, k) - e.coord(j, k);
        sq += diff * diff;
      }
      worst = std::max(worst, std::fabs(sq - d(i, j)));
    }
  }
  return worst / std::max(d_max, 1.0);
}

}  // namespace hcc
