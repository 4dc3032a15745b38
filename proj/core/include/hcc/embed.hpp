#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hcc/dendro.hpp"
#include "hcc/error.hpp"

namespace hcc {

// Double-centered kernel -1/2 * A D A with A = I - (1/n) e e^T. Row sums are
// zero; for genuine dendrogram distances it is positive semidefinite.
class GramMatrix {
 public:
  GramMatrix() = default;

  double operator()(std::size_t i, std::size_t j) const {
    return values_[i * n_ + j];
  }
  std::size_t size() const { return n_; }
  const std::vector<double>& values() const { return values_; }

 private:
  GramMatrix(std::size_t n, std::vector<double> values)
      : n_(n), values_(std::move(values)) {}

  std::size_t n_ = 0;
  std::vector<double> values_;

  friend GramMatrix gram_from_distances(const UltrametricMatrix&);
};

// Coordinates whose pairwise squared Euclidean distances reproduce the source
// distance matrix. Column j has squared norm eigenvalues[j].
struct Embedding {
  std::size_t n = 0;
  std::size_t dims = 0;
  std::vector<double> coords;       // n x dims, row-major
  std::vector<double> eigenvalues;  // nonincreasing, all >= 0

  double coord(std::size_t i, std::size_t j) const {
    return coords[i * dims + j];
  }
};

// Centers the distance matrix and verifies positive semidefiniteness
// (eigenvalues below -1e-8 * lambda_max raise NotPsd).
GramMatrix gram_from_distances(const UltrametricMatrix& d);

// Classical scaling: eigendecomposition of the centered kernel, eigenvalues
// clamped to zero inside the tolerance band, coordinates scaled by
// sqrt(eigenvalue). dims == nullopt keeps every eigenvalue above
// 1e-9 * lambda_max.
Embedding embed(const UltrametricMatrix& d,
                std::optional<std::size_t> dims = std::nullopt);

// max over pairs of |squared distance - d(i,j)| / max(d_max, 1).
double reconstruction_error(const Embedding& e, const UltrametricMatrix& d);

}  // namespace hcc
