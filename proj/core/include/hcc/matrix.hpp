#pragma once

#include <cstddef>
#include <vector>

#include "hcc/error.hpp"

namespace hcc {

enum class MatrixKind { Similarity, Dissimilarity };

// Symmetric n x n matrix of pairwise scores. Entries may be negative; the
// diagonal is always exactly zero. Immutable after construction.
class SignedMatrix {
 public:
  SignedMatrix() = default;

  double operator()(std::size_t i, std::size_t j) const {
    return values_[i * n_ + j];
  }
  std::size_t size() const { return n_; }
  MatrixKind kind() const { return kind_; }
  const std::vector<double>& values() const { return values_; }

 private:
  SignedMatrix(std::size_t n, MatrixKind kind, std::vector<double> values)
      : n_(n), kind_(kind), values_(std::move(values)) {}

  std::size_t n_ = 0;
  MatrixKind kind_ = MatrixKind::Similarity;
  std::vector<double> values_;

  friend SignedMatrix validate_matrix(std::size_t, std::vector<double>,
                                      MatrixKind);
};

// Checks squareness, finiteness and symmetry (|a_ij - a_ji| must not exceed
// 1e-12 * max|a|); the diagonal is forced to zero. Asymmetry is an error,
// never silently averaged away.
SignedMatrix validate_matrix(const std::vector<std::vector<double>>& raw,
                             MatrixKind kind);
SignedMatrix validate_matrix(std::size_t n, std::vector<double> raw,
                             MatrixKind kind);

// Entrywise negation with the kind flipped (D = -S). Exact involution.
SignedMatrix negate(const SignedMatrix& m);

// Adds alpha to every off-diagonal entry; the diagonal stays zero.
SignedMatrix shift(const SignedMatrix& m, double alpha);

}  // namespace hcc
