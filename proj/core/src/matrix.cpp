#include "hcc/matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace hcc {

namespace {

std::string entry_text(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

SignedMatrix validate_matrix(const std::vector<std::vector<double>>& raw,
                             MatrixKind kind) {
  const std::size_t n = raw.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) {
      throw Error(ErrorCode::NonSquare,
                  "matrix row " + std::to_string(i) + " has " +
                      std::to_string(raw[i].size()) + " entries, expected " +
                      std::to_string(n));
    }
    flat.insert(flat.end(), raw[i].begin(), raw[i].end());
  }
  return validate_matrix(n, std::move(flat), kind);
}

SignedMatrix validate_matrix(std::size_t n, std::vector<double> raw,
                             MatrixKind kind) {
  if (raw.size() != n * n) {
    throw Error(ErrorCode::NonSquare,
                "expected " + std::to_string(n * n) + " entries for a " +
                    std::to_string(n) + "x" + std::to_string(n) +
                    " matrix, got " + std::to_string(raw.size()));
  }
  double max_abs = 0.0;
  for (std::size_t idx = 0; idx < raw.size(); ++idx) {
    if (!std::isfinite(raw[idx])) {
      throw Error(ErrorCode::NonFinite,
                  "non-finite entry at " + entry_text(idx / n, idx % n));
    }
    max_abs = std::max(max_abs, std::fabs(raw[idx]));
  }
  const double tol = 1e-12 * max_abs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::fabs(raw[i * n + j] - raw[j * n + i]) > tol) {
        throw Error(ErrorCode::Asymmetric,
                    "asymmetric entries at " + entry_text(i, j) + ": " +
                        std::to_string(raw[i * n + j]) + " vs " +
                        std::to_string(raw[j * n + i]));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) raw[i * n + i] = 0.0;
  return SignedMatrix(n, kind, std::move(raw));
}

SignedMatrix negate(const SignedMatrix& m) {
  const std::size_t n = m.size();
  std::vector<double> out(m.values());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) out[i * n + j] = -out[i * n + j];
    }
  }
  const MatrixKind flipped = m.kind() == MatrixKind::Similarity
                                 ? MatrixKind::Dissimilarity
                                 : MatrixKind::Similarity;
  return validate_matrix(n, std::move(out), flipped);
}

SignedMatrix shift(const SignedMatrix& m, double alpha) {
  if (!std::isfinite(alpha)) {
    throw Error(ErrorCode::NonFinite, "shift by non-finite alpha");
  }
  const std::size_t n = m.size();
  std::vector<double> out(m.values());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) out[i * n + j] += alpha;
    }
  }
  return validate_matrix(n, std::move(out), m.kind());
}

}  // namespace hcc
