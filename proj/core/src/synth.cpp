#include "hcc/synth.hpp"

#include <string>
#include <vector>

#include "hcc/error.hpp"
#include "hcc/rng.hpp"

namespace hcc {

Partition planted_labels(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k < 1 || k > n) {
    throw Error(ErrorCode::KOutOfRange,
                "planted_labels: k must be in [1, " + std::to_string(n) +
                    "], got " + std::to_string(k));
  }
  Rng rng(seed);
  std::vector<std::uint32_t> labels(n);
  std::vector<std::uint8_t> present(k);
  for (;;) {
    std::fill(present.begin(), present.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = static_cast<std::uint32_t>(uniform_below(rng, k));
      present[labels[i]] = 1;
    }
    bool all = true;
    for (std::size_t c = 0; c < k; ++c) all = all && present[c];
    if (all) break;
  }
  return Partition(std::move(labels));
}

SignedMatrix noisy_similarities(const Partition& labels,
                                const NoiseConfig& cfg) {
  if (!(cfg.eta >= 0.0 && cfg.eta <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "noise eta must be in [0, 1], got " + std::to_string(cfg.eta));
  }
  const std::size_t n = labels.size();
  Rng rng(cfg.seed);
  std::vector<double> values(n * n, 0.0);
  // One flip coin then one magnitude per unordered pair, in i<j row-major
  // order, so the matrix is a pure function of (labels, eta, seed).
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool flip = uniform_unit(rng) < cfg.eta;
      const double magnitude = uniform_open_unit(rng);
      const bool same = labels[i] == labels[j];
      const double v = (same != flip) ? magnitude : -magnitude;
      values[i * n + j] = v;
      values[j * n + i] = v;
    }
  }
  return validate_matrix(n, std::move(values), MatrixKind::Similarity);
}

}  // namespace hcc
