#pragma once

#include <vector>

#include "hcc/matrix.hpp"
#include "hcc/rng.hpp"

namespace hcc::bench {

inline SignedMatrix random_matrix(std::size_t n, MatrixKind kind,
                                  std::uint64_t seed = 1234) {
  Rng rng(seed);
  std::vector<double> values(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = 2.0 * uniform_unit(rng) - 1.0;
      values[i * n + j] = v;
      values[j * n + i] = v;
    }
  }
  return validate_matrix(n, std::move(values), kind);
}

}  // namespace hcc::bench
