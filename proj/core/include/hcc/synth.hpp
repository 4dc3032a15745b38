#pragma once

#include <cstdint>

#include "hcc/matrix.hpp"
#include "hcc/partition.hpp"

namespace hcc {

// Flip-noise oracle settings: eta is the probability that a pair's similarity
// sign is reported inverted.
struct NoiseConfig {
  double eta = 0.0;
  std::uint64_t seed = 0;
};

// Uniform assignment of n objects to k clusters, redrawn until every cluster
// is non-empty.
Partition planted_labels(std::size_t n, std::size_t k, std::uint64_t seed);

// Similarities revealed by the noisy oracle: a same-cluster pair draws from
// (0,1) with probability 1-eta and from (-1,0) otherwise; a cross-cluster
// pair does the opposite. One flip coin then one magnitude per unordered pair
// in row-major (i<j) order; entries are never exactly zero off the diagonal.
SignedMatrix noisy_similarities(const Partition& labels,
                                const NoiseConfig& cfg);

}  // namespace hcc
