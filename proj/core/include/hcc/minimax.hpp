#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hcc/matrix.hpp"
#include "hcc/partition.hpp"

namespace hcc {

// Unweighted graph keeping only the strictly positive similarity edges.
class BinaryAdjacency {
 public:
  BinaryAdjacency() = default;
  BinaryAdjacency(std::size_t n, std::vector<std::uint8_t> edges)
      : n_(n), edges_(std::move(edges)) {}

  bool edge(std::size_t i, std::size_t j) const {
    return edges_[i * n_ + j] != 0;
  }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> edges_;
};

// Minimax distances: entry (i,j) is the minimum over all i-j paths of the
// largest edge weight on the path, computed as the maximum edge on the unique
// tree path of a minimum spanning tree (Prim, dense, deterministic tie-break
// by (weight, min id, max id)). Negative weights are handled directly.
SignedMatrix minimax_distances(const SignedMatrix& dissimilarities);

// Literal path-enumeration form of the same quantity; the test oracle.
// Rejects n > 10 (simple-path count grows factorially).
SignedMatrix minimax_bruteforce(const SignedMatrix& dissimilarities);

// Minimax similarities S^MM: negate to dissimilarities, take minimax
// distances, negate back.
SignedMatrix minimax_similarities(const SignedMatrix& similarities);

// Edge (i,j) present iff S_ij > 0 strictly.
BinaryAdjacency threshold_positive(const SignedMatrix& similarities);

// Connected components by union-find; labels canonical by smallest member id.
Partition components_cc(const BinaryAdjacency& a);

// Randomized pivot clustering on a +/-1 similarity matrix: pick a random
// unclustered object, cluster it with all unclustered positive neighbors,
// repeat. Fully determined by the seed.
Partition pivot_cc(const SignedMatrix& signed_similarities, std::uint64_t seed);

// Correlation-clustering cost: 1/2 sum of (|S|-S) over intra-cluster ordered
// pairs plus 1/2 sum of (|S|+S) over inter-cluster ordered pairs.
double cc_cost(const Partition& p, const SignedMatrix& similarities);

// Exact minimizer by enumerating all set partitions (n <= 10). Ties resolve
// to the lexicographically smallest canonical label vector.
std::pair<Partition, double> cc_bruteforce(const SignedMatrix& similarities);

}  // namespace hcc
