#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hcc/partition.hpp"

namespace hcc {

// Joint label counts n_ij between two partitions plus their marginals.
class ContingencyTable {
 public:
  ContingencyTable(const Partition& t, const Partition& p);

  std::size_t rows() const { return row_sums_.size(); }
  std::size_t cols() const { return col_sums_.size(); }
  std::size_t total() const { return total_; }
  std::size_t count(std::size_t i, std::size_t j) const {
    return counts_[i * cols() + j];
  }
  const std::vector<std::size_t>& row_sums() const { return row_sums_; }
  const std::vector<std::size_t>& col_sums() const { return col_sums_; }

 private:
  std::size_t total_ = 0;
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> row_sums_;
  std::vector<std::size_t> col_sums_;
};

// Chance-adjusted mutual information, E[MI] under the permutation model,
// normalized by the arithmetic mean of the entropies. Natural logarithms.
double adjusted_mutual_info(const Partition& t, const Partition& p);

// Chance-adjusted Rand index via the pair-counting contingency formula.
double adjusted_rand(const Partition& t, const Partition& p);

// Harmonic mean of homogeneity and completeness.
double v_measure(const Partition& t, const Partition& p);

}  // namespace hcc
