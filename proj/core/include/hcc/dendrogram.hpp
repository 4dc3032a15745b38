#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hcc/criterion.hpp"
#include "hcc/error.hpp"

namespace hcc {

// One agglomerative merge: the two child node ids, the criterion's
// dissimilarity value at merge time, and the leaf count of the new node.
struct MergeRecord {
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  double linkage = 0.0;
  std::uint32_t size = 0;
};

// Merge tree over n leaves. Leaves are nodes 0..n-1 and merge t creates node
// n+t, so the root is node 2n-2. Immutable after construction.
class Dendrogram {
 public:
  // Validates the node-id discipline, child uniqueness, size sums, and that
  // the root covers all leaves, then derives per-node levels
  // (level(leaf) = 0, level(parent) = max(level children) + 1).
  static Dendrogram from_merges(
      std::size_t leaf_count, std::vector<MergeRecord> merges,
      std::optional<LinkageCriterion> built_with = std::nullopt);

  std::size_t leaf_count() const { return n_; }
  std::size_t node_count() const { return 2 * n_ - 1; }
  std::uint32_t root() const { return static_cast<std::uint32_t>(2 * n_ - 2); }
  bool is_leaf(std::uint32_t node) const { return node < n_; }

  const std::vector<MergeRecord>& merges() const { return merges_; }
  const MergeRecord& merge_of(std::uint32_t node) const {
    return merges_[node - n_];
  }

  std::uint32_t level(std::uint32_t node) const { return levels_[node]; }
  std::uint32_t size_of(std::uint32_t node) const {
    return is_leaf(node) ? 1 : merges_[node - n_].size;
  }

  // parent[node] for every node except the root, which maps to node_count().
  std::vector<std::uint32_t> parents() const;

  // True when the merge linkage sequence is non-decreasing (holds for
  // single/complete/average; generally not for HCC).
  bool monotone_linkage() const;
  // Smallest internal-node linkage; meaningless for n == 1.
  double min_linkage() const;

  // Criterion that produced this tree, when known. File round-trips lose it.
  std::optional<LinkageCriterion> built_with() const { return built_with_; }

 private:
  Dendrogram() = default;

  std::size_t n_ = 0;
  std::vector<MergeRecord> merges_;
  std::vector<std::uint32_t> levels_;
  std::optional<LinkageCriterion> built_with_;
};

}  // namespace hcc
