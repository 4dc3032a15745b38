#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hcc {

// Flat clustering: one nonnegative cluster label per object.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::uint32_t> labels)
      : labels_(std::move(labels)) {}

  std::size_t size() const { return labels_.size(); }
  std::uint32_t operator[](std::size_t i) const { return labels_[i]; }
  const std::vector<std::uint32_t>& labels() const { return labels_; }

  // Relabels by first occurrence so labels cover 0..K-1.
  Partition canonical() const;
  std::size_t cluster_count() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<std::uint32_t> labels_;
};

// True when the two labelings induce the same partition of 0..n-1.
bool same_clustering(const Partition& a, const Partition& b);

}  // namespace hcc
