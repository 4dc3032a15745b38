#include "hcc/partition.hpp"

#include <unordered_map>

namespace hcc {

Partition Partition::canonical() const {
  std::unordered_map<std::uint32_t, std::uint32_t> relabel;
  relabel.reserve(labels_.size());
  std::vector<std::uint32_t> out(labels_.size());
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto [it, inserted] = relabel.try_emplace(labels_[i], next);
    if (inserted) ++next;
    out[i] = it->second;
  }
  return Partition(std::move(out));
}

std::size_t Partition::cluster_count() const {
  std::unordered_map<std::uint32_t, std::uint32_t> seen;
  seen.reserve(labels_.size());
  for (std::uint32_t l : labels_) seen.try_emplace(l, 0);
  return seen.size();
}

bool same_clustering(const Partition& a, const Partition& b) {
  return a.size() == b.size() && a.canonical() == b.canonical();
}

}  // namespace hcc
