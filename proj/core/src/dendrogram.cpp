#include "hcc/dendrogram.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace hcc {

Dendrogram Dendrogram::from_merges(std::size_t leaf_count,
                                   std::vector<MergeRecord> merges,
                                   std::optional<LinkageCriterion> built_with) {
  if (leaf_count == 0) {
    throw Error(ErrorCode::EmptyInput, "dendrogram needs at least one leaf");
  }
  if (merges.size() != leaf_count - 1) {
    throw Error(ErrorCode::InvalidArgument,
                "dendrogram over " + std::to_string(leaf_count) +
                    " leaves needs " + std::to_string(leaf_count - 1) +
                    " merges, got " + std::to_string(merges.size()));
  }

  const std::size_t nodes = 2 * leaf_count - 1;
  std::vector<std::uint8_t> used(nodes, 0);
  std::vector<std::uint32_t> levels(nodes, 0);
  std::vector<std::uint32_t> sizes(nodes, 1);

  for (std::size_t t = 0; t < merges.size(); ++t) {
    const MergeRecord& m = merges[t];
    const std::uint32_t id = static_cast<std::uint32_t>(leaf_count + t);
    const std::string at = "merge " + std::to_string(t);
    if (m.left == m.right) {
      throw Error(ErrorCode::InvalidArgument, at + ": identical children");
    }
    if (m.left >= id || m.right >= id) {
      throw Error(ErrorCode::InvalidArgument,
                  at + ": child id must refer to an earlier node");
    }
    if (used[m.left] || used[m.right]) {
      throw Error(ErrorCode::InvalidArgument,
                  at + ": node already used as a child");
    }
    used[m.left] = used[m.right] = 1;
    if (m.size != sizes[m.left] + sizes[m.right]) {
      throw Error(ErrorCode::InvalidArgument,
                  at + ": size must equal the children's total, expected " +
                      std::to_string(sizes[m.left] + sizes[m.right]) +
                      ", got " + std::to_string(m.size));
    }
    sizes[id] = m.size;
    levels[id] = std::max(levels[m.left], levels[m.right]) + 1;
  }
  if (leaf_count > 1 && merges.back().size != leaf_count) {
    throw Error(ErrorCode::InvalidArgument, "root must cover all leaves");
  }

  Dendrogram d;
  d.n_ = leaf_count;
  d.merges_ = std::move(merges);
  d.levels_ = std::move(levels);
  d.built_with_ = built_with;
  return d;
}

std::vector<std::uint32_t> Dendrogram::parents() const {
  std::vector<std::uint32_t> parent(node_count(),
                                    static_cast<std::uint32_t>(node_count()));
  for (std::size_t t = 0; t < merges_.size(); ++t) {
    const std::uint32_t id = static_cast<std::uint32_t>(n_ + t);
    parent[merges_[t].left] = id;
    parent[merges_[t].right] = id;
  }
  return parent;
}

bool Dendrogram::monotone_linkage() const {
  for (std::size_t t = 1; t < merges_.size(); ++t) {
    if (merges_[t].linkage < merges_[t - 1].linkage) return false;
  }
  return true;
}

double Dendrogram::min_linkage() const {
  double m = std::numeric_limits<double>::infinity();
  for (const MergeRecord& r : merges_) m = std::min(m, r.linkage);
  return merges_.empty() ? 0.0 : m;
}

}  // namespace hcc
