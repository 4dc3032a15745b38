#include "hcc/linkage.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

namespace hcc {

const char* criterion_name(LinkageCriterion c) {
  switch (c) {
    case LinkageCriterion::Single:
      return "single";
    case LinkageCriterion::Complete:
      return "complete";
    case LinkageCriterion::Average:
      return "average";
    case LinkageCriterion::Hcc:
      return "hcc";
  }
  return "unknown";
}

std::optional<LinkageCriterion> criterion_from_name(const std::string& name) {
  if (name == "single") return LinkageCriterion::Single;
  if (name == "complete") return LinkageCriterion::Complete;
  if (name == "average") return LinkageCriterion::Average;
  if (name == "hcc") return LinkageCriterion::Hcc;
  return std::nullopt;
}

namespace {

// Candidate pair ordered by (dissimilarity, min node id, max node id); the
// id part realizes the deterministic tie-break.
struct PairKey {
  double value = std::numeric_limits<double>::infinity();
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;

  bool operator<(const PairKey& o) const {
    if (value != o.value) return value < o.value;
    if (lo != o.lo) return lo < o.lo;
    return hi < o.hi;
  }
};

PairKey make_key(double value, std::uint32_t a, std::uint32_t b) {
  return PairKey{value, std::min(a, b), std::max(a, b)};
}

double merge_value(LinkageCriterion criterion, double to_left,
                   double to_right, std::uint32_t left_size,
                   std::uint32_t right_size) {
  switch (criterion) {
    case LinkageCriterion::Single:
      return std::min(to_left, to_right);
    case LinkageCriterion::Complete:
      return std::max(to_left, to_right);
    case LinkageCriterion::Average:
      return (left_size * to_left + right_size * to_right) /
             (left_size + right_size);
    case LinkageCriterion::Hcc:
      return to_left + to_right;
  }
  return 0.0;
}

}  // namespace

Dendrogram agglomerate(const SignedMatrix& input, LinkageCriterion criterion) {
  const std::size_t n = input.size();
  if (n == 0) throw Error(ErrorCode::EmptyInput, "agglomerate: empty matrix");

  // The loop always minimizes a dissimilarity. For single/complete/average
  // that is D itself; for HCC the pair value sum(D_ij) = -sum(S_ij) starts
  // from the same pairwise entries and only the update rule differs.
  std::vector<double> dist = input.kind() == MatrixKind::Dissimilarity
                                 ? input.values()
                                 : negate(input).values();

  // Active clusters live in slots 0..n-1. A merge writes the new cluster
  // into the lower slot and kills the higher one; merge records list the
  // lower slot's cluster first.
  std::vector<std::uint8_t> alive(n, 1);
  std::vector<std::uint32_t> node_id(n);
  std::iota(node_id.begin(), node_id.end(), 0);
  std::vector<std::uint32_t> cluster_size(n, 1);

  // Per-slot nearest-neighbor bookkeeping: the best pair involving this slot.
  std::vector<PairKey> nn_key(n);
  std::vector<std::uint32_t> nn_slot(n, 0);

  auto recompute_nn = [&](std::uint32_t s) {
    PairKey best;
    std::uint32_t best_slot = s;
    for (std::uint32_t w = 0; w < n; ++w) {
      if (!alive[w] || w == s) continue;
      const PairKey key = make_key(dist[s * n + w], node_id[s], node_id[w]);
      if (key < best) {
        best = key;
        best_slot = w;
      }
    }
    nn_key[s] = best;
    nn_slot[s] = best_slot;
  };

  for (std::uint32_t s = 0; s < n; ++s) recompute_nn(s);

  std::vector<MergeRecord> merges;
  merges.reserve(n - 1);

  for (std::size_t t = 0; t + 1 < n; ++t) {
    PairKey best;
    std::uint32_t best_slot = 0;
    for (std::uint32_t s = 0; s < n; ++s) {
      if (alive[s] && nn_key[s] < best) {
        best = nn_key[s];
        best_slot = s;
      }
    }
    const std::uint32_t p = std::min(best_slot, nn_slot[best_slot]);
    const std::uint32_t q = std::max(best_slot, nn_slot[best_slot]);

    const std::uint32_t new_id = static_cast<std::uint32_t>(n + t);
    MergeRecord rec;
    rec.left = node_id[p];
    rec.right = node_id[q];
    rec.linkage = dist[p * n + q];
    rec.size = cluster_size[p] + cluster_size[q];
    merges.push_back(rec);

    for (std::uint32_t w = 0; w < n; ++w) {
      if (!alive[w] || w == p || w == q) continue;
      const double d = merge_value(criterion, dist[w * n + p],
                                   dist[w * n + q], cluster_size[p],
                                   cluster_size[q]);
      dist[w * n + p] = d;
      dist[p * n + w] = d;
    }
    alive[q] = 0;
    node_id[p] = new_id;
    cluster_size[p] = rec.size;

    // Slots whose nearest neighbor was consumed need a rescan; everyone else
    // only has the new cluster as a possible improvement.
    recompute_nn(p);
    for (std::uint32_t w = 0; w < n; ++w) {
      if (!alive[w] || w == p) continue;
      if (nn_slot[w] == p || nn_slot[w] == q) {
        recompute_nn(w);
      } else {
        const PairKey key = make_key(dist[w * n + p], node_id[w], new_id);
        if (key < nn_key[w]) {
          nn_key[w] = key;
          nn_slot[w] = p;
        }
      }
    }
  }

  return Dendrogram::from_merges(n, std::move(merges), criterion);
}

Partition cut(const Dendrogram& d, std::size_t k) {
  const std::size_t n = d.leaf_count();
  if (k < 1 || k > n) {
    throw Error(ErrorCode::KOutOfRange,
                "cut: k must be in [1, " + std::to_string(n) + "], got " +
                    std::to_string(k));
  }

  // Keep the first n-k merges; the forest then has exactly k trees.
  std::vector<std::uint32_t> up(d.node_count());
  std::iota(up.begin(), up.end(), 0);
  for (std::size_t t = 0; t + k < n; ++t) {
    const MergeRecord& m = d.merges()[t];
    const std::uint32_t id = static_cast<std::uint32_t>(n + t);
    up[m.left] = id;
    up[m.right] = id;
  }
  auto find_root = [&](std::uint32_t x) {
    while (up[x] != x) {
      up[x] = up[up[x]];
      x = up[x];
    }
    return x;
  };

  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> root_label(d.node_count(), kUnset);
  std::vector<std::uint32_t> labels(n);
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t r = find_root(static_cast<std::uint32_t>(i));
    if (root_label[r] == kUnset) root_label[r] = next++;
    labels[i] = root_label[r];
  }
  return Partition(std::move(labels));
}

}  // namespace hcc
