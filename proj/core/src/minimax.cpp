#include "hcc/minimax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hcc/rng.hpp"

namespace hcc {

namespace {

void require_kind(const SignedMatrix& m, MatrixKind kind, const char* op) {
  if (m.kind() != kind) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(op) + ": expects a " +
                    (kind == MatrixKind::Similarity ? "similarity"
                                                    : "dissimilarity") +
                    " matrix");
  }
}

struct EdgeKey {
  double weight = std::numeric_limits<double>::infinity();
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;

  bool operator<(const EdgeKey& o) const {
    if (weight != o.weight) return weight < o.weight;
    if (lo != o.lo) return lo < o.lo;
    return hi < o.hi;
  }
};

EdgeKey edge_key(double w, std::uint32_t a, std::uint32_t b) {
  return EdgeKey{w, std::min(a, b), std::max(a, b)};
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> rank;

  explicit UnionFind(std::size_t n) : parent(n), rank(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank[a] < rank[b]) std::swap(a, b);
    parent[b] = a;
    if (rank[a] == rank[b]) ++rank[a];
  }
};

Partition first_occurrence_labels(std::size_t n,
                                  const std::vector<std::uint32_t>& group) {
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> label_of(n, kUnset);
  std::vector<std::uint32_t> labels(n);
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (label_of[group[i]] == kUnset) label_of[group[i]] = next++;
    labels[i] = label_of[group[i]];
  }
  return Partition(std::move(labels));
}

}  // namespace

SignedMatrix minimax_distances(const SignedMatrix& d) {
  require_kind(d, MatrixKind::Dissimilarity, "minimax_distances");
  const std::size_t n = d.size();
  if (n <= 1) return d;

  // Dense Prim from node 0. Ties resolve by (weight, min id, max id), so the
  // tree is deterministic; the minimax values do not depend on the choice.
  std::vector<std::uint8_t> in_tree(n, 0);
  std::vector<EdgeKey> best(n);
  std::vector<std::uint32_t> attach(n, 0);
  std::vector<std::vector<std::pair<std::uint32_t, double>>> tree(n);

  in_tree[0] = 1;
  for (std::uint32_t v = 1; v < n; ++v) best[v] = edge_key(d(0, v), 0, v);

  for (std::size_t added = 1; added < n; ++added) {
    std::uint32_t pick = 0;
    EdgeKey pick_key;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (!in_tree[v] && best[v] < pick_key) {
        pick_key = best[v];
        pick = v;
      }
    }
    in_tree[pick] = 1;
    tree[attach[pick]].emplace_back(pick, pick_key.weight);
    tree[pick].emplace_back(attach[pick], pick_key.weight);
    for (std::uint32_t v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      const EdgeKey candidate = edge_key(d(pick, v), pick, v);
      if (candidate < best[v]) {
        best[v] = candidate;
        attach[v] = pick;
      }
    }
  }

  // Minimax distance = largest edge on the unique tree path; one DFS per
  // source propagates the running maximum.
  std::vector<double> values(n * n, 0.0);
  std::vector<std::uint32_t> stack;
  for (std::uint32_t src = 0; src < n; ++src) {
    std::vector<std::uint8_t> seen(n, 0);
    seen[src] = 1;
    stack.assign(1, src);
    while (!stack.empty()) {
      const std::uint32_t u = stack.back();
      stack.pop_back();
      for (const auto& [v, w] : tree[u]) {
        if (seen[v]) continue;
        seen[v] = 1;
        values[src * n + v] =
            u == src ? w : std::max(values[src * n + u], w);
        stack.push_back(v);
      }
    }
  }
  return validate_matrix(n, std::move(values), MatrixKind::Dissimilarity);
}

SignedMatrix minimax_bruteforce(const SignedMatrix& d) {
  require_kind(d, MatrixKind::Dissimilarity, "minimax_bruteforce");
  const std::size_t n = d.size();
  if (n > 10) {
    throw Error(ErrorCode::TooLarge,
                "minimax_bruteforce: path enumeration is factorial, n <= 10");
  }
  if (n <= 1) return d;

  std::vector<double> values(n * n, 0.0);
  std::vector<std::uint8_t> visited(n, 0);

  // Enumerates every simple path from cur to target and minimizes the
  // per-path maximum edge weight.
  auto explore = [&](auto&& self, std::uint32_t cur, std::uint32_t target,
                     double path_max, double& best) -> void {
    if (cur == target) {
      best = std::min(best, path_max);
      return;
    }
    for (std::uint32_t next = 0; next < n; ++next) {
      if (visited[next]) continue;
      visited[next] = 1;
      self(self, next, target, std::max(path_max, d(cur, next)), best);
      visited[next] = 0;
    }
  };

  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      double best = std::numeric_limits<double>::infinity();
      std::fill(visited.begin(), visited.end(), 0);
      visited[i] = 1;
      explore(explore, i, j, -std::numeric_limits<double>::infinity(), best);
      values[i * n + j] = best;
      values[j * n + i] = best;
    }
  }
  return validate_matrix(n, std::move(values), MatrixKind::Dissimilarity);
}

SignedMatrix minimax_similarities(const SignedMatrix& s) {
  require_kind(s, MatrixKind::Similarity, "minimax_similarities");
  return negate(minimax_distances(negate(s)));
}

BinaryAdjacency threshold_positive(const SignedMatrix& s) {
  require_kind(s, MatrixKind::Similarity, "threshold_positive");
  const std::size_t n = s.size();
  std::vector<std::uint8_t> edges(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && s(i, j) > 0.0) edges[i * n + j] = 1;
    }
  }
  return BinaryAdjacency(n, std::move(edges));
}

Partition components_cc(const BinaryAdjacency& a) {
  const std::size_t n = a.size();
  UnionFind uf(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (a.edge(i, j)) uf.unite(i, j);
    }
  }
  std::vector<std::uint32_t> group(n);
  for (std::uint32_t i = 0; i < n; ++i) group[i] = uf.find(i);
  return first_occurrence_labels(n, group);
}

Partition pivot_cc(const SignedMatrix& s, std::uint64_t seed) {
  require_kind(s, MatrixKind::Similarity, "pivot_cc");
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && s(i, j) != 1.0 && s(i, j) != -1.0) {
        throw Error(ErrorCode::NotSigned,
                    "pivot_cc: entry (" + std::to_string(i) + "," +
                        std::to_string(j) + ") is not +1 or -1");
      }
    }
  }

  Rng rng(seed);
  std::vector<std::uint32_t> unclustered(n);
  std::iota(unclustered.begin(), unclustered.end(), 0);
  std::vector<std::uint32_t> labels(n, 0);
  std::uint32_t next_label = 0;

  while (!unclustered.empty()) {
    const std::size_t pick = static_cast<std::size_t>(
        uniform_below(rng, unclustered.size()));
    const std::uint32_t pivot = unclustered[pick];
    const std::uint32_t label = next_label++;
    labels[pivot] = label;
    std::vector<std::uint32_t> rest;
    rest.reserve(unclustered.size());
    for (const std::uint32_t u : unclustered) {
      if (u == pivot) continue;
      if (s(pivot, u) == 1.0) {
        labels[u] = label;
      } else {
        rest.push_back(u);
      }
    }
    unclustered = std::move(rest);
  }
  return Partition(std::move(labels)).canonical();
}

double cc_cost(const Partition& p, const SignedMatrix& s) {
  require_kind(s, MatrixKind::Similarity, "cc_cost");
  if (p.size() != s.size()) {
    throw Error(ErrorCode::SizeMismatch,
                "cc_cost: partition over " + std::to_string(p.size()) +
                    " objects vs matrix over " + std::to_string(s.size()));
  }
  const std::size_t n = s.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double v = s(i, j);
      total += p[i] == p[j] ? std::fabs(v) - v : std::fabs(v) + v;
    }
  }
  return 0.5 * total;
}

std::pair<Partition, double> cc_bruteforce(const SignedMatrix& s) {
  require_kind(s, MatrixKind::Similarity, "cc_bruteforce");
  const std::size_t n = s.size();
  if (n > 10) {
    throw Error(ErrorCode::TooLarge,
                "cc_bruteforce: set-partition enumeration, n <= 10");
  }
  if (n == 0) return {Partition{}, 0.0};

  // Restricted growth strings enumerate canonical label vectors in
  // lexicographic order, so the first minimizer is the lex-smallest one.
  std::vector<std::uint32_t> a(n, 0);
  std::vector<std::uint32_t> prefix_max(n, 0);
  std::vector<std::uint32_t> best_labels = a;
  double best_cost = cc_cost(Partition(a), s);

  auto next_rgs = [&]() -> bool {
    for (std::size_t i = n - 1; i > 0; --i) {
      if (a[i] <= prefix_max[i - 1]) {
        ++a[i];
        prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
          a[j] = 0;
          prefix_max[j] = prefix_max[i];
        }
        return true;
      }
    }
    return false;
  };

  while (next_rgs()) {
    const double cost = cc_cost(Partition(a), s);
    if (cost < best_cost) {
      best_cost = cost;
      best_labels = a;
    }
  }
  return {Partition(std::move(best_labels)), best_cost};
}

}  // namespace hcc
