#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcc/dendrogram.hpp"

namespace hcc {

// Generalized level function over dendrogram nodes: zero exactly on leaves,
// increasing toward the root.
//
// TreeLevel is always usable. LinkageValue needs a non-decreasing linkage
// sequence; when the minimum internal linkage is negative it additionally
// needs a shift-invariant provenance (single/complete/average) so the
// canonical nonnegativity shift is justified.
enum class LevelKind { LinkageValue, TreeLevel };

// Distances read off a dendrogram: d(i,j) = f(lowest common ancestor).
// Satisfies d(i,j) <= max(d(i,k), d(k,j)) for all triples.
class UltrametricMatrix {
 public:
  UltrametricMatrix() = default;

  double operator()(std::size_t i, std::size_t j) const {
    return values_[i * n_ + j];
  }
  std::size_t size() const { return n_; }
  const std::vector<double>& values() const { return values_; }

  static UltrametricMatrix from_values(std::size_t n,
                                       std::vector<double> values);

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

// Reason LinkageValue cannot be used on this dendrogram, or nullopt if it can.
std::optional<std::string> linkage_level_issue(const Dendrogram& d);

// Additive constant applied to internal linkage values so the smallest one
// becomes positive: -m + 1e-9*(1+|m|) when the minimum linkage m is negative,
// otherwise 0. Leaves stay at 0.
double canonical_linkage_shift(const Dendrogram& d);

// f(node) under the requested kind. Leaves return 0 under both kinds.
double level_of(const Dendrogram& d, std::uint32_t node, LevelKind kind);

// The full pairwise distance matrix f(lca(i,j)). LCAs are found by walking
// parent pointers with per-leaf ancestor marking.
UltrametricMatrix dendrogram_distances(const Dendrogram& d, LevelKind kind);

// Outcome of checking a raw matrix against the ultrametric conditions.
// Violations are reported with their first witnessing indices, not thrown.
struct UltrametricReport {
  struct PairWitness {
    std::size_t i = 0, j = 0;
    double value = 0.0;
  };
  struct TripleWitness {
    std::size_t i = 0, j = 0, k = 0;
    double d_ij = 0.0, d_ik = 0.0, d_kj = 0.0;
  };

  std::optional<PairWitness> negative_entry;
  std::optional<PairWitness> asymmetric_entry;
  std::optional<std::size_t> nonzero_diagonal;
  // Distinct pair at distance ~0: the weakened "zero iff equal" condition.
  std::optional<PairWitness> zero_off_diagonal;
  // d(i,j) > max(d(i,k), d(k,j)) beyond tolerance.
  std::optional<TripleWitness> triple_violation;

  bool ok() const {
    return !negative_entry && !asymmetric_entry && !nonzero_diagonal &&
           !zero_off_diagonal && !triple_violation;
  }
  std::string describe() const;
};

UltrametricReport validate_ultrametric(std::size_t n,
                                       const std::vector<double>& values,
                                       double tol);
UltrametricReport validate_ultrametric(const UltrametricMatrix& m, double tol);

}  // namespace hcc
