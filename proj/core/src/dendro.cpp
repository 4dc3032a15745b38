#include "hcc/dendro.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace hcc {

UltrametricMatrix UltrametricMatrix::from_values(std::size_t n,
                                                 std::vector<double> values) {
  if (values.size() != n * n) {
    throw Error(ErrorCode::NonSquare, "ultrametric matrix must be n x n");
  }
  UltrametricMatrix m;
  m.n_ = n;
  m.values_ = std::move(values);
  return m;
}

std::optional<std::string> linkage_level_issue(const Dendrogram& d) {
  if (!d.monotone_linkage()) {
    return "linkage sequence is not non-decreasing";
  }
  if (d.leaf_count() > 1 && d.min_linkage() < 0.0) {
    // A negative minimum needs the canonical shift, which is justified by
    // shift invariance and therefore reserved for single/complete/average.
    if (!d.built_with()) {
      return "negative linkage values and unknown provenance; the "
             "nonnegativity shift cannot be justified";
    }
    if (*d.built_with() == LinkageCriterion::Hcc) {
      return "negative linkage values under the HCC criterion, which is not "
             "shift invariant";
    }
  }
  return std::nullopt;
}

double canonical_linkage_shift(const Dendrogram& d) {
  if (d.leaf_count() <= 1) return 0.0;
  const double m = d.min_linkage();
  if (m >= 0.0) return 0.0;
  return -m + 1e-9 * (1.0 + std::fabs(m));
}

double level_of(const Dendrogram& d, std::uint32_t node, LevelKind kind) {
  if (node >= d.node_count()) {
    throw Error(ErrorCode::InvalidArgument,
                "node " + std::to_string(node) + " out of range");
  }
  if (kind == LevelKind::TreeLevel) return d.level(node);
  if (const auto issue = linkage_level_issue(d)) {
    throw Error(ErrorCode::InvalidLevelKind, "linkage level: " + *issue);
  }
  if (d.is_leaf(node)) return 0.0;
  return d.merge_of(node).linkage + canonical_linkage_shift(d);
}

UltrametricMatrix dendrogram_distances(const Dendrogram& d, LevelKind kind) {
  const std::size_t n = d.leaf_count();
  if (kind == LevelKind::LinkageValue) {
    if (const auto issue = linkage_level_issue(d)) {
      throw Error(ErrorCode::InvalidLevelKind, "linkage level: " + *issue);
    }
  }

  std::vector<double> f(d.node_count(), 0.0);
  const double offset =
      kind == LevelKind::LinkageValue ? canonical_linkage_shift(d) : 0.0;
  for (std::size_t t = 0; t < d.merges().size(); ++t) {
    const std::uint32_t id = static_cast<std::uint32_t>(n + t);
    f[id] = kind == LevelKind::TreeLevel
                ? static_cast<double>(d.level(id))
                : d.merges()[t].linkage + offset;
  }

  // d(i,j) = f(lca(i,j)): mark leaf i's root path, then walk up from each j
  // until the first marked node.
  const std::vector<std::uint32_t> parent = d.parents();
  const std::uint32_t none = static_cast<std::uint32_t>(d.node_count());
  std::vector<std::uint32_t> mark(d.node_count(), none);
  std::vector<double> values(n * n, 0.0);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t a = i; a != none; a = parent[a]) mark[a] = i;
    for (std::uint32_t j = i + 1; j < n; ++j) {
      std::uint32_t a = j;
      while (mark[a] != i) a = parent[a];
      values[i * n + j] = f[a];
      values[j * n + i] = f[a];
    }
  }
  return UltrametricMatrix::from_values(n, std::move(values));
}

std::string UltrametricReport::describe() const {
  if (ok()) return "ultrametric";
  std::ostringstream out;
  if (negative_entry) {
    out << "negative entry at (" << negative_entry->i << ","
        << negative_entry->j << ") = " << negative_entry->value << "; ";
  }
  if (asymmetric_entry) {
    out << "asymmetric at (" << asymmetric_entry->i << ","
        << asymmetric_entry->j << "); ";
  }
  if (nonzero_diagonal) {
    out << "nonzero diagonal at " << *nonzero_diagonal << "; ";
  }
  if (zero_off_diagonal) {
    out << "distinct pair at zero distance (" << zero_off_diagonal->i << ","
        << zero_off_diagonal->j << "); ";
  }
  if (triple_violation) {
    out << "triple violation at (i,j,k)=(" << triple_violation->i << ","
        << triple_violation->j << "," << triple_violation->k
        << "): " << triple_violation->d_ij << " > max("
        << triple_violation->d_ik << "," << triple_violation->d_kj << "); ";
  }
  return out.str();
}

UltrametricReport validate_ultrametric(std::size_t n,
                                       const std::vector<double>& values,
                                       double tol) {
  if (values.size() != n * n) {
    throw Error(ErrorCode::NonSquare, "validate_ultrametric: matrix not n x n");
  }
  UltrametricReport report;

  for (std::size_t i = 0; i < n && !report.negative_entry; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (values[i * n + j] < -tol) {
        report.negative_entry =
            UltrametricReport::PairWitness{i, j, values[i * n + j]};
        break;
      }
    }
  }
  for (std::size_t i = 0; i < n && !report.asymmetric_entry; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::fabs(values[i * n + j] - values[j * n + i]) > tol) {
        report.asymmetric_entry =
            UltrametricReport::PairWitness{i, j, values[i * n + j]};
        break;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::fabs(values[i * n + i]) > tol) {
      report.nonzero_diagonal = i;
      break;
    }
  }
  for (std::size_t i = 0; i < n && !report.zero_off_diagonal; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::fabs(values[i * n + j]) <= tol) {
        report.zero_off_diagonal =
            UltrametricReport::PairWitness{i, j, values[i * n + j]};
        break;
      }
    }
  }
  for (std::size_t i = 0; i < n && !report.triple_violation; ++i) {
    for (std::size_t j = 0; j < n && !report.triple_violation; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double d_ij = values[i * n + j];
        const double d_ik = values[i * n + k];
        const double d_kj = values[k * n + j];
        if (d_ij > std::max(d_ik, d_kj) + tol) {
          report.triple_violation =
              UltrametricReport::TripleWitness{i, j, k, d_ij, d_ik, d_kj};
          break;
        }
      }
    }
  }
  return report;
}

UltrametricReport validate_ultrametric(const UltrametricMatrix& m,
                                       double tol) {
  return validate_ultrametric(m.size(), m.values(), tol);
}

}  // namespace hcc
