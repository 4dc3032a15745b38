#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "doctest.h"
#include "hcc/dendro.hpp"
#include "hcc/linkage.hpp"
#include "test_support.hpp"

using namespace hcc;
using hcc::test::error_code_of;

namespace {

// Every merge history over n leaves, handed to the callback as a Dendrogram
// with linkage t+1 at merge t (a positive, strictly increasing level
// function, so both level kinds are valid).
void for_each_dendrogram(std::size_t n,
                         const std::function<void(const Dendrogram&)>& fn) {
  std::vector<std::uint32_t> active(n);
  for (std::uint32_t i = 0; i < n; ++i) active[i] = i;
  std::vector<MergeRecord> merges;
  std::vector<std::uint32_t> sizes(2 * n - 1, 1);

  std::function<void()> recurse = [&] {
    if (active.size() == 1) {
      fn(Dendrogram::from_merges(n, merges));
      return;
    }
    const std::size_t t = n - active.size();
    const auto id = static_cast<std::uint32_t>(n + t);
    for (std::size_t p = 0; p < active.size(); ++p) {
      for (std::size_t q = p + 1; q < active.size(); ++q) {
        const std::uint32_t left = active[p];
        const std::uint32_t right = active[q];
        sizes[id] = sizes[left] + sizes[right];
        merges.push_back(
            {left, right, static_cast<double>(t + 1), sizes[id]});
        active[p] = id;
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(q));
        recurse();
        active.insert(active.begin() + static_cast<std::ptrdiff_t>(q), right);
        active[p] = left;
        merges.pop_back();
      }
    }
  };
  recurse();
}

// Literal minimization over all subdendrograms: the distance between i and j
// is the smallest f over nodes whose leaf set contains both.
std::vector<double> subdendrogram_minimization(const Dendrogram& d,
                                               LevelKind kind) {
  const std::size_t n = d.leaf_count();
  std::vector<std::uint64_t> members(d.node_count());
  std::vector<double> f(d.node_count(), 0.0);
  for (std::uint32_t i = 0; i < n; ++i) members[i] = std::uint64_t{1} << i;
  for (std::size_t t = 0; t < d.merges().size(); ++t) {
    const auto id = static_cast<std::uint32_t>(n + t);
    members[id] = members[d.merges()[t].left] | members[d.merges()[t].right];
    f[id] = kind == LevelKind::TreeLevel ? static_cast<double>(d.level(id))
                                         : d.merges()[t].linkage;
  }
  std::vector<double> out(n * n, 0.0);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      const std::uint64_t pair =
          (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t v = 0; v < d.node_count(); ++v) {
        if ((members[v] & pair) == pair) best = std::min(best, f[v]);
      }
      out[i * n + j] = best;
      out[j * n + i] = best;
    }
  }
  return out;
}

Dendrogram chain3() {
  return Dendrogram::from_merges(3, {{0, 1, 1.0, 2}, {3, 2, 2.0, 3}});
}

}  // namespace

TEST_SUITE_BEGIN("dendro");

TEST_CASE("level_of: leaves are zero under both kinds") {
  const Dendrogram d = chain3();
  CHECK(level_of(d, 0, LevelKind::TreeLevel) == 0.0);
  CHECK(level_of(d, 0, LevelKind::LinkageValue) == 0.0);
  CHECK(level_of(d, 4, LevelKind::TreeLevel) == 2.0);
}

TEST_CASE("level_of: single linkage values on the worked example") {
  const SignedMatrix dm = validate_matrix(
      {{0, 1, 4}, {1, 0, 2}, {4, 2, 0}}, MatrixKind::Dissimilarity);
  const Dendrogram d = agglomerate(dm, LinkageCriterion::Single);
  CHECK(level_of(d, 3, LevelKind::LinkageValue) == 1.0);
  CHECK(level_of(d, 4, LevelKind::LinkageValue) == 2.0);
  CHECK(*error_code_of([&] {
    level_of(d, 5, LevelKind::TreeLevel);
  }) == ErrorCode::InvalidArgument);
}

TEST_CASE("linkage level kind is refused where the shift is unjustified") {
  const SignedMatrix s = validate_matrix(
      {{0, 0.9, -0.2}, {0.9, 0, 0.3}, {-0.2, 0.3, 0}}, MatrixKind::Similarity);
  const Dendrogram hcc_tree = agglomerate(s, LinkageCriterion::Hcc);
  REQUIRE(hcc_tree.min_linkage() < 0.0);

  CHECK(*error_code_of([&] {
    level_of(hcc_tree, 3, LevelKind::LinkageValue);
  }) == ErrorCode::InvalidLevelKind);
  CHECK(*error_code_of([&] {
    dendrogram_distances(hcc_tree, LevelKind::LinkageValue);
  }) == ErrorCode::InvalidLevelKind);
  // TreeLevel always works.
  CHECK(dendrogram_distances(hcc_tree, LevelKind::TreeLevel).size() == 3);

  // Negative linkage with unknown provenance (file round-trip) is refused.
  const Dendrogram untagged =
      Dendrogram::from_merges(3, hcc_tree.merges());
  CHECK(*error_code_of([&] {
    dendrogram_distances(untagged, LevelKind::LinkageValue);
  }) == ErrorCode::InvalidLevelKind);

  // A decreasing linkage sequence is refused regardless of provenance.
  const Dendrogram nonmono =
      Dendrogram::from_merges(3, {{0, 1, 2.0, 2}, {3, 2, 1.0, 3}},
                              LinkageCriterion::Single);
  CHECK(*error_code_of([&] {
    dendrogram_distances(nonmono, LevelKind::LinkageValue);
  }) == ErrorCode::InvalidLevelKind);
}

TEST_CASE("canonical shift keeps order and makes values positive") {
  Rng rng(77);
  const SignedMatrix d =
      test::random_matrix(12, rng, MatrixKind::Dissimilarity, -3.0, 1.0);
  const Dendrogram tree = agglomerate(d, LinkageCriterion::Single);
  REQUIRE(tree.min_linkage() < 0.0);
  const double offset = canonical_linkage_shift(tree);
  CHECK(offset == doctest::Approx(-tree.min_linkage() +
                                  1e-9 * (1.0 + std::fabs(tree.min_linkage()))));
  for (std::size_t t = 0; t < tree.merges().size(); ++t) {
    const double f =
        level_of(tree, static_cast<std::uint32_t>(12 + t),
                 LevelKind::LinkageValue);
    CHECK(f > 0.0);
    CHECK(f == tree.merges()[t].linkage + offset);
  }
}

TEST_CASE("dendrogram_distances: worked examples") {
  const Dendrogram pair = Dendrogram::from_merges(2, {{0, 1, 0.5, 2}});
  const UltrametricMatrix two = dendrogram_distances(pair, LevelKind::TreeLevel);
  CHECK(two(0, 1) == 1.0);
  CHECK(two(0, 0) == 0.0);

  const UltrametricMatrix chain =
      dendrogram_distances(chain3(), LevelKind::TreeLevel);
  CHECK(chain(0, 1) == 1.0);
  CHECK(chain(0, 2) == 2.0);
  CHECK(chain(1, 2) == 2.0);

  const SignedMatrix dm = validate_matrix(
      {{0, 1, 4}, {1, 0, 2}, {4, 2, 0}}, MatrixKind::Dissimilarity);
  const Dendrogram single = agglomerate(dm, LinkageCriterion::Single);
  const UltrametricMatrix got =
      dendrogram_distances(single, LevelKind::LinkageValue);
  const std::vector<double> want{0, 1, 2, 1, 0, 2, 2, 2, 0};
  CHECK(got.values() == want);
}

TEST_CASE("validate_ultrametric: worked examples") {
  CHECK(validate_ultrametric(3, {0, 1, 2, 1, 0, 2, 2, 2, 0}, 1e-9).ok());
  CHECK(validate_ultrametric(2, {0, 3, 3, 0}, 1e-9).ok());

  const UltrametricReport bad =
      validate_ultrametric(3, {0, 1, 5, 1, 0, 2, 5, 2, 0}, 1e-9);
  CHECK_FALSE(bad.ok());
  REQUIRE(bad.triple_violation.has_value());
  CHECK(bad.triple_violation->i == 0);
  CHECK(bad.triple_violation->j == 2);
  CHECK(bad.triple_violation->k == 1);

  const UltrametricReport neg =
      validate_ultrametric(2, {0, -1, -1, 0}, 1e-9);
  REQUIRE(neg.negative_entry.has_value());
  CHECK(neg.negative_entry->i == 0);
  CHECK(neg.negative_entry->j == 1);

  const UltrametricReport asym =
      validate_ultrametric(2, {0, 1, 2, 0}, 1e-9);
  CHECK(asym.asymmetric_entry.has_value());

  const UltrametricReport diag =
      validate_ultrametric(2, {0.5, 1, 1, 0}, 1e-9);
  CHECK(diag.nonzero_diagonal == 0);

  const UltrametricReport zero =
      validate_ultrametric(3, {0, 0, 1, 0, 0, 1, 1, 1, 0}, 1e-9);
  CHECK(zero.zero_off_diagonal.has_value());
}

TEST_CASE("distances from any criterion and valid kind are ultrametric") {
  Rng rng(4321);
  for (int rep = 0; rep < 6; ++rep) {
    const std::size_t n = 2 + uniform_below(rng, 23);
    const SignedMatrix s = test::random_matrix(n, rng, MatrixKind::Similarity);
    for (const auto criterion :
         {LinkageCriterion::Single, LinkageCriterion::Complete,
          LinkageCriterion::Average, LinkageCriterion::Hcc}) {
      const Dendrogram d = agglomerate(s, criterion);
      for (const auto kind : {LevelKind::TreeLevel, LevelKind::LinkageValue}) {
        if (kind == LevelKind::LinkageValue && linkage_level_issue(d)) {
          continue;
        }
        const UltrametricMatrix m = dendrogram_distances(d, kind);
        const UltrametricReport report = validate_ultrametric(m, 1e-9);
        CAPTURE(report.describe());
        CHECK(report.ok());
        if (kind == LevelKind::TreeLevel) {
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              const double v = m(i, j);
              CHECK(v == std::floor(v));
              CHECK(v <= static_cast<double>(n - 1));
              if (i != j) CHECK(v >= 1.0);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("lca distances equal explicit minimization on every shape, n <= 7") {
  std::size_t total = 0;
  for (std::size_t n = 2; n <= 7; ++n) {
    std::size_t count = 0;
    for_each_dendrogram(n, [&](const Dendrogram& d) {
      ++count;
      for (const auto kind : {LevelKind::TreeLevel, LevelKind::LinkageValue}) {
        const UltrametricMatrix got = dendrogram_distances(d, kind);
        const std::vector<double> want = subdendrogram_minimization(d, kind);
        if (got.values() != want) {
          REQUIRE(got.values() == want);  // report with context once
        }
      }
    });
    total += count;
  }
  // Merge histories: prod of C(m,2) for m = n..2.
  CHECK(total == 1 + 3 + 18 + 180 + 2700 + 56700);
}

TEST_SUITE_END();
