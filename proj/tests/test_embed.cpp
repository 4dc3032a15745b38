#include <cmath>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "hcc/dendro.hpp"
#include "hcc/embed.hpp"
#include "hcc/io.hpp"
#include "hcc/linkage.hpp"
#include "test_support.hpp"

using namespace hcc;
using hcc::test::error_code_of;

namespace {

UltrametricMatrix matrix3(std::vector<double> values) {
  return UltrametricMatrix::from_values(3, std::move(values));
}

double squared_distance(const Embedding& e, std::size_t i, std::size_t j) {
  double sq = 0.0;
  for (std::size_t k = 0; k < e.dims; ++k) {
    const double diff = e.coord(i, k) - e.coord(j, k);
    sq += diff * diff;
  }
  return sq;
}

}  // namespace

TEST_SUITE_BEGIN("embed");

TEST_CASE("gram of the two-point matrix is the hand-computed kernel") {
  const UltrametricMatrix d = UltrametricMatrix::from_values(2, {0, 4, 4, 0});
  const GramMatrix g = gram_from_distances(d);
  CHECK(g(0, 0) == 1.0);
  CHECK(g(0, 1) == -1.0);
  CHECK(g(1, 0) == -1.0);
  CHECK(g(1, 1) == 1.0);
}

TEST_CASE("gram of zeros is zeros and rows always sum to zero") {
  const UltrametricMatrix zeros =
      UltrametricMatrix::from_values(4, std::vector<double>(16, 0.0));
  const GramMatrix g = gram_from_distances(zeros);
  for (double v : g.values()) CHECK(v == 0.0);

  Rng rng(5);
  const Dendrogram tree = agglomerate(
      test::random_matrix(9, rng, MatrixKind::Similarity), LinkageCriterion::Hcc);
  const GramMatrix g2 =
      gram_from_distances(dendrogram_distances(tree, LevelKind::TreeLevel));
  for (std::size_t i = 0; i < g2.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < g2.size(); ++j) row += g2(i, j);
    CHECK(row == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("two points embed into one dimension with eigenvalue 2") {
  const UltrametricMatrix d = UltrametricMatrix::from_values(2, {0, 4, 4, 0});
  const Embedding e = embed(d);
  REQUIRE(e.dims == 1);
  CHECK(e.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-12));
  // Deterministic up to global sign.
  CHECK(std::fabs(e.coord(0, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.coord(0, 0) == doctest::Approx(-e.coord(1, 0)).epsilon(1e-12));
  CHECK(squared_distance(e, 0, 1) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("single point embeds into zero dimensions") {
  const UltrametricMatrix d = UltrametricMatrix::from_values(1, {0});
  const Embedding e = embed(d);
  CHECK(e.n == 1);
  CHECK(e.dims == 0);
}

TEST_CASE("three-leaf tree-level distances round-trip through coordinates") {
  const UltrametricMatrix d = matrix3({0, 1, 2, 1, 0, 2, 2, 2, 0});
  const Embedding e = embed(d);
  CHECK(reconstruction_error(e, d) <= 1e-6);

  // Truncating the rank-2 source to one dimension must lose something.
  const Embedding truncated = embed(d, 1);
  CHECK(truncated.dims == 1);
  CHECK(reconstruction_error(truncated, d) > 0.0);
}

TEST_CASE("reconstruction_error edge cases") {
  const UltrametricMatrix d = matrix3({0, 1, 2, 1, 0, 2, 2, 2, 0});
  const Embedding collapsed{3, 0, {}, {}};
  CHECK(reconstruction_error(collapsed, d) ==
        doctest::Approx(2.0 / std::max(2.0, 1.0)));

  const Embedding wrong{2, 0, {}, {}};
  CHECK(*error_code_of([&] {
    reconstruction_error(wrong, d);
  }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("requesting more dimensions than objects fails") {
  const UltrametricMatrix d = UltrametricMatrix::from_values(2, {0, 4, 4, 0});
  CHECK(*error_code_of([&] { embed(d, 3); }) == ErrorCode::DimsTooLarge);
}

TEST_CASE("a matrix that is not squared-Euclidean raises NotPsd") {
  // 1-2-5 violates embeddability: the centered kernel has a clearly negative
  // eigenvalue, so both entry points must refuse.
  const UltrametricMatrix d = matrix3({0, 1, 5, 1, 0, 1, 5, 1, 0});
  CHECK(*error_code_of([&] { gram_from_distances(d); }) == ErrorCode::NotPsd);
  CHECK(*error_code_of([&] { embed(d); }) == ErrorCode::NotPsd);
}

TEST_CASE("a non-ultrametric but PSD matrix embeds faithfully, not wrongly") {
  // The triple-violation fixture is still squared-Euclidean; the embedding
  // must reproduce it instead of failing or distorting.
  const UltrametricMatrix d = matrix3({0, 1, 5, 1, 0, 2, 5, 2, 0});
  REQUIRE_FALSE(validate_ultrametric(d, 1e-9).ok());
  const Embedding e = embed(d);
  CHECK(reconstruction_error(e, d) <= 1e-6);
}

TEST_CASE("embedding invariants on random dendrogram distances") {
  Rng rng(31415);
  for (int rep = 0; rep < 8; ++rep) {
    const std::size_t n = 2 + uniform_below(rng, 63);
    const SignedMatrix s = test::random_matrix(n, rng, MatrixKind::Similarity);
    for (const auto criterion :
         {LinkageCriterion::Single, LinkageCriterion::Complete,
          LinkageCriterion::Average, LinkageCriterion::Hcc}) {
      const Dendrogram tree = agglomerate(s, criterion);
      for (const auto kind : {LevelKind::TreeLevel, LevelKind::LinkageValue}) {
        if (kind == LevelKind::LinkageValue && linkage_level_issue(tree)) {
          continue;
        }
        const UltrametricMatrix d = dendrogram_distances(tree, kind);
        const Embedding e = embed(d);
        CHECK(reconstruction_error(e, d) <= 1e-6);
        for (std::size_t j = 0; j < e.dims; ++j) {
          if (j) CHECK(e.eigenvalues[j] <= e.eigenvalues[j - 1]);
          CHECK(e.eigenvalues[j] >= 0.0);
          double norm_sq = 0.0;
          for (std::size_t i = 0; i < e.n; ++i) {
            norm_sq += e.coord(i, j) * e.coord(i, j);
          }
          CHECK(norm_sq ==
                doctest::Approx(e.eigenvalues[j]).epsilon(1e-8));
        }
      }
    }
  }
}

TEST_CASE("embedding files round-trip, including the empty embedding") {
  const UltrametricMatrix d = matrix3({0, 1, 2, 1, 0, 2, 2, 2, 0});
  const Embedding e = embed(d);
  std::ostringstream out;
  write_embedding(out, e);
  std::istringstream in(out.str());
  const Embedding back = read_embedding(in);
  CHECK(back.n == e.n);
  CHECK(back.dims == e.dims);
  CHECK(back.coords == e.coords);
  CHECK(back.eigenvalues == e.eigenvalues);

  const Embedding empty{2, 0, {}, {}};
  std::ostringstream out2;
  write_embedding(out2, empty);
  CHECK(out2.str() == "2 0\n\n\n\n");
  std::istringstream in2(out2.str());
  const Embedding back2 = read_embedding(in2);
  CHECK(back2.n == 2);
  CHECK(back2.dims == 0);
}

TEST_SUITE_END();
