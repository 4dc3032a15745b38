#include "hcc/eval.hpp"

#include <cmath>
#include <string>

#include "hcc/error.hpp"

namespace hcc {

namespace {

double entropy(const std::vector<std::size_t>& counts, std::size_t n) {
  double h = 0.0;
  for (const std::size_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(n);
    h -= p * std::log(p);
  }
  return h;
}

double mutual_info(const ContingencyTable& ct) {
  const double n = static_cast<double>(ct.total());
  double mi = 0.0;
  for (std::size_t i = 0; i < ct.rows(); ++i) {
    for (std::size_t j = 0; j < ct.cols(); ++j) {
      const std::size_t nij = ct.count(i, j);
      if (nij == 0) continue;
      const double pij = static_cast<double>(nij) / n;
      mi += pij * std::log(n * static_cast<double>(nij) /
                           (static_cast<double>(ct.row_sums()[i]) *
                            static_cast<double>(ct.col_sums()[j])));
    }
  }
  return mi;
}

// E[MI] under the permutation model: the hypergeometric expectation over all
// tables with the observed marginals.
double expected_mutual_info(const ContingencyTable& ct) {
  const std::size_t n = ct.total();
  const double dn = static_cast<double>(n);
  const double lg_n1 = std::lgamma(dn + 1.0);
  double emi = 0.0;
  for (const std::size_t a : ct.row_sums()) {
    for (const std::size_t b : ct.col_sums()) {
      const std::size_t lo = a + b > n ? a + b - n : 1;
      const std::size_t hi = std::min(a, b);
      const double da = static_cast<double>(a);
      const double db = static_cast<double>(b);
      for (std::size_t nij = std::max<std::size_t>(lo, 1); nij <= hi; ++nij) {
        const double dnij = static_cast<double>(nij);
        const double log_term = std::log(dn * dnij / (da * db));
        const double log_prob =
            std::lgamma(da + 1.0) - std::lgamma(dnij + 1.0) -
            std::lgamma(da - dnij + 1.0) + std::lgamma(dn - da + 1.0) -
            std::lgamma(db - dnij + 1.0) -
            std::lgamma(dn - da - db + dnij + 1.0) - lg_n1 +
            std::lgamma(db + 1.0) + std::lgamma(dn - db + 1.0);
        emi += (dnij / dn) * log_term * std::exp(log_prob);
      }
    }
  }
  return emi;
}

double pairs2(std::size_t c) {
  return 0.5 * static_cast<double>(c) * static_cast<double>(c - 1);
}

}  // namespace

ContingencyTable::ContingencyTable(const Partition& t, const Partition& p) {
  if (t.size() != p.size()) {
    throw Error(ErrorCode::SizeMismatch,
                "partitions of size " + std::to_string(t.size()) + " and " +
                    std::to_string(p.size()));
  }
  if (t.size() == 0) {
    throw Error(ErrorCode::EmptyInput, "empty partitions");
  }
  const Partition tc = t.canonical();
  const Partition pc = p.canonical();
  const std::size_t r = tc.cluster_count();
  const std::size_t c = pc.cluster_count();
  total_ = t.size();
  counts_.assign(r * c, 0);
  row_sums_.assign(r, 0);
  col_sums_.assign(c, 0);
  for (std::size_t i = 0; i < total_; ++i) {
    ++counts_[tc[i] * c + pc[i]];
    ++row_sums_[tc[i]];
    ++col_sums_[pc[i]];
  }
}

double adjusted_mutual_info(const Partition& t, const Partition& p) {
  const ContingencyTable ct(t, p);
  if (ct.rows() == 1 && ct.cols() == 1) return 1.0;  // degenerate agreement
  const double mi = mutual_info(ct);
  const double emi = expected_mutual_info(ct);
  const double ht = entropy(ct.row_sums(), ct.total());
  const double hp = entropy(ct.col_sums(), ct.total());
  const double denominator = 0.5 * (ht + hp) - emi;
  const double numerator = mi - emi;
  if (denominator == 0.0) return numerator == 0.0 ? 1.0 : 0.0;
  return numerator / denominator;
}

double adjusted_rand(const Partition& t, const Partition& p) {
  const ContingencyTable ct(t, p);
  const double total_pairs = pairs2(ct.total());
  if (total_pairs == 0.0) return 1.0;  // single object

  double sum_ij = 0.0;
  for (std::size_t i = 0; i < ct.rows(); ++i)
    for (std::size_t j = 0; j < ct.cols(); ++j)
      sum_ij += pairs2(ct.count(i, j));
  double sum_a = 0.0;
  for (const std::size_t a : ct.row_sums()) sum_a += pairs2(a);
  double sum_b = 0.0;
  for (const std::size_t b : ct.col_sums()) sum_b += pairs2(b);

  const double expected = sum_a * sum_b / total_pairs;
  const double numerator = sum_ij - expected;
  const double denominator = 0.5 * (sum_a + sum_b) - expected;
  if (denominator == 0.0) return numerator == 0.0 ? 1.0 : 0.0;
  return numerator / denominator;
}

double v_measure(const Partition& t, const Partition& p) {
  const ContingencyTable ct(t, p);
  const double n = static_cast<double>(ct.total());
  const double ht = entropy(ct.row_sums(), ct.total());
  const double hp = entropy(ct.col_sums(), ct.total());

  double h_t_given_p = 0.0;
  double h_p_given_t = 0.0;
  for (std::size_t i = 0; i < ct.rows(); ++i) {
    for (std::size_t j = 0; j < ct.cols(); ++j) {
      const std::size_t nij = ct.count(i, j);
      if (nij == 0) continue;
      const double pij = static_cast<double>(nij) / n;
      h_t_given_p -= pij * std::log(static_cast<double>(nij) /
                                    static_cast<double>(ct.col_sums()[j]));
      h_p_given_t -= pij * std::log(static_cast<double>(nij) /
                                    static_cast<double>(ct.row_sums()[i]));
    }
  }

  const double homogeneity = ht == 0.0 ? 1.0 : 1.0 - h_t_given_p / ht;
  const double completeness = hp == 0.0 ? 1.0 : 1.0 - h_p_given_t / hp;
  if (homogeneity + completeness == 0.0) return 0.0;
  return 2.0 * homogeneity * completeness / (homogeneity + completeness);
}

}  // namespace hcc
