#pragma once

#include "hcc/criterion.hpp"
#include "hcc/dendrogram.hpp"
#include "hcc/matrix.hpp"
#include "hcc/partition.hpp"

namespace hcc {

// Agglomerative merge loop over all four criteria. The input matrix may be of
// either kind; it is converted to the criterion's native kind internally
// (dissimilarities for single/complete/average, similarities for HCC).
//
// At each step the pair of clusters with minimal inter-cluster dissimilarity
// is merged (for HCC that is the maximal summed similarity, and the recorded
// linkage is the negated sum, which may be negative). Ties are broken by the
// lexicographically smallest (min node id, max node id) pair.
Dendrogram agglomerate(const SignedMatrix& m, LinkageCriterion criterion);

// Deletes the last k-1 merges and labels the resulting k trees by ascending
// smallest-leaf id.
Partition cut(const Dendrogram& d, std::size_t k);

}  // namespace hcc
