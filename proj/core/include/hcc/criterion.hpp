#pragma once

#include <optional>
#include <string>

namespace hcc {

// Single/Complete/Average merge by pairwise dissimilarities; Hcc merges by
// the summed inter-cluster similarity.
enum class LinkageCriterion { Single, Complete, Average, Hcc };

const char* criterion_name(LinkageCriterion c);
std::optional<LinkageCriterion> criterion_from_name(const std::string& name);

}  // namespace hcc
