#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hcc/criterion.hpp"

namespace hcc {

// Noise-sweep protocol: for every criterion, eta, and repetition, plant
// labels, reveal noisy similarities, cluster, cut at k, and score against the
// planted truth. Parsed from flat key=value text.
struct ExperimentConfig {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<double> etas;
  std::size_t repetitions = 1;
  std::uint64_t seed = 0;
  std::vector<LinkageCriterion> criteria;
  std::vector<std::string> measures;  // subset of {"ami","ari","v"}
  std::string out_path;

  static ExperimentConfig parse(std::istream& in,
                                const std::string& name = "<stream>");
  static ExperimentConfig parse_file(const std::string& path);
};

// Runs the sweep and renders the CSV: per-repetition rows
// "criterion,eta,repetition,measure,value" followed by aggregate rows
// "criterion,eta,measure,mean,stddev", each block under its own header.
// Repetition r uses derived seed cfg.seed + r; output is a pure function of
// the config.
std::string run_experiment(const ExperimentConfig& cfg);

}  // namespace hcc
