#include "hcc/experiment.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <string_view>

#include "hcc/error.hpp"
#include "hcc/eval.hpp"
#include "hcc/io.hpp"
#include "hcc/linkage.hpp"
#include "hcc/synth.hpp"

namespace hcc {

namespace {

[[noreturn]] void config_fail(const std::string& name, std::size_t line,
                              const std::string& what) {
  throw Error(ErrorCode::ParseError,
              name + ":" + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = value.find(',', start);
    const std::string_view item =
        comma == std::string_view::npos
            ? value.substr(start)
            : value.substr(start, comma - start);
    const std::string_view t = trim(item);
    if (!t.empty()) items.emplace_back(t);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

std::uint64_t parse_u64(std::string_view token, const std::string& name,
                        std::size_t line, const char* key) {
  std::uint64_t v = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    config_fail(name, line,
                std::string(key) + ": bad integer '" + std::string(token) +
                    "'");
  }
  return v;
}

double parse_f64(std::string_view token, const std::string& name,
                 std::size_t line, const char* key) {
  double v = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    config_fail(name, line,
                std::string(key) + ": bad number '" + std::string(token) +
                    "'");
  }
  return v;
}

std::string format_eta(double eta) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", eta);
  return buf;
}

double score(const std::string& measure, const Partition& truth,
             const Partition& estimate) {
  if (measure == "ami") return adjusted_mutual_info(truth, estimate);
  if (measure == "ari") return adjusted_rand(truth, estimate);
  return v_measure(truth, estimate);
}

}  // namespace

ExperimentConfig ExperimentConfig::parse(std::istream& in,
                                         const std::string& name) {
  ExperimentConfig cfg;
  bool has_n = false, has_k = false, has_eta = false, has_reps = false,
       has_seed = false, has_criteria = false, has_measures = false,
       has_out = false;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    const std::size_t eq = s.find('=');
    if (eq == std::string_view::npos) {
      config_fail(name, line_no, "expected key=value");
    }
    const std::string key{trim(s.substr(0, eq))};
    const std::string_view value = trim(s.substr(eq + 1));

    if (key == "n") {
      cfg.n = parse_u64(value, name, line_no, "n");
      has_n = true;
    } else if (key == "k") {
      cfg.k = parse_u64(value, name, line_no, "k");
      has_k = true;
    } else if (key == "eta") {
      for (const auto& item : split_list(value)) {
        cfg.etas.push_back(parse_f64(item, name, line_no, "eta"));
      }
      has_eta = true;
    } else if (key == "reps") {
      cfg.repetitions = parse_u64(value, name, line_no, "reps");
      has_reps = true;
    } else if (key == "seed") {
      cfg.seed = parse_u64(value, name, line_no, "seed");
      has_seed = true;
    } else if (key == "criteria") {
      for (const auto& item : split_list(value)) {
        const auto c = criterion_from_name(item);
        if (!c) config_fail(name, line_no, "unknown criterion '" + item + "'");
        cfg.criteria.push_back(*c);
      }
      has_criteria = true;
    } else if (key == "measures") {
      for (const auto& item : split_list(value)) {
        if (item != "ami" && item != "ari" && item != "v") {
          config_fail(name, line_no, "unknown measure '" + item + "'");
        }
        cfg.measures.push_back(item);
      }
      has_measures = true;
    } else if (key == "out") {
      cfg.out_path = std::string(value);
      has_out = true;
    } else {
      config_fail(name, line_no, "unknown key '" + key + "'");
    }
  }

  if (!has_n) config_fail(name, line_no, "missing key 'n'");
  if (!has_k) config_fail(name, line_no, "missing key 'k'");
  if (!has_eta || cfg.etas.empty()) {
    config_fail(name, line_no, "eta list must not be empty");
  }
  if (!has_reps) config_fail(name, line_no, "missing key 'reps'");
  if (!has_seed) config_fail(name, line_no, "missing key 'seed'");
  if (!has_criteria || cfg.criteria.empty()) {
    config_fail(name, line_no, "criteria list must not be empty");
  }
  if (!has_measures || cfg.measures.empty()) {
    config_fail(name, line_no, "measures list must not be empty");
  }
  if (!has_out) config_fail(name, line_no, "missing key 'out'");

  if (cfg.repetitions < 1) config_fail(name, line_no, "reps must be >= 1");
  if (cfg.n < 1) config_fail(name, line_no, "n must be >= 1");
  if (cfg.k < 1 || cfg.k > cfg.n) {
    config_fail(name, line_no, "k must be in [1, n]");
  }
  for (const double eta : cfg.etas) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
      config_fail(name, line_no, "eta values must be in [0, 1]");
    }
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open");
  return parse(in, path);
}

std::string run_experiment(const ExperimentConfig& cfg) {
  std::ostringstream per_rep;
  std::ostringstream aggregate;
  per_rep << "criterion,eta,repetition,measure,value\n";
  aggregate << "criterion,eta,measure,mean,stddev\n";

  for (const LinkageCriterion criterion : cfg.criteria) {
    for (const double eta : cfg.etas) {
      // values[measure index][rep]
      std::vector<std::vector<double>> values(cfg.measures.size());
      for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
        const std::uint64_t rep_seed = cfg.seed + rep;
        const Partition truth = planted_labels(cfg.n, cfg.k, rep_seed);
        const SignedMatrix similarities =
            noisy_similarities(truth, NoiseConfig{eta, rep_seed});
        const Partition estimate =
            cut(agglomerate(similarities, criterion), cfg.k);
        for (std::size_t m = 0; m < cfg.measures.size(); ++m) {
          const double v = score(cfg.measures[m], truth, estimate);
          values[m].push_back(v);
          per_rep << criterion_name(criterion) << ',' << format_eta(eta)
                  << ',' << rep << ',' << cfg.measures[m] << ','
                  << format_double(v) << '\n';
        }
      }
      for (std::size_t m = 0; m < cfg.measures.size(); ++m) {
        double mean = 0.0;
        for (const double v : values[m]) mean += v;
        mean /= static_cast<double>(values[m].size());
        double var = 0.0;
        for (const double v : values[m]) var += (v - mean) * (v - mean);
        var /= static_cast<double>(values[m].size());
        aggregate << criterion_name(criterion) << ',' << format_eta(eta)
                  << ',' << cfg.measures[m] << ',' << format_double(mean)
                  << ',' << format_double(std::sqrt(var)) << '\n';
      }
    }
  }
  return per_rep.str() + aggregate.str();
}

}  // namespace hcc
