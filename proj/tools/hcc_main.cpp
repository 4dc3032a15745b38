// Command-line front end. Every subcommand is a thin wrapper over the core
// library; all numeric work happens there.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hcc/dendro.hpp"
#include "hcc/embed.hpp"
#include "hcc/error.hpp"
#include "hcc/experiment.hpp"
#include "hcc/eval.hpp"
#include "hcc/io.hpp"
#include "hcc/linkage.hpp"
#include "hcc/minimax.hpp"
#include "hcc/synth.hpp"

namespace {

hcc::LinkageCriterion parse_criterion(const std::string& name) {
  const auto c = hcc::criterion_from_name(name);
  if (!c) {
    throw hcc::Error(hcc::ErrorCode::InvalidArgument,
                     "unknown criterion '" + name +
                         "' (expected single|complete|average|hcc)");
  }
  return *c;
}

hcc::LevelKind parse_level(const std::string& name) {
  if (name == "linkage") return hcc::LevelKind::LinkageValue;
  if (name == "level") return hcc::LevelKind::TreeLevel;
  throw hcc::Error(hcc::ErrorCode::InvalidArgument,
                   "unknown level kind '" + name +
                       "' (expected linkage|level)");
}

std::optional<std::size_t> parse_dims(const std::string& value) {
  if (value.empty() || value == "auto") return std::nullopt;
  std::size_t pos = 0;
  const unsigned long v = std::stoul(value, &pos);
  if (pos != value.size()) {
    throw hcc::Error(hcc::ErrorCode::InvalidArgument,
                     "--dims expects an integer or 'auto'");
  }
  return v;
}

int run(int argc, char** argv) {
  CLI::App app{
      "Hierarchical correlation clustering, tree-preserving embedding, and "
      "minimax correlation clustering"};
  app.require_subcommand(1);

  // cluster: matrix file in, dendrogram file out (labels too when --k given).
  std::string cluster_matrix, cluster_criterion, cluster_out;
  std::size_t cluster_k = 0;
  auto* cluster = app.add_subcommand(
      "cluster", "Agglomerate a similarity matrix into a dendrogram");
  cluster->add_option("matrix", cluster_matrix, "similarity matrix file")
      ->required();
  cluster->add_option("--criterion", cluster_criterion,
                      "single|complete|average|hcc")
      ->required();
  cluster->add_option("--k", cluster_k,
                      "also cut into k clusters (labels at <out>.labels)");
  cluster->add_option("--out", cluster_out, "dendrogram output path")
      ->required();

  // embed: dendrogram file in (or matrix + --criterion), embedding file out.
  std::string embed_input, embed_level, embed_criterion, embed_dims = "auto",
              embed_out;
  auto* embed_cmd = app.add_subcommand(
      "embed", "Tree-preserving embedding of dendrogram distances");
  embed_cmd
      ->add_option("input", embed_input,
                   "dendrogram file, or a similarity matrix file when "
                   "--criterion is given")
      ->required();
  embed_cmd->add_option("--level", embed_level, "linkage|level")->required();
  embed_cmd->add_option("--criterion", embed_criterion,
                        "cluster the input matrix first");
  embed_cmd->add_option("--dims", embed_dims, "dimension count or 'auto'");
  embed_cmd->add_option("--out", embed_out, "embedding output path")
      ->required();

  // minimax-cc: similarity matrix in, labels out.
  std::string mm_matrix, mm_out;
  auto* mm = app.add_subcommand(
      "minimax-cc",
      "Correlation clustering on minimax similarities (connected components)");
  mm->add_option("matrix", mm_matrix, "similarity matrix file")->required();
  mm->add_option("--out", mm_out, "labels output path")->required();

  // eval: two labels files, measure,value rows on stdout.
  std::string eval_truth, eval_pred;
  auto* eval_cmd =
      app.add_subcommand("eval", "Score a clustering against ground truth");
  eval_cmd->add_option("truth", eval_truth, "ground-truth labels file")
      ->required();
  eval_cmd->add_option("estimate", eval_pred, "estimated labels file")
      ->required();

  // synth: planted labels + noisy similarity matrix.
  std::size_t synth_n = 0, synth_k = 0;
  double synth_eta = 0.0;
  std::uint64_t synth_seed = 0;
  std::string synth_out;
  auto* synth = app.add_subcommand(
      "synth", "Planted labels and flip-noise similarities");
  synth->add_option("--n", synth_n, "object count")->required();
  synth->add_option("--k", synth_k, "cluster count")->required();
  synth->add_option("--eta", synth_eta, "flip probability in [0,1]")
      ->required();
  synth->add_option("--seed", synth_seed, "rng seed");
  synth->add_option("--out", synth_out,
                    "matrix output path (labels at <out>.labels)")
      ->required();

  // experiment: config file in, CSV at the config's out path.
  std::string experiment_config;
  auto* experiment = app.add_subcommand(
      "experiment", "Noise-sweep experiment driven by a key=value config");
  experiment->add_option("config", experiment_config, "config file")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (*cluster) {
    const hcc::SignedMatrix m =
        hcc::read_matrix_file(cluster_matrix, hcc::MatrixKind::Similarity);
    const hcc::Dendrogram d =
        hcc::agglomerate(m, parse_criterion(cluster_criterion));
    hcc::write_dendrogram_file(cluster_out, d);
    if (cluster->count("--k") > 0) {
      hcc::write_labels_file(cluster_out + ".labels", hcc::cut(d, cluster_k));
    }
  } else if (*embed_cmd) {
    const hcc::Dendrogram d =
        embed_cmd->count("--criterion") > 0
            ? hcc::agglomerate(hcc::read_matrix_file(
                                   embed_input, hcc::MatrixKind::Similarity),
                               parse_criterion(embed_criterion))
            : hcc::read_dendrogram_file(embed_input);
    const hcc::UltrametricMatrix distances =
        hcc::dendrogram_distances(d, parse_level(embed_level));
    const hcc::Embedding e = hcc::embed(distances, parse_dims(embed_dims));
    hcc::write_embedding_file(embed_out, e);
    std::cout << "reconstruction_error,"
              << hcc::format_double(hcc::reconstruction_error(e, distances))
              << '\n';
  } else if (*mm) {
    const hcc::SignedMatrix s =
        hcc::read_matrix_file(mm_matrix, hcc::MatrixKind::Similarity);
    const hcc::Partition p =
        hcc::components_cc(hcc::threshold_positive(hcc::minimax_similarities(s)));
    hcc::write_labels_file(mm_out, p);
  } else if (*eval_cmd) {
    const hcc::Partition truth = hcc::read_labels_file(eval_truth);
    const hcc::Partition estimate = hcc::read_labels_file(eval_pred);
    std::cout << "ami,"
              << hcc::format_double(hcc::adjusted_mutual_info(truth, estimate))
              << '\n'
              << "ari,"
              << hcc::format_double(hcc::adjusted_rand(truth, estimate))
              << '\n'
              << "v," << hcc::format_double(hcc::v_measure(truth, estimate))
              << '\n';
  } else if (*synth) {
    const hcc::Partition labels =
        hcc::planted_labels(synth_n, synth_k, synth_seed);
    const hcc::SignedMatrix m =
        hcc::noisy_similarities(labels, hcc::NoiseConfig{synth_eta, synth_seed});
    hcc::write_matrix_file(synth_out, m);
    hcc::write_labels_file(synth_out + ".labels", labels);
  } else if (*experiment) {
    const hcc::ExperimentConfig cfg =
        hcc::ExperimentConfig::parse_file(experiment_config);
    const std::string csv = hcc::run_experiment(cfg);
    std::ofstream out(cfg.out_path);
    if (!out) {
      throw hcc::Error(hcc::ErrorCode::ParseError,
                       cfg.out_path + ": cannot write");
    }
    out << csv;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hcc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
