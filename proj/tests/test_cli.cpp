// Golden-file tests for the hcc binary: one pinned output per subcommand,
// plus the error paths the formats force. The binary path comes from the
// build system.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "hcc/dendro.hpp"
#include "hcc/io.hpp"

namespace fs = std::filesystem;

namespace {

const char* kCli = HCC_CLI_PATH;

fs::path test_dir() {
  const fs::path dir = fs::temp_directory_path() / "hcc_cli_tests";
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_cli(const std::string& args, const fs::path& stdout_to = {},
            const fs::path& stderr_to = {}) {
  std::string cmd = std::string("\"") + kCli + "\" " + args;
  if (!stdout_to.empty()) cmd += " > " + stdout_to.string();
  if (!stderr_to.empty()) cmd += " 2> " + stderr_to.string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

constexpr const char* kS3 = "0,0.9,-0.2\n0.9,0,0.3\n-0.2,0.3,0\n";

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("cluster writes the pinned dendrogram and labels files") {
  const fs::path dir = test_dir();
  write_file(dir / "s3.txt", kS3);
  const int rc = run_cli("cluster " + (dir / "s3.txt").string() +
                         " --criterion hcc --k 2 --out " +
                         (dir / "dendro.txt").string());
  CHECK(rc == 0);
  CHECK(read_file(dir / "dendro.txt") ==
        "0,1,-0.90000000000000002,2,1\n"
        "3,2,-0.099999999999999978,3,2\n");
  CHECK(read_file(dir / "dendro.txt.labels") == "0\n0\n1\n");
}

TEST_CASE("cluster with k = n writes the identity labels") {
  const fs::path dir = test_dir();
  write_file(dir / "s3k.txt", kS3);
  const int rc = run_cli("cluster " + (dir / "s3k.txt").string() +
                         " --criterion average --k 3 --out " +
                         (dir / "kn.txt").string());
  CHECK(rc == 0);
  CHECK(read_file(dir / "kn.txt.labels") == "0\n1\n2\n");
}

TEST_CASE("a two-point dendrogram embeds into one dimension") {
  const fs::path dir = test_dir();
  write_file(dir / "pair.txt", "0,1,1,2,1\n");
  const int rc = run_cli("embed " + (dir / "pair.txt").string() +
                             " --level level --out " +
                             (dir / "pair_emb.txt").string(),
                         dir / "pair_emb.out");
  CHECK(rc == 0);
  const hcc::Embedding e =
      hcc::read_embedding_file((dir / "pair_emb.txt").string());
  CHECK(e.n == 2);
  CHECK(e.dims == 1);
}

TEST_CASE("cluster without --k writes no labels file") {
  const fs::path dir = test_dir();
  write_file(dir / "s3b.txt", kS3);
  fs::remove(dir / "plain.txt.labels");
  const int rc = run_cli("cluster " + (dir / "s3b.txt").string() +
                         " --criterion single --out " +
                         (dir / "plain.txt").string());
  CHECK(rc == 0);
  CHECK(fs::exists(dir / "plain.txt"));
  CHECK_FALSE(fs::exists(dir / "plain.txt.labels"));
}

TEST_CASE("cluster reports malformed rows with their line number") {
  const fs::path dir = test_dir();
  write_file(dir / "bad.txt", "0,1,2\n1,0\n2,3,0\n");
  const int rc = run_cli("cluster " + (dir / "bad.txt").string() +
                             " --criterion hcc --out " +
                             (dir / "never.txt").string(),
                         {}, dir / "bad.err");
  CHECK(rc == 1);
  CHECK(read_file(dir / "bad.err").find("bad.txt:2") != std::string::npos);
}

TEST_CASE("embed reports the reconstruction error and writes a faithful file") {
  const fs::path dir = test_dir();
  // Single-linkage dendrogram file over three leaves.
  write_file(dir / "tree.txt", "0,2,-4,2,1\n3,1,-2,3,2\n");
  const int rc = run_cli("embed " + (dir / "tree.txt").string() +
                             " --level level --out " +
                             (dir / "emb.txt").string(),
                         dir / "emb.out");
  CHECK(rc == 0);
  const std::string line = read_file(dir / "emb.out");
  REQUIRE(line.rfind("reconstruction_error,", 0) == 0);
  CHECK(std::stod(line.substr(line.find(',') + 1)) <= 1e-6);

  const hcc::Embedding e = hcc::read_embedding_file((dir / "emb.txt").string());
  REQUIRE(e.n == 3);
  const hcc::Dendrogram d =
      hcc::read_dendrogram_file((dir / "tree.txt").string());
  const hcc::UltrametricMatrix want =
      hcc::dendrogram_distances(d, hcc::LevelKind::TreeLevel);
  CHECK(hcc::reconstruction_error(e, want) <= 1e-6);
}

TEST_CASE("embed with --criterion clusters the matrix first") {
  const fs::path dir = test_dir();
  write_file(dir / "s3c.txt", kS3);
  const int rc = run_cli("embed " + (dir / "s3c.txt").string() +
                             " --criterion hcc --level level --out " +
                             (dir / "emb2.txt").string(),
                         dir / "emb2.out");
  CHECK(rc == 0);
  CHECK(hcc::read_embedding_file((dir / "emb2.txt").string()).n == 3);
}

TEST_CASE("embed refuses the linkage level kind on an HCC dendrogram") {
  const fs::path dir = test_dir();
  write_file(dir / "s3d.txt", kS3);
  SUBCASE("tagged via --criterion") {
    const int rc = run_cli("embed " + (dir / "s3d.txt").string() +
                               " --criterion hcc --level linkage --out " +
                               (dir / "no.txt").string(),
                           {}, dir / "no.err");
    CHECK(rc == 1);
    CHECK(read_file(dir / "no.err").find("linkage level") !=
          std::string::npos);
  }
  SUBCASE("via a dendrogram file with negative linkage values") {
    write_file(dir / "hcc_tree.txt",
               "0,1,-0.90000000000000002,2,1\n"
               "3,2,-0.099999999999999978,3,2\n");
    const int rc = run_cli("embed " + (dir / "hcc_tree.txt").string() +
                               " --level linkage --out " +
                               (dir / "no2.txt").string(),
                           {}, dir / "no2.err");
    CHECK(rc == 1);
  }
}

TEST_CASE("minimax-cc labels the signed blocks") {
  const fs::path dir = test_dir();
  write_file(dir / "blocks.txt",
             "0,0.8,-0.5,-0.6\n0.8,0,-0.7,-0.4\n"
             "-0.5,-0.7,0,0.9\n-0.6,-0.4,0.9,0\n");
  const int rc = run_cli("minimax-cc " + (dir / "blocks.txt").string() +
                         " --out " + (dir / "mm.labels").string());
  CHECK(rc == 0);
  CHECK(read_file(dir / "mm.labels") == "0\n0\n1\n1\n");

  write_file(dir / "allneg.txt", "0,-1,-1\n-1,0,-1\n-1,-1,0\n");
  run_cli("minimax-cc " + (dir / "allneg.txt").string() + " --out " +
          (dir / "neg.labels").string());
  CHECK(read_file(dir / "neg.labels") == "0\n1\n2\n");

  write_file(dir / "allpos.txt", "0,1,1\n1,0,1\n1,1,0\n");
  run_cli("minimax-cc " + (dir / "allpos.txt").string() + " --out " +
          (dir / "pos.labels").string());
  CHECK(read_file(dir / "pos.labels") == "0\n0\n0\n");
}

TEST_CASE("eval prints measure,value rows") {
  const fs::path dir = test_dir();
  write_file(dir / "truth.labels", "0\n0\n1\n1\n");
  write_file(dir / "pred.labels", "0\n1\n0\n1\n");
  const int rc = run_cli("eval " + (dir / "truth.labels").string() + " " +
                             (dir / "pred.labels").string(),
                         dir / "eval.out");
  CHECK(rc == 0);
  CHECK(read_file(dir / "eval.out") ==
        "ami,-0.50000000000000011\n"
        "ari,-0.49999999999999994\n"
        "v,0\n");
}

TEST_CASE("synth emits the pinned matrix and labels files") {
  const fs::path dir = test_dir();
  const int rc = run_cli("synth --n 4 --k 2 --eta 0 --seed 5 --out " +
                         (dir / "synth.txt").string());
  CHECK(rc == 0);
  CHECK(read_file(dir / "synth.txt") ==
        "0,-0.038494610807679019,-0.67593218543279976,"
        "-0.096342428976146977\n"
        "-0.038494610807679019,0,0.68777916080683965,0.2195572137706534\n"
        "-0.67593218543279976,0.68777916080683965,0,0.57167922212881106\n"
        "-0.096342428976146977,0.2195572137706534,0.57167922212881106,0\n");
  CHECK(read_file(dir / "synth.txt.labels") == "0\n1\n1\n1\n");
}

TEST_CASE("experiment writes the pinned CSV, byte-stable across runs") {
  const fs::path dir = test_dir();
  const std::string cfg =
      "n = 8\nk = 2\neta = 0, 0.5\nreps = 2\nseed = 3\n"
      "criteria = single, hcc\nmeasures = ami, ari\n"
      "out = " + (dir / "exp.csv").string() + "\n";
  write_file(dir / "exp.cfg", cfg);
  const int rc = run_cli("experiment " + (dir / "exp.cfg").string());
  CHECK(rc == 0);
  const std::string first = read_file(dir / "exp.csv");
  CHECK(first.rfind("criterion,eta,repetition,measure,value\n", 0) == 0);
  CHECK(first.find("single,0,0,ami,1\n") != std::string::npos);
  CHECK(first.find("hcc,0.5,0,ari,0.46153846153846156\n") !=
        std::string::npos);
  CHECK(first.find("criterion,eta,measure,mean,stddev\n") !=
        std::string::npos);

  fs::remove(dir / "exp.csv");
  run_cli("experiment " + (dir / "exp.cfg").string());
  CHECK(read_file(dir / "exp.csv") == first);
}

TEST_SUITE_END();
