// End-to-end tests driving the installed binary through std::system.
// The binary path arrives via the HINGEN_CLI_PATH compile definition.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>

#include "hingen/io.hpp"
#include "support.hpp"

using namespace hingen;
using testsupport::TempDir;
using testsupport::write_file;

namespace {

const std::string kCli = HINGEN_CLI_PATH;

int run(const std::string& args) {
  int status = std::system((kCli + " " + args + " >/dev/null 2>&1").c_str());
#ifdef WEXITSTATUS
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#else
  return status;
#endif
}

void write_schema(const std::filesystem::path& path) {
  io::json j = io::schema_to_json(*testsupport::imdb_schema());
  write_file(path, j.dump(2));
}

void write_reference_dataset(const std::filesystem::path& dir) {
  // 4 movies: one director each, actor degrees {1, 1, 2, 2}.
  write_file(dir / "nodes.tsv",
             "#hingen-format 1\n"
             "0\tmovie\n1\tmovie\n2\tmovie\n3\tmovie\n"
             "10\tdirector\n11\tdirector\n"
             "20\tactor\n21\tactor\n22\tactor\n");
  write_file(dir / "movie-director.tsv",
             "#hingen-format 1\n0\t10\n1\t10\n2\t11\n3\t11\n");
  write_file(dir / "movie-actor.tsv",
             "#hingen-format 1\n0\t20\n1\t21\n2\t20\n2\t21\n3\t21\n3\t22\n");
  write_file(dir / "labels.tsv", "0\taction\n1\tcomedy\n2\tdrama\n3\taction\n");
}

void write_config(const std::filesystem::path& path, std::size_t motifs, std::uint64_t seed) {
  io::json config;
  config["generator"]["motifs"] = motifs;
  config["generator"]["seed"] = seed;
  config["generator"]["feature_dim"] = 8;
  write_file(path, config.dump(2));
}

}  // namespace

TEST_CASE("missing subcommand and bad flags exit with the user-error code") {
  CHECK(run("") == 2);
  CHECK(run("nonsense") == 2);
  CHECK(run("generate --config /nonexistent.json") == 2);  // missing required flags
  CHECK(run("--help") == 0);
}

TEST_CASE("missing input files exit with the user-error code") {
  TempDir dir("cli-missing");
  write_schema(dir.path() / "schema.json");
  CHECK(run("analyze --schema " + (dir.path() / "schema.json").string() + " --edges " +
            dir.path().string() + " --labels " + (dir.path() / "labels.tsv").string() +
            " --out " + (dir.path() / "profile.json").string()) == 2);
  CHECK(run("fidelity --preds " + (dir.path() / "none.tsv").string()) == 2);
}

TEST_CASE("analyze, generate, re-analyze round trip") {
  TempDir dir("cli-e2e");
  auto schema_path = dir.path() / "schema.json";
  auto ref_dir = dir.path() / "reference";
  auto out_dir = dir.path() / "out";
  std::filesystem::create_directories(ref_dir);
  write_schema(schema_path);
  write_reference_dataset(ref_dir);

  auto profile_path = dir.path() / "profile.json";
  REQUIRE(run("analyze --schema " + schema_path.string() + " --edges " + ref_dir.string() +
              " --labels " + (ref_dir / "labels.tsv").string() + " --out " +
              profile_path.string()) == 0);

  ReferenceProfile prof = io::load_profile(profile_path);
  CHECK(prof.target_count == 4);

  auto config_path = dir.path() / "config.json";
  write_config(config_path, 30, 7);
  REQUIRE(run("generate --config " + config_path.string() + " --profile " +
              profile_path.string() + " --out " + out_dir.string()) == 0);

  // Generated output is a readable dataset; analyze it back.
  auto synth_profile = dir.path() / "synth.json";
  REQUIRE(run("analyze --schema " + schema_path.string() + " --edges " + out_dir.string() +
              " --labels " + (out_dir / "labels.tsv").string() + " --out " +
              synth_profile.string()) == 0);
  ReferenceProfile synth = io::load_profile(synth_profile);
  CHECK(synth.target_count == 60);

  REQUIRE(run("validate --profile " + profile_path.string() + " --profile " +
              synth_profile.string() + " --json") == 0);
}

TEST_CASE("same seed gives byte-identical outputs; --set changes the run") {
  TempDir dir("cli-seed");
  auto schema_path = dir.path() / "schema.json";
  auto ref_dir = dir.path() / "reference";
  std::filesystem::create_directories(ref_dir);
  write_schema(schema_path);
  write_reference_dataset(ref_dir);
  auto profile_path = dir.path() / "profile.json";
  REQUIRE(run("analyze --schema " + schema_path.string() + " --edges " + ref_dir.string() +
              " --labels " + (ref_dir / "labels.tsv").string() + " --out " +
              profile_path.string()) == 0);
  auto config_path = dir.path() / "config.json";
  write_config(config_path, 20, 99);

  auto generate_into = [&](const std::string& name, const std::string& extra) {
    auto out = dir.path() / name;
    REQUIRE(run("generate --config " + config_path.string() + " --profile " +
                profile_path.string() + " --out " + out.string() + extra) == 0);
    return out;
  };
  auto a = generate_into("a", "");
  auto b = generate_into("b", "");
  auto c = generate_into("c", " --set seed=100");
  auto d = generate_into("d", " --set threads=4");

  for (const char* name : {"nodes.tsv", "movie-director.tsv", "movie-actor.tsv", "labels.tsv",
                           "features.tsv", "ground_truth.tsv"}) {
    CHECK(io::digest_file(a / name) == io::digest_file(b / name));
    CHECK(io::digest_file(a / name) == io::digest_file(d / name));
  }
  CHECK(io::digest_file(a / "features.tsv") != io::digest_file(c / "features.tsv"));
}

TEST_CASE("fidelity subcommand scores a prediction file") {
  TempDir dir("cli-fid");
  auto preds = dir.path() / "preds.tsv";
  write_file(preds,
             "id\tfull_a\tfull_b\tmotif_a\tmotif_b\n"
             "0\t0.9\t0.1\t0.7\t0.3\n");
  CHECK(run("fidelity --preds " + preds.string()) == 0);
  CHECK(run("fidelity --preds " + preds.string() + " --json") == 0);

  write_file(preds, "id\tfull_a\tfull_b\tmotif_a\tmotif_b\n0\t2.0\t0.1\t0.7\t0.3\n");
  CHECK(run("fidelity --preds " + preds.string()) == 2);
}
