// hingen: synthetic heterogeneous information network generator.
//
// Subcommands:
//   analyze   profile a reference graph from edge lists
//   generate  produce a synthetic HIN from a config and a profile
//   validate  compare two profiles' degree distributions
//   fidelity  score a prediction file

#include <filesystem>
#include <iostream>

#include "CLI11.hpp"

#include "hingen/io.hpp"
#include "hingen/pipeline.hpp"

namespace fs = std::filesystem;
using hingen::io::json;

namespace {

constexpr int kExitUserError = 2;
constexpr int kExitInternalError = 3;

int cmd_analyze(const fs::path& schema_path, const fs::path& edges_dir,
                const fs::path& labels_path, const fs::path& out_path) {
  auto schema = hingen::io::load_schema(schema_path);
  hingen::TypedGraph g = hingen::io::read_graph_dir(schema, edges_dir, labels_path);
  hingen::ReferenceProfile prof = hingen::profile(g);
  hingen::io::save_profile(prof, out_path);

  std::cout << "nodes: " << g.node_count() << "  edges: " << g.edge_count()
            << "  target nodes: " << prof.target_count << "\n";
  for (hingen::NodeTypeId t = 0; t < schema->node_type_count(); ++t) {
    if (t == schema->target_type()) continue;
    std::cout << "degree histogram toward " << schema->node_type_name(t) << ":";
    for (const auto& [k, p] : prof.target_degree_dists[t].pmf) {
      std::cout << " " << k << ":" << p;
    }
    std::cout << "\n";
  }
  std::cout << "profile written to " << out_path.string() << "\n";
  return 0;
}

int cmd_generate(const fs::path& config_path, const fs::path& profile_path,
                 const fs::path& out_dir, const std::vector<std::string>& overrides) {
  hingen::ReferenceProfile prof = hingen::io::load_profile(profile_path);
  json config = hingen::io::apply_overrides(hingen::io::load_json(config_path), overrides);
  hingen::GeneratorParams params = hingen::io::params_from_config(config, *prof.schema);

  hingen::GenerationResult result = hingen::generate(params, prof);
  hingen::io::write_outputs(result, out_dir);

  std::cout << "generated " << result.graph.node_count() << " nodes, "
            << result.graph.edge_count() << " edges, " << result.manifest.components
            << " components\n";
  std::cout << "ground-truth motifs intact: " << result.manifest.ground_truth_intact_fraction
            << "\n";
  std::cout << "outputs written to " << out_dir.string() << "\n";
  return 0;
}

int cmd_validate(const fs::path& profile_a, const fs::path& profile_b, bool as_json) {
  hingen::ReferenceProfile a = hingen::io::load_profile(profile_a);
  hingen::ReferenceProfile b = hingen::io::load_profile(profile_b);
  hingen::DistributionReport report = hingen::compare_distributions(a, b);
  if (as_json) {
    json j;
    j["per_type"] = json::array();
    for (const auto& entry : report.per_type) {
      j["per_type"].push_back({{"type", entry.minor_type}, {"tv", entry.tv}, {"ks", entry.ks}});
    }
    j["warnings"] = report.warnings;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& entry : report.per_type) {
      std::cout << entry.minor_type << ": TV=" << entry.tv << " KS=" << entry.ks << "\n";
    }
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  }
  return 0;
}

int cmd_fidelity(const fs::path& preds_path, bool as_json) {
  hingen::PredictionFile preds = hingen::io::read_predictions(preds_path);
  double score = hingen::fidelity(preds);
  if (as_json) {
    json j{{"fidelity", score}, {"nodes", preds.node_ids.size()}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "fidelity: " << score << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"synthetic heterogeneous information network generator"};
  app.require_subcommand(1);

  fs::path schema_path, edges_dir, labels_path, out_path;
  auto* analyze = app.add_subcommand("analyze", "profile a reference graph");
  analyze->add_option("--schema", schema_path, "schema JSON file")->required();
  analyze->add_option("--edges", edges_dir, "directory with nodes.tsv and per-edge-type lists")
      ->required();
  analyze->add_option("--labels", labels_path, "target-node label file")->required();
  analyze->add_option("--out", out_path, "output profile path")->required();

  fs::path config_path, gen_profile_path, gen_out_dir;
  std::vector<std::string> overrides;
  auto* generate = app.add_subcommand("generate", "generate a synthetic HIN");
  generate->add_option("--config", config_path, "generator config JSON")->required();
  generate->add_option("--profile", gen_profile_path, "reference profile JSON")->required();
  generate->add_option("--out", gen_out_dir, "output directory")->required();
  generate->add_option("--set", overrides, "override a config key, e.g. q.actor=0");

  std::vector<fs::path> profiles;
  bool validate_json = false;
  auto* validate = app.add_subcommand("validate", "compare two profiles");
  validate->add_option("--profile", profiles, "profile (give twice: reference, then synthetic)")
      ->required()
      ->expected(2);
  validate->add_flag("--json", validate_json, "machine-readable output");

  fs::path preds_path;
  bool fidelity_json = false;
  auto* fidelity = app.add_subcommand("fidelity", "score a prediction file");
  fidelity->add_option("--preds", preds_path, "prediction file")->required();
  fidelity->add_flag("--json", fidelity_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUserError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(schema_path, edges_dir, labels_path, out_path);
    if (generate->parsed())
      return cmd_generate(config_path, gen_profile_path, gen_out_dir, overrides);
    if (validate->parsed()) return cmd_validate(profiles[0], profiles[1], validate_json);
    if (fidelity->parsed()) return cmd_fidelity(preds_path, fidelity_json);
  } catch (const hingen::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUserError;
  }
  return 0;
}
