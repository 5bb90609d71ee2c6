#include "hingen/pipeline.hpp"

#include <chrono>

namespace hingen {

namespace {

class StageTimer {
 public:
  StageTimer(RunManifest& manifest, const TypedGraph& g, std::string name)
      : manifest_(manifest), graph_(g), name_(std::move(name)),
        start_(std::chrono::steady_clock::now()) {}

  ~StageTimer() {
    auto elapsed = std::chrono::steady_clock::now() - start_;
    manifest_.stages.push_back(
        {name_, graph_.node_count(), graph_.edge_count(),
         std::chrono::duration_cast<std::chrono::duration<double>>(elapsed).count()});
  }

 private:
  RunManifest& manifest_;
  const TypedGraph& graph_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

GenerationResult generate(const GeneratorParams& params, const ReferenceProfile& profile) {
  const Schema& schema = *profile.schema;
  params.validate(schema);

  GenerationResult result{TypedGraph(profile.schema), {}, {}, {}, {}};
  TypedGraph& g = result.graph;
  RunManifest& manifest = result.manifest;
  manifest.seed = params.seed;
  manifest.motif_count = params.motif_count;

  std::vector<MetaPath> paths = enumerate_metapaths(schema, params.max_hops);
  require(!paths.empty(), "generate: schema has no target-to-target meta-path within max_hops");
  MotifTemplate tmpl = build_motif_template(schema, std::move(paths), params.bridge_ranges);

  std::map<LabelId, std::vector<BaseSubgraph>> pool;
  {
    StageTimer timer(manifest, g, "base-subgraphs");
    Rng motif_rng = substream(params.seed, "motif");
    Rng label_rng = substream(params.seed, "labels");
    pool = generate_pool(g, tmpl, profile, params, motif_rng, label_rng);
    for (const auto& [y, subgraphs] : pool) {
      for (const BaseSubgraph& sg : subgraphs) result.ground_truth.add(g, sg.motif);
    }
  }
  if (params.verify) g.validate();

  NodeRemap remap;
  std::vector<Cluster> clusters;
  {
    StageTimer timer(manifest, g, "intra-cluster-merge");
    for (auto& [y, subgraphs] : pool) {
      Rng rng = substream(params.seed, "intra:" + schema.label_name(y));
      clusters.push_back(intra_cluster_merge(g, y, subgraphs, params, remap, rng));
    }
  }
  if (params.verify) g.validate();

  if (clusters.size() >= 2) {
    StageTimer timer(manifest, g, "inter-cluster-merge");
    Rng rng = substream(params.seed, "inter");
    inter_cluster_merge(g, clusters, params, remap, rng);
  }
  if (params.verify) g.validate();
  result.ground_truth.apply_remap(remap);
  manifest.merged_pairs = remap.size();

  {
    StageTimer timer(manifest, g, "features");
    Rng center_rng = substream(params.seed, "centers");
    result.feature_spec.dim = params.feature_dim;
    result.feature_spec.cluster_variance = params.cluster_variance;
    result.feature_spec.center_variance = params.center_variance;
    result.feature_spec.centers =
        sample_centers(schema.label_count(), params.feature_dim, params.center_variance, center_rng);
    result.features = sample_features(g, result.feature_spec, params.combine,
                                      derive_seed(params.seed, "features"), params.threads);
  }

  if (params.apply_caps) {
    StageTimer timer(manifest, g, "post-pruning");
    const DegreeCaps& caps = params.cap_override ? *params.cap_override : profile.degree_caps;
    Rng rng = substream(params.seed, "prune");
    manifest.prune_report = prune(g, caps, rng);
    manifest.pruned = true;
  }
  if (params.verify) g.validate();

  manifest.ground_truth_intact_fraction =
      verify_ground_truth(g, result.ground_truth).intact_fraction();
  manifest.components = g.connected_components();
  g.for_each_node([&](NodeId v) {
    if (g.node_type(v) == schema.target_type()) ++manifest.target_nodes;
  });
  return result;
}

}  // namespace hingen
