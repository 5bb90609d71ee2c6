#include "hingen/subgraph.hpp"

#include <algorithm>

namespace hingen {

BaseSubgraph attach_minor_nodes(TypedGraph& g, const MotifInstance& inst,
                                const ReferenceProfile& prof, Rng& rng) {
  const Schema& schema = g.schema();
  const NodeTypeId target = schema.target_type();

  BaseSubgraph sg;
  sg.motif = inst;
  sg.nodes = inst.nodes;
  sg.nodes_by_type.resize(schema.node_type_count());
  for (NodeId v : inst.nodes) sg.nodes_by_type[g.node_type(v)].push_back(v);

  for (NodeId t : inst.anchors) {
    for (NodeTypeId minor = 0; minor < schema.node_type_count(); ++minor) {
      if (minor == target) continue;
      const DegreeDistribution& dist = prof.target_degree_dists[minor];
      int k = dist.pmf.empty() ? 0 : dist.sample(rng);
      auto et = schema.edge_type_between(target, minor);
      if (!et) {
        require(k == 0, "attach_minor_nodes: profile has nonzero degree toward type '" +
                            schema.node_type_name(minor) +
                            "' but the schema declares no edge type to the target type");
        continue;
      }
      int m = static_cast<int>(g.degree_by_type(t, minor));
      for (int i = 0; i < k - m; ++i) {
        NodeId fresh = g.add_node(minor);
        g.add_edge(*et, t, fresh);
        sg.nodes.push_back(fresh);
        sg.nodes_by_type[minor].push_back(fresh);
      }
    }
  }
  return sg;
}

void label_subgraph(TypedGraph& g, BaseSubgraph& sg, LabelId y) {
  require(y < g.schema().label_count(), "label_subgraph: unknown label");
  g.add_label(sg.motif.anchors[0], y);
  g.add_label(sg.motif.anchors[1], y);
  sg.label = y;
}

namespace {

std::vector<LabelId> draw_labels(std::size_t n, const ReferenceProfile& prof,
                                 const GeneratorParams& params, Rng& rng) {
  const std::size_t nlabels = prof.label_count();
  std::vector<double> weights(nlabels, 1.0);
  if (params.label_policy == LabelPolicy::kReference) {
    double total = 0.0;
    for (double f : prof.label_frequencies) total += f;
    if (total > 0.0) weights = prof.label_frequencies;
  }
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::vector<LabelId> labels(n);
  for (auto& y : labels) y = static_cast<LabelId>(pick(rng));

  // Every cluster must be non-empty: reassign from the largest class.
  std::vector<std::size_t> counts(nlabels, 0);
  for (LabelId y : labels) ++counts[y];
  for (LabelId missing = 0; missing < nlabels; ++missing) {
    if (counts[missing] > 0) continue;
    LabelId richest =
        static_cast<LabelId>(std::max_element(counts.begin(), counts.end()) - counts.begin());
    auto it = std::find(labels.begin(), labels.end(), richest);
    *it = missing;
    --counts[richest];
    ++counts[missing];
  }
  return labels;
}

}  // namespace

std::map<LabelId, std::vector<BaseSubgraph>> generate_pool(TypedGraph& g,
                                                           const MotifTemplate& tmpl,
                                                           const ReferenceProfile& prof,
                                                           const GeneratorParams& params,
                                                           Rng& motif_rng, Rng& label_rng) {
  const std::size_t n = params.motif_count;
  require(n >= prof.label_count(), "generate_pool: fewer motifs than labels");

  std::vector<LabelId> labels = draw_labels(n, prof, params, label_rng);

  std::map<LabelId, std::vector<BaseSubgraph>> pool;
  for (std::size_t i = 0; i < n; ++i) {
    MotifInstance inst = instantiate_motif(g, tmpl, motif_rng);
    BaseSubgraph sg = attach_minor_nodes(g, inst, prof, motif_rng);
    label_subgraph(g, sg, labels[i]);
    pool[labels[i]].push_back(std::move(sg));
  }
  return pool;
}

}  // namespace hingen
