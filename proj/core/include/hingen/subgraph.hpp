#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hingen/motif.hpp"
#include "hingen/reference.hpp"

namespace hingen {

// A motif instance plus minor nodes attached to its target nodes so the
// targets' per-type degrees match the reference distributions.
struct BaseSubgraph {
  MotifInstance motif;
  std::vector<NodeId> nodes;                       // motif nodes + attached minors
  std::vector<std::vector<NodeId>> nodes_by_type;  // indexed by node type id
  std::optional<LabelId> label;
};

// For each target node t and minor type f: draw k ~ P^f(k); the motif's
// existing contribution m is a floor, so max(0, k - m) fresh degree-1
// minors are attached to t.
BaseSubgraph attach_minor_nodes(TypedGraph& g, const MotifInstance& inst,
                                const ReferenceProfile& prof, Rng& rng);

// Labels both target nodes with y.
void label_subgraph(TypedGraph& g, BaseSubgraph& sg, LabelId y);

// N labeled base subgraphs partitioned by label. Labels are sampled per
// the configured policy; any label left empty takes one subgraph from the
// largest class so every cluster is non-empty.
std::map<LabelId, std::vector<BaseSubgraph>> generate_pool(TypedGraph& g,
                                                           const MotifTemplate& tmpl,
                                                           const ReferenceProfile& prof,
                                                           const GeneratorParams& params,
                                                           Rng& motif_rng, Rng& label_rng);

}  // namespace hingen
