#pragma once

#include <span>
#include <vector>

#include "hingen/graph.hpp"
#include "hingen/params.hpp"
#include "hingen/rng.hpp"
#include "hingen/subgraph.hpp"

namespace hingen {

struct MergePair {
  NodeId keep;
  NodeId drop;
};

// Node-disjoint pairs of one node type. Disjointness makes the plan's
// application order immaterial.
struct MergePlan {
  NodeTypeId type;
  std::vector<MergePair> pairs;
};

// Fuses drop into keep: drop's neighbors (except keep itself) are
// reconnected to keep with their original edge types, duplicates
// collapse, motif flags and labels carry over, drop is removed and the
// remap records drop -> keep.
void merge_pair(TypedGraph& g, NodeId keep, NodeId drop, NodeRemap& remap);

void apply_plan(TypedGraph& g, const MergePlan& plan, NodeRemap& remap);

// n ~ Binomial(|incoming|, p) clamped to min(|incoming|, |cluster|)
// node-disjoint pairs, cluster side kept.
MergePlan plan_intra_merge(NodeTypeId type, std::span<const NodeId> cluster_nodes,
                           std::span<const NodeId> incoming_nodes, double p, Rng& rng);

// One label's merged cluster.
struct Cluster {
  LabelId label;
  std::vector<std::vector<NodeId>> nodes_by_type;  // surviving nodes, by type id

  std::size_t node_count() const {
    std::size_t n = 0;
    for (const auto& v : nodes_by_type) n += v.size();
    return n;
  }
};

// Seeds the cluster with the first subgraph and folds the rest in one by
// one, planning and applying per-minor-type merges for each.
Cluster intra_cluster_merge(TypedGraph& g, LabelId label,
                            const std::vector<BaseSubgraph>& pool_entry,
                            const GeneratorParams& params, NodeRemap& remap, Rng& rng);

// Per type: n ~ Binomial(sum of cluster sizes, q) clamped to the largest
// feasible node-disjoint cross-cluster pair count; pairs drawn uniformly
// among cross-cluster pairs. The target type participates only in
// multi-label mode. The lower node id survives.
std::vector<MergePlan> plan_inter_merge(const std::vector<Cluster>& clusters,
                                        const GeneratorParams& params, const Schema& schema,
                                        Rng& rng);

// Applies the inter plans in one concurrent pass and updates the
// clusters' surviving node lists. Merged multi-label targets keep the
// union of both label sets.
void inter_cluster_merge(TypedGraph& g, std::vector<Cluster>& clusters,
                         const GeneratorParams& params, NodeRemap& remap, Rng& rng);

}  // namespace hingen
