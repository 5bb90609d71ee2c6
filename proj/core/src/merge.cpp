#include "hingen/merge.hpp"

#include <algorithm>
#include <unordered_set>

namespace hingen {

void merge_pair(TypedGraph& g, NodeId keep, NodeId drop, NodeRemap& remap) {
  check_internal(g.node_alive(keep) && g.node_alive(drop), "merge_pair: unknown or removed node");
  check_internal(keep != drop, "merge_pair: identical nodes");
  check_internal(g.node_type(keep) == g.node_type(drop), "merge_pair: node type mismatch");

  // Snapshot before mutating; sorted so behavior is independent of hash
  // iteration order.
  std::vector<std::pair<NodeId, EdgeId>> nbrs(g.neighbors(drop).begin(), g.neighbors(drop).end());
  std::sort(nbrs.begin(), nbrs.end());

  for (const auto& [u, e] : nbrs) {
    const EdgeTypeId type = g.edge(e).type;
    const bool motif = g.edge(e).motif;
    g.remove_edge(e);
    if (u == keep) continue;  // would be a self loop
    EdgeId moved = g.add_edge(type, keep, u);
    if (motif) g.set_motif(moved);
  }

  for (LabelId y : g.label_set(drop)) g.add_label(keep, y);
  g.remove_isolated_node(drop);
  remap.record(drop, keep);
}

void apply_plan(TypedGraph& g, const MergePlan& plan, NodeRemap& remap) {
  for (const MergePair& p : plan.pairs) merge_pair(g, p.keep, p.drop, remap);
}

namespace {

// k distinct elements drawn uniformly without replacement.
std::vector<NodeId> draw_without_replacement(std::span<const NodeId> pool, std::size_t k,
                                             Rng& rng) {
  std::vector<NodeId> scratch(pool.begin(), pool.end());
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = std::uniform_int_distribution<std::size_t>(i, scratch.size() - 1)(rng);
    std::swap(scratch[i], scratch[j]);
  }
  scratch.resize(k);
  return scratch;
}

}  // namespace

MergePlan plan_intra_merge(NodeTypeId type, std::span<const NodeId> cluster_nodes,
                           std::span<const NodeId> incoming_nodes, double p, Rng& rng) {
  MergePlan plan{type, {}};
  if (incoming_nodes.empty() || cluster_nodes.empty() || p <= 0.0) return plan;

  std::size_t n = std::binomial_distribution<std::size_t>(incoming_nodes.size(), p)(rng);
  n = std::min(n, std::min(incoming_nodes.size(), cluster_nodes.size()));
  if (n == 0) return plan;

  std::vector<NodeId> keeps = draw_without_replacement(cluster_nodes, n, rng);
  std::vector<NodeId> drops = draw_without_replacement(incoming_nodes, n, rng);
  plan.pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) plan.pairs.push_back({keeps[i], drops[i]});
  return plan;
}

Cluster intra_cluster_merge(TypedGraph& g, LabelId label,
                            const std::vector<BaseSubgraph>& pool_entry,
                            const GeneratorParams& params, NodeRemap& remap, Rng& rng) {
  require(!pool_entry.empty(), "intra_cluster_merge: empty subgraph pool");
  const Schema& schema = g.schema();
  const NodeTypeId target = schema.target_type();

  Cluster cluster{label, pool_entry.front().nodes_by_type};

  for (std::size_t i = 1; i < pool_entry.size(); ++i) {
    const BaseSubgraph& incoming = pool_entry[i];
    std::unordered_set<NodeId> dropped;
    for (NodeTypeId t = 0; t < schema.node_type_count(); ++t) {
      if (t == target) continue;
      MergePlan plan = plan_intra_merge(t, cluster.nodes_by_type[t], incoming.nodes_by_type[t],
                                        params.intra_prob[t], rng);
      for (const MergePair& p : plan.pairs) dropped.insert(p.drop);
      apply_plan(g, plan, remap);
    }
    for (NodeTypeId t = 0; t < schema.node_type_count(); ++t) {
      for (NodeId v : incoming.nodes_by_type[t]) {
        if (!dropped.count(v)) cluster.nodes_by_type[t].push_back(v);
      }
    }
  }
  return cluster;
}

std::vector<MergePlan> plan_inter_merge(const std::vector<Cluster>& clusters,
                                        const GeneratorParams& params, const Schema& schema,
                                        Rng& rng) {
  require(clusters.size() >= 2, "plan_inter_merge: need at least two clusters");
  std::vector<MergePlan> plans;

  for (NodeTypeId t = 0; t < schema.node_type_count(); ++t) {
    if (t == schema.target_type() && !params.multi_label) continue;
    const double q = params.inter_prob[t];
    MergePlan plan{t, {}};

    std::vector<std::pair<NodeId, std::size_t>> entries;  // (node, cluster index)
    std::size_t largest = 0;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      for (NodeId v : clusters[c].nodes_by_type[t]) entries.emplace_back(v, c);
      largest = std::max(largest, clusters[c].nodes_by_type[t].size());
    }
    const std::size_t total = entries.size();
    if (total == 0 || q <= 0.0) {
      plans.push_back(std::move(plan));
      continue;
    }

    std::size_t n = std::binomial_distribution<std::size_t>(total, q)(rng);
    // Largest node-disjoint cross-cluster matching.
    n = std::min(n, std::min(total / 2, total - largest));

    while (plan.pairs.size() < n) {
      // Stop if only one cluster remains represented.
      std::size_t first_cluster = entries.front().second;
      bool mixed = false;
      for (const auto& [v, c] : entries) {
        if (c != first_cluster) {
          mixed = true;
          break;
        }
      }
      if (!mixed) break;

      std::uniform_int_distribution<std::size_t> pick(0, entries.size() - 1);
      std::size_t i = pick(rng);
      std::size_t j = pick(rng);
      if (i == j || entries[i].second == entries[j].second) continue;
      NodeId a = entries[i].first;
      NodeId b = entries[j].first;
      plan.pairs.push_back({std::min(a, b), std::max(a, b)});
      if (i < j) std::swap(i, j);
      entries[i] = entries.back();
      entries.pop_back();
      entries[j] = entries.back();
      entries.pop_back();
    }
    plans.push_back(std::move(plan));
  }
  return plans;
}

void inter_cluster_merge(TypedGraph& g, std::vector<Cluster>& clusters,
                         const GeneratorParams& params, NodeRemap& remap, Rng& rng) {
  std::vector<MergePlan> plans = plan_inter_merge(clusters, params, g.schema(), rng);
  std::unordered_set<NodeId> dropped;
  for (const MergePlan& plan : plans) {
    for (const MergePair& p : plan.pairs) dropped.insert(p.drop);
    apply_plan(g, plan, remap);
  }
  for (Cluster& cluster : clusters) {
    for (auto& nodes : cluster.nodes_by_type) {
      std::erase_if(nodes, [&](NodeId v) { return dropped.count(v) > 0; });
    }
  }
}

}  // namespace hingen
