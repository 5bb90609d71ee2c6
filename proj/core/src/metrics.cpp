#include "hingen/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

namespace hingen {

double tv_distance(const std::map<int, double>& a, const std::map<int, double>& b) {
  std::set<int> support;
  for (const auto& [k, p] : a) support.insert(k);
  for (const auto& [k, p] : b) support.insert(k);
  double sum = 0.0;
  for (int k : support) {
    auto ia = a.find(k);
    auto ib = b.find(k);
    double pa = ia == a.end() ? 0.0 : ia->second;
    double pb = ib == b.end() ? 0.0 : ib->second;
    sum += std::abs(pa - pb);
  }
  return 0.5 * sum;
}

double ks_statistic(const std::map<int, double>& a, const std::map<int, double>& b) {
  std::set<int> support;
  for (const auto& [k, p] : a) support.insert(k);
  for (const auto& [k, p] : b) support.insert(k);
  double ca = 0.0, cb = 0.0, ks = 0.0;
  for (int k : support) {
    auto ia = a.find(k);
    auto ib = b.find(k);
    ca += ia == a.end() ? 0.0 : ia->second;
    cb += ib == b.end() ? 0.0 : ib->second;
    ks = std::max(ks, std::abs(ca - cb));
  }
  return ks;
}

DistributionReport compare_distributions(const ReferenceProfile& a, const ReferenceProfile& b) {
  require(a.schema->node_types() == b.schema->node_types() &&
              a.schema->target_type() == b.schema->target_type(),
          "compare_distributions: profiles have different schemas");
  const Schema& schema = *a.schema;
  const std::map<int, double> point_mass_zero{{0, 1.0}};

  DistributionReport report;
  for (NodeTypeId t = 0; t < schema.node_type_count(); ++t) {
    if (t == schema.target_type()) continue;
    const std::map<int, double>* lhs = &a.target_degree_dists[t].pmf;
    const std::map<int, double>* rhs = &b.target_degree_dists[t].pmf;
    if (lhs->empty() || rhs->empty()) {
      report.warnings.push_back("type '" + schema.node_type_name(t) +
                                "' missing from one profile; compared against a point mass at 0");
      if (lhs->empty()) lhs = &point_mass_zero;
      if (rhs->empty()) rhs = &point_mass_zero;
    }
    DistributionReport::Entry entry;
    entry.minor_type = schema.node_type_name(t);
    entry.tv = tv_distance(*lhs, *rhs);
    entry.ks = ks_statistic(*lhs, *rhs);
    entry.lhs = *lhs;
    entry.rhs = *rhs;
    report.per_type.push_back(std::move(entry));
  }
  return report;
}

double fidelity(const PredictionFile& preds) {
  require(preds.label_count > 0, "fidelity: no label columns");
  require(preds.node_ids.size() == preds.full.size() && preds.full.size() == preds.motif.size(),
          "fidelity: ragged prediction file");
  if (preds.node_ids.empty()) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < preds.node_ids.size(); ++i) {
    require(preds.full[i].size() == preds.label_count && preds.motif[i].size() == preds.label_count,
            "fidelity: probability vector length mismatch at node " +
                std::to_string(preds.node_ids[i]));
    double row = 0.0;
    for (std::size_t l = 0; l < preds.label_count; ++l) {
      row += std::abs(preds.full[i][l] - preds.motif[i][l]);
    }
    total += row / static_cast<double>(preds.label_count);
  }
  return total / static_cast<double>(preds.node_ids.size());
}

ExclusionSummary exclusion_summary(const TypedGraph& g) {
  const Schema& schema = g.schema();
  const NodeTypeId target = schema.target_type();
  ExclusionSummary summary;

  // Label closure per node: own labels for targets, union of adjacent
  // targets' labels for minors.
  std::unordered_map<NodeId, std::vector<LabelId>> closure;
  std::size_t minors = 0, mixed_minors = 0;
  g.for_each_node([&](NodeId v) {
    std::vector<LabelId> c;
    if (g.node_type(v) == target) {
      c = g.label_set(v);
    } else {
      ++minors;
      for (const auto& [u, e] : g.neighbors(v)) {
        if (g.node_type(u) != target) continue;
        for (LabelId y : g.label_set(u)) c.push_back(y);
      }
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      if (c.size() >= 2) ++mixed_minors;
    }
    closure.emplace(v, std::move(c));
  });
  summary.mixed_minor_fraction =
      minors == 0 ? 0.0 : static_cast<double>(mixed_minors) / static_cast<double>(minors);

  std::size_t edges = 0, agreeing = 0;
  g.for_each_edge([&](EdgeId e, const TypedGraph::Edge& rec) {
    ++edges;
    if (closure.at(rec.u) == closure.at(rec.v)) ++agreeing;
  });
  summary.edge_agreement =
      edges == 0 ? 1.0 : static_cast<double>(agreeing) / static_cast<double>(edges);

  // Component label purity.
  std::unordered_map<NodeId, bool> visited;
  double purity_weighted = 0.0;
  std::size_t assignments_total = 0;
  g.for_each_node([&](NodeId start) {
    if (visited[start]) return;
    ++summary.components;
    std::map<LabelId, std::size_t> counts;
    std::size_t assignments = 0;
    std::queue<NodeId> frontier;
    frontier.push(start);
    visited[start] = true;
    while (!frontier.empty()) {
      NodeId v = frontier.front();
      frontier.pop();
      for (LabelId y : g.label_set(v)) {
        ++counts[y];
        ++assignments;
      }
      for (const auto& [u, e] : g.neighbors(v)) {
        if (!visited[u]) {
          visited[u] = true;
          frontier.push(u);
        }
      }
    }
    if (assignments == 0) return;
    std::size_t majority = 0;
    for (const auto& [y, c] : counts) majority = std::max(majority, c);
    purity_weighted += static_cast<double>(majority);
    assignments_total += assignments;
  });
  summary.component_purity =
      assignments_total == 0 ? 1.0 : purity_weighted / static_cast<double>(assignments_total);
  return summary;
}

}  // namespace hingen
