#include "hingen/reference.hpp"

#include <cmath>
#include <numeric>

namespace hingen {

void DegreeDistribution::normalize_check() const {
  double total = 0.0;
  for (const auto& [k, p] : pmf) {
    require(k >= 0, "degree distribution: negative degree");
    require(p >= 0.0, "degree distribution: negative probability");
    total += p;
  }
  require(std::abs(total - 1.0) <= 1e-9, "degree distribution: probabilities do not sum to 1");
}

int DegreeDistribution::sample(Rng& rng) const {
  double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  double acc = 0.0;
  int last = 0;
  for (const auto& [k, p] : pmf) {
    acc += p;
    last = k;
    if (u < acc) return k;
  }
  return last;  // guard against rounding at u ~ 1
}

double DegreeDistribution::mean() const {
  double m = 0.0;
  for (const auto& [k, p] : pmf) m += k * p;
  return m;
}

ReferenceProfile profile(const TypedGraph& g) {
  const Schema& schema = g.schema();
  const NodeTypeId target = schema.target_type();
  require(g.node_count() > 0, "profile: graph is empty");

  ReferenceProfile prof;
  prof.schema = g.schema_ptr();
  prof.target_degree_dists.resize(schema.node_type_count());
  prof.degree_caps.assign(schema.node_type_count(),
                          std::vector<int>(schema.node_type_count(), -1));

  std::vector<std::map<int, std::size_t>> counts(schema.node_type_count());
  std::vector<std::size_t> label_counts(schema.label_count(), 0);
  std::size_t label_total = 0;

  g.for_each_node([&](NodeId v) {
    NodeTypeId t = g.node_type(v);
    for (NodeTypeId nt = 0; nt < schema.node_type_count(); ++nt) {
      int d = static_cast<int>(g.degree_by_type(v, nt));
      if (d > 0) prof.degree_caps[t][nt] = std::max(prof.degree_caps[t][nt], d);
      if (t == target && nt != target) counts[nt][d] += 1;
    }
    if (t == target) {
      ++prof.target_count;
      for (LabelId y : g.label_set(v)) {
        ++label_counts[y];
        ++label_total;
      }
    }
  });
  require(prof.target_count > 0, "profile: graph has no target nodes");

  for (NodeTypeId nt = 0; nt < schema.node_type_count(); ++nt) {
    if (nt == target) continue;
    DegreeDistribution& dist = prof.target_degree_dists[nt];
    if (counts[nt].empty()) {
      dist.pmf[0] = 1.0;  // degenerate: minor type absent
      dist.support = 0;
      continue;
    }
    for (const auto& [k, c] : counts[nt]) {
      dist.pmf[k] = static_cast<double>(c) / static_cast<double>(prof.target_count);
      dist.support = std::max(dist.support, k);
    }
  }

  prof.label_frequencies.assign(schema.label_count(), 0.0);
  if (label_total > 0) {
    for (LabelId y = 0; y < schema.label_count(); ++y) {
      prof.label_frequencies[y] =
          static_cast<double>(label_counts[y]) / static_cast<double>(label_total);
    }
  }
  return prof;
}

GeneratorParams estimate_params(const ReferenceProfile& prof) {
  const Schema& schema = *prof.schema;
  GeneratorParams params;
  params.motif_count = (prof.target_count + 1) / 2;  // ceil; never 0 for a non-empty reference
  params.intra_prob.assign(schema.node_type_count(), kDefaultIntraProb);
  params.inter_prob.assign(schema.node_type_count(), kDefaultInterProb);
  return params;
}

void GeneratorParams::validate(const Schema& schema) const {
  require(motif_count >= schema.label_count(),
          "params: motif count must be at least the number of labels");
  require(intra_prob.size() == schema.node_type_count(), "params: one intra probability per type");
  require(inter_prob.size() == schema.node_type_count(), "params: one inter probability per type");
  for (double p : intra_prob) require(p >= 0.0 && p <= 1.0, "params: intra probability out of [0,1]");
  for (double q : inter_prob) require(q >= 0.0 && q <= 1.0, "params: inter probability out of [0,1]");
  require(cluster_variance >= 0.0, "params: alpha must be non-negative");
  require(center_variance >= 0.0, "params: beta must be non-negative");
  require(feature_dim >= 1, "params: feature dimension must be at least 1");
  require(max_hops >= 2, "params: max_hops must be at least 2");
  require(threads >= 1, "params: thread count must be at least 1");
  if (cap_override) {
    require(cap_override->size() == schema.node_type_count() &&
                (*cap_override)[0].size() == schema.node_type_count(),
            "params: cap override must be a node-type square matrix");
  }
}

}  // namespace hingen
