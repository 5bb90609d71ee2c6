#pragma once

#include <map>
#include <string>
#include <vector>

#include "hingen/graph.hpp"
#include "hingen/reference.hpp"

namespace hingen {

double tv_distance(const std::map<int, double>& a, const std::map<int, double>& b);
double ks_statistic(const std::map<int, double>& a, const std::map<int, double>& b);

struct DistributionReport {
  struct Entry {
    std::string minor_type;
    double tv = 0.0;
    double ks = 0.0;
    std::map<int, double> lhs;
    std::map<int, double> rhs;
  };
  std::vector<Entry> per_type;
  std::vector<std::string> warnings;
};

// Per-minor-type distances between two profiles' target-degree
// distributions, computed over the union of supports.
DistributionReport compare_distributions(const ReferenceProfile& a, const ReferenceProfile& b);

// Rows of (target node id, probability vector on the full graph,
// probability vector on the motif-only subgraph).
struct PredictionFile {
  std::size_t label_count = 0;
  std::vector<std::uint64_t> node_ids;
  std::vector<std::vector<double>> full;
  std::vector<std::vector<double>> motif;
};

// Mean over nodes of the mean absolute per-label probability difference.
double fidelity(const PredictionFile& preds);

// Artifact-defined operationalization of cluster exclusion.
struct ExclusionSummary {
  // Fraction of edges whose endpoint label closures are equal; a minor
  // node's closure is the union of its adjacent targets' labels.
  double edge_agreement = 1.0;
  // Weighted mean over components of the fraction of target label
  // assignments matching the component's majority label.
  double component_purity = 1.0;
  std::size_t components = 0;
  // Fraction of minor nodes adjacent to targets of two or more labels.
  double mixed_minor_fraction = 0.0;
};

ExclusionSummary exclusion_summary(const TypedGraph& g);

}  // namespace hingen
