#pragma once

#include <cstdint>
#include <vector>

#include "hingen/graph.hpp"
#include "hingen/params.hpp"
#include "hingen/rng.hpp"

namespace hingen {

struct FeatureSpec {
  std::size_t dim = 0;
  double cluster_variance = 1.0;              // alpha: isotropic within-cluster variance
  double center_variance = 1.0;               // beta: isotropic center variance
  std::vector<std::vector<double>> centers;   // one per label
};

// i.i.d. centers mu_y ~ N(0, beta * I).
std::vector<std::vector<double>> sample_centers(std::size_t label_count, std::size_t dim,
                                                double beta, Rng& rng);

// Row-major target-node feature matrix, rows sorted by node id.
struct FeatureMatrix {
  std::vector<NodeId> node_ids;
  std::size_t dim = 0;
  std::vector<double> values;

  const double* row(std::size_t i) const { return values.data() + i * dim; }
  std::size_t rows() const { return node_ids.size(); }
};

// Single-label node with label y: x ~ N(mu_y, alpha * I). Multi-label
// node with label set L: product combination draws from
// N(mean of member centers, alpha/|L| * I); mixture combination picks one
// member label uniformly and draws from its Gaussian. Each row uses an
// RNG substream keyed by node id, so output is identical for any thread
// count.
FeatureMatrix sample_features(const TypedGraph& g, const FeatureSpec& spec,
                              MultiLabelCombine combine, std::uint64_t seed, int threads);

}  // namespace hingen
