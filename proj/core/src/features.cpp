#include "hingen/features.hpp"

#include <cmath>
#include <thread>

namespace hingen {

std::vector<std::vector<double>> sample_centers(std::size_t label_count, std::size_t dim,
                                                double beta, Rng& rng) {
  require(beta >= 0.0, "sample_centers: beta must be non-negative");
  require(dim >= 1, "sample_centers: dimension must be at least 1");
  // Scale a standard normal instead of parameterizing the distribution:
  // beta = 0 is a legal degenerate case and the draw count stays fixed.
  std::normal_distribution<double> normal(0.0, 1.0);
  const double scale = std::sqrt(beta);
  std::vector<std::vector<double>> centers(label_count, std::vector<double>(dim));
  for (auto& mu : centers)
    for (double& x : mu) x = scale * normal(rng);
  return centers;
}

namespace {

void sample_row(const std::vector<LabelId>& labels, const FeatureSpec& spec,
                MultiLabelCombine combine, Rng& rng, double* out) {
  const std::size_t d = spec.dim;
  double variance = spec.cluster_variance;
  std::vector<double> mean(d, 0.0);

  if (labels.size() == 1 || combine == MultiLabelCombine::kMixture) {
    LabelId y = labels.front();
    if (labels.size() > 1) {
      y = labels[std::uniform_int_distribution<std::size_t>(0, labels.size() - 1)(rng)];
    }
    mean = spec.centers[y];
  } else {
    // Product of equal-covariance Gaussians: mean of centers, variance
    // divided by the label count.
    for (LabelId y : labels)
      for (std::size_t i = 0; i < d; ++i) mean[i] += spec.centers[y][i];
    for (double& m : mean) m /= static_cast<double>(labels.size());
    variance /= static_cast<double>(labels.size());
  }

  std::normal_distribution<double> noise(0.0, 1.0);
  const double scale = std::sqrt(variance);
  for (std::size_t i = 0; i < d; ++i) out[i] = mean[i] + scale * noise(rng);
}

}  // namespace

FeatureMatrix sample_features(const TypedGraph& g, const FeatureSpec& spec,
                              MultiLabelCombine combine, std::uint64_t seed, int threads) {
  require(spec.centers.size() == g.schema().label_count(), "sample_features: one center per label");
  require(spec.cluster_variance >= 0.0, "sample_features: alpha must be non-negative");

  FeatureMatrix fm;
  fm.dim = spec.dim;
  const NodeTypeId target = g.schema().target_type();
  g.for_each_node([&](NodeId v) {
    if (g.node_type(v) != target) return;
    require(g.has_label(v), "sample_features: unlabeled target node " + std::to_string(v));
    fm.node_ids.push_back(v);
  });
  fm.values.resize(fm.node_ids.size() * fm.dim);

  auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      NodeId v = fm.node_ids[i];
      Rng rng(mix64(seed ^ (0x632be59bd9b4e019ull * (v + 1))));
      sample_row(g.label_set(v), spec, combine, rng, fm.values.data() + i * fm.dim);
    }
  };

  if (threads <= 1 || fm.node_ids.size() < 2) {
    worker(0, fm.node_ids.size());
  } else {
    std::size_t nthreads = std::min<std::size_t>(threads, fm.node_ids.size());
    std::vector<std::thread> pool;
    std::size_t chunk = (fm.node_ids.size() + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
      std::size_t begin = t * chunk;
      std::size_t end = std::min(begin + chunk, fm.node_ids.size());
      if (begin >= end) break;
      pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  return fm;
}

}  // namespace hingen
