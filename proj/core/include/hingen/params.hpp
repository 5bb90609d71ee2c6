#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hingen/schema.hpp"

namespace hingen {

struct BridgeRange {
  int min = 1;
  int max = 1;
};

enum class LabelPolicy { kReference, kUniform };
enum class MultiLabelCombine { kProduct, kMixture };

// Everything that controls one generation run. Degree distributions and
// caps live in the ReferenceProfile; these are the knobs layered on top.
struct GeneratorParams {
  std::size_t motif_count = 0;  // number of major motifs (2 target nodes each)
  // Merge probabilities indexed by node type id. The target-type entry
  // of inter_prob is only consulted in multi-label mode; the target-type
  // entry of intra_prob is never consulted.
  std::vector<double> intra_prob;
  std::vector<double> inter_prob;
  bool multi_label = false;

  double cluster_variance = 1.0;  // within-cluster feature variance (alpha)
  double center_variance = 1.0;   // cluster-center variance (beta)
  std::size_t feature_dim = 64;

  int max_hops = 2;
  // Keyed by meta-path signature, e.g. "movie-actor-movie". Paths not
  // listed use [1, 1].
  std::map<std::string, BridgeRange> bridge_ranges;

  bool apply_caps = true;  // caps = infinity skips post-pruning entirely
  // Overrides the profile's observed maxima when set: [type][neighbor
  // type], negative = uncapped.
  std::optional<std::vector<std::vector<int>>> cap_override;

  LabelPolicy label_policy = LabelPolicy::kReference;
  MultiLabelCombine combine = MultiLabelCombine::kProduct;
  std::uint64_t seed = 0;
  int threads = 1;
  bool verify = false;  // stage-boundary consistency checks

  void validate(const Schema& schema) const;
};

}  // namespace hingen
