#pragma once

#include <map>
#include <string>
#include <vector>

#include "hingen/features.hpp"
#include "hingen/ground_truth.hpp"
#include "hingen/merge.hpp"
#include "hingen/metrics.hpp"
#include "hingen/prune.hpp"
#include "hingen/reference.hpp"
#include "hingen/subgraph.hpp"

namespace hingen {

struct StageStats {
  std::string name;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double seconds = 0.0;
};

struct RunManifest {
  std::uint64_t seed = 0;
  std::size_t motif_count = 0;
  std::vector<StageStats> stages;
  PruneReport prune_report;
  bool pruned = false;
  double ground_truth_intact_fraction = 1.0;
  std::size_t components = 0;
  std::size_t target_nodes = 0;
  std::size_t merged_pairs = 0;
  // Filename -> FNV-1a digest of the written bytes; filled by the exporter.
  std::map<std::string, std::string> file_digests;
};

struct GenerationResult {
  TypedGraph graph;
  FeatureMatrix features;
  FeatureSpec feature_spec;
  GroundTruthMap ground_truth;
  RunManifest manifest;
};

// Runs the fixed stage order: motif + base subgraph generation,
// intra-cluster merge per label, inter-cluster merge, feature
// generation, and (unless caps are disabled) post-pruning. Deterministic
// given (params, profile): each stage draws from its own named substream
// of the master seed.
GenerationResult generate(const GeneratorParams& params, const ReferenceProfile& profile);

}  // namespace hingen
