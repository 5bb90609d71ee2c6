#pragma once

#include <map>
#include <memory>
#include <vector>

#include "hingen/graph.hpp"
#include "hingen/params.hpp"
#include "hingen/rng.hpp"
#include "hingen/schema.hpp"

namespace hingen {

// Empirical distribution of target-node degree toward one minor node
// type: pmf[k] = fraction of target nodes with exactly k neighbors of
// that type.
struct DegreeDistribution {
  std::map<int, double> pmf;
  int support = 0;  // max observed k

  void normalize_check() const;
  int sample(Rng& rng) const;
  double mean() const;
};

// Everything the generator conditions on from the reference graph.
struct ReferenceProfile {
  std::shared_ptr<const Schema> schema;
  // Indexed by node type id; the target-type slot is unused.
  std::vector<DegreeDistribution> target_degree_dists;
  std::size_t target_count = 0;
  // Occurrence proportion per label id over labeled target nodes
  // (multi-label nodes contribute once per label).
  std::vector<double> label_frequencies;
  // Max observed degree per (node type, neighbor type); -1 where the
  // reference has no such edges.
  std::vector<std::vector<int>> degree_caps;

  std::size_t label_count() const { return schema->label_count(); }
};

// Empirical statistics of a (reference or synthetic) graph.
ReferenceProfile profile(const TypedGraph& g);

// Defaults derived from the profile: N = ceil(target_count / 2), one
// cluster per label; p = 0.7 and q = 0.3 for every minor type (tunable,
// not estimated).
GeneratorParams estimate_params(const ReferenceProfile& prof);

inline constexpr double kDefaultIntraProb = 0.7;
inline constexpr double kDefaultInterProb = 0.3;

}  // namespace hingen
