#pragma once

#include <map>
#include <vector>

#include "hingen/graph.hpp"
#include "hingen/rng.hpp"

namespace hingen {

// Max degree per (node type, neighbor type); negative = uncapped.
using DegreeCaps = std::vector<std::vector<int>>;

struct PruneReport {
  // Removed edge count per (node type, neighbor type) as seen from the
  // scanned node.
  std::map<std::pair<NodeTypeId, NodeTypeId>, std::size_t> removed;
  std::size_t removed_total = 0;
  // Nodes whose motif edges alone exceed the cap; their motif edges are
  // kept and the excess flagged, never silently dropped.
  struct Violation {
    NodeId node;
    NodeTypeId neighbor_type;
    std::size_t motif_degree;
    int cap;
  };
  std::vector<Violation> violations;
  std::size_t components_before = 0;
  std::size_t components_after = 0;
  std::size_t passes = 0;
};

// Enforces per-type degree caps by deleting excess non-motif edges,
// scanning nodes in ascending id order and choosing the removed edges
// uniformly at random. Repeats until a full pass removes nothing
// (removing an edge can re-violate a neighbor scanned earlier).
PruneReport prune(TypedGraph& g, const DegreeCaps& caps, Rng& rng);

}  // namespace hingen
