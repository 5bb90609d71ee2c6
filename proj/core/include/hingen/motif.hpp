#pragma once

#include <array>
#include <vector>

#include "hingen/graph.hpp"
#include "hingen/params.hpp"
#include "hingen/rng.hpp"
#include "hingen/schema.hpp"

namespace hingen {

// A node-type sequence starting and ending at the target type with no
// intermediate target-type node; every consecutive pair is a declared
// edge type. Stored in canonical orientation (lexicographically not
// greater than its reverse) since edges are undirected and anchors
// unordered.
struct MetaPath {
  std::vector<NodeTypeId> types;

  std::size_t hops() const { return types.size() - 1; }
  std::string signature(const Schema& schema) const;
  bool operator==(const MetaPath&) const = default;
};

// All distinct meta-paths of length in [2, max_hops], deduplicated up to
// reversal, sorted by length then type sequence. Empty when the schema
// has no target-to-target path within budget.
std::vector<MetaPath> enumerate_metapaths(const Schema& schema, int max_hops);

// Two anchor slots joined by every listed meta-path; per path, the number
// of parallel node-disjoint bridge instances is drawn from its range.
struct MotifTemplate {
  std::vector<MetaPath> paths;
  std::vector<BridgeRange> ranges;
};

MotifTemplate build_motif_template(std::vector<MetaPath> paths, std::vector<BridgeRange> ranges);

// Ranges looked up by signature; paths without an entry get [1, 1].
MotifTemplate build_motif_template(const Schema& schema, std::vector<MetaPath> paths,
                                   const std::map<std::string, BridgeRange>& ranges);

struct MotifInstance {
  std::array<NodeId, 2> anchors;
  std::vector<NodeId> nodes;  // anchors + bridge minor nodes
  std::vector<EdgeId> edges;
  std::size_t template_id = 0;
};

// Creates fresh anchors and, per meta-path, a uniformly drawn number of
// node-disjoint bridge instances. All instance edges are flagged as
// motif edges in the graph.
MotifInstance instantiate_motif(TypedGraph& g, const MotifTemplate& tmpl, Rng& rng);

}  // namespace hingen
