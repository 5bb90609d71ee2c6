#pragma once

#include <array>
#include <unordered_map>
#include <vector>

#include "hingen/graph.hpp"
#include "hingen/motif.hpp"

namespace hingen {

// One motif's ground-truth record. Edges are stored as (type, endpoints)
// rather than edge ids because merges rewire edges; endpoints are pushed
// through the node remap instead.
struct MotifRecord {
  std::size_t template_id = 0;
  std::array<NodeId, 2> anchors;
  std::vector<NodeId> nodes;
  struct EdgeRef {
    EdgeTypeId type;
    NodeId u;
    NodeId v;
  };
  std::vector<EdgeRef> edges;
};

// Per target node, the node/edge set of its originating motif, maintained
// through merges via apply_remap. In single-label mode every target maps
// to exactly one record; multi-label target merges may map a surviving
// target to the records of both fused motifs.
class GroundTruthMap {
 public:
  std::size_t add(const TypedGraph& g, const MotifInstance& inst);

  void apply_remap(const NodeRemap& remap);

  const std::vector<MotifRecord>& records() const { return records_; }
  const std::vector<std::size_t>& records_for(NodeId target) const;

 private:
  std::vector<MotifRecord> records_;
  std::unordered_map<NodeId, std::vector<std::size_t>> by_target_;
};

struct GroundTruthReport {
  std::size_t intact = 0;
  std::size_t degraded = 0;
  std::vector<std::size_t> degraded_records;

  double intact_fraction() const {
    std::size_t total = intact + degraded;
    return total == 0 ? 1.0 : static_cast<double>(intact) / static_cast<double>(total);
  }
};

// Checks that every record's nodes are alive and its edges present.
GroundTruthReport verify_ground_truth(const TypedGraph& g, const GroundTruthMap& gt);

}  // namespace hingen
