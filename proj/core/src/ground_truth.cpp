#include "hingen/ground_truth.hpp"

#include <algorithm>

namespace hingen {

namespace {
const std::vector<std::size_t> kNoRecords;
}

std::size_t GroundTruthMap::add(const TypedGraph& g, const MotifInstance& inst) {
  MotifRecord rec;
  rec.template_id = inst.template_id;
  rec.anchors = inst.anchors;
  rec.nodes = inst.nodes;
  rec.edges.reserve(inst.edges.size());
  for (EdgeId e : inst.edges) {
    const auto& edge = g.edge(e);
    rec.edges.push_back({edge.type, edge.u, edge.v});
  }
  std::size_t id = records_.size();
  records_.push_back(std::move(rec));
  by_target_[inst.anchors[0]].push_back(id);
  by_target_[inst.anchors[1]].push_back(id);
  return id;
}

void GroundTruthMap::apply_remap(const NodeRemap& remap) {
  by_target_.clear();
  for (std::size_t id = 0; id < records_.size(); ++id) {
    MotifRecord& rec = records_[id];
    for (NodeId& a : rec.anchors) a = remap.resolve(a);
    for (NodeId& v : rec.nodes) v = remap.resolve(v);
    std::sort(rec.nodes.begin(), rec.nodes.end());
    rec.nodes.erase(std::unique(rec.nodes.begin(), rec.nodes.end()), rec.nodes.end());
    for (auto& e : rec.edges) {
      e.u = remap.resolve(e.u);
      e.v = remap.resolve(e.v);
    }
    by_target_[rec.anchors[0]].push_back(id);
    if (rec.anchors[1] != rec.anchors[0]) by_target_[rec.anchors[1]].push_back(id);
  }
}

const std::vector<std::size_t>& GroundTruthMap::records_for(NodeId target) const {
  auto it = by_target_.find(target);
  return it == by_target_.end() ? kNoRecords : it->second;
}

GroundTruthReport verify_ground_truth(const TypedGraph& g, const GroundTruthMap& gt) {
  GroundTruthReport report;
  for (std::size_t id = 0; id < gt.records().size(); ++id) {
    const MotifRecord& rec = gt.records()[id];
    bool ok = true;
    for (NodeId v : rec.nodes) {
      if (!g.node_alive(v)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      for (const auto& e : rec.edges) {
        if (!g.node_alive(e.u) || !g.node_alive(e.v)) {
          ok = false;
          break;
        }
        auto found = g.find_edge(e.u, e.v);
        if (!found || g.edge(*found).type != e.type) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      ++report.intact;
    } else {
      ++report.degraded;
      report.degraded_records.push_back(id);
    }
  }
  return report;
}

}  // namespace hingen
