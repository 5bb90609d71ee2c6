#include "hingen/motif.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hingen {

std::string MetaPath::signature(const Schema& schema) const {
  std::string out;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (i) out += '-';
    out += schema.node_type_name(types[i]);
  }
  return out;
}

namespace {

std::vector<NodeTypeId> canonical_orientation(std::vector<NodeTypeId> seq) {
  std::vector<NodeTypeId> rev(seq.rbegin(), seq.rend());
  return std::min(seq, rev);
}

}  // namespace

std::vector<MetaPath> enumerate_metapaths(const Schema& schema, int max_hops) {
  require(max_hops >= 2, "enumerate_metapaths: max_hops must be at least 2");
  const NodeTypeId target = schema.target_type();

  std::set<std::vector<NodeTypeId>> found;
  std::vector<NodeTypeId> seq{target};  // current type sequence, target first
  std::function<void(NodeTypeId, int)> walk = [&](NodeTypeId cur, int hops) {
    for (NodeTypeId next : schema.adjacent_types(cur)) {
      if (next == target) {
        if (hops + 1 >= 2) {
          seq.push_back(target);
          found.insert(canonical_orientation(seq));
          seq.pop_back();
        }
        continue;  // intermediate nodes are never target-typed
      }
      if (hops + 1 < max_hops) {
        seq.push_back(next);
        walk(next, hops + 1);
        seq.pop_back();
      }
    }
  };
  walk(target, 0);

  std::vector<MetaPath> out;
  out.reserve(found.size());
  for (const auto& s : found) out.push_back(MetaPath{s});
  std::sort(out.begin(), out.end(), [](const MetaPath& a, const MetaPath& b) {
    if (a.types.size() != b.types.size()) return a.types.size() < b.types.size();
    return a.types < b.types;
  });
  return out;
}

MotifTemplate build_motif_template(std::vector<MetaPath> paths, std::vector<BridgeRange> ranges) {
  require(!paths.empty(), "motif template: meta-path list is empty");
  if (ranges.empty()) ranges.assign(paths.size(), BridgeRange{});
  require(ranges.size() == paths.size(), "motif template: one bridge range per meta-path");
  for (const BridgeRange& r : ranges) {
    require(r.min >= 1, "motif template: bridge range min must be at least 1");
    require(r.min <= r.max, "motif template: bridge range min exceeds max");
  }
  return MotifTemplate{std::move(paths), std::move(ranges)};
}

MotifTemplate build_motif_template(const Schema& schema, std::vector<MetaPath> paths,
                                   const std::map<std::string, BridgeRange>& ranges) {
  std::vector<BridgeRange> resolved;
  resolved.reserve(paths.size());
  std::size_t used = 0;
  for (const MetaPath& p : paths) {
    auto it = ranges.find(p.signature(schema));
    if (it != ranges.end()) {
      resolved.push_back(it->second);
      ++used;
    } else {
      resolved.push_back(BridgeRange{});
    }
  }
  require(used == ranges.size(),
          "motif template: bridge range given for a meta-path not in the template");
  return build_motif_template(std::move(paths), std::move(resolved));
}

MotifInstance instantiate_motif(TypedGraph& g, const MotifTemplate& tmpl, Rng& rng) {
  const Schema& schema = g.schema();
  MotifInstance inst;
  inst.anchors = {g.add_node(schema.target_type()), g.add_node(schema.target_type())};
  inst.nodes.assign(inst.anchors.begin(), inst.anchors.end());

  for (std::size_t pi = 0; pi < tmpl.paths.size(); ++pi) {
    const MetaPath& path = tmpl.paths[pi];
    const BridgeRange& range = tmpl.ranges[pi];
    int count = std::uniform_int_distribution<int>(range.min, range.max)(rng);
    for (int b = 0; b < count; ++b) {
      NodeId prev = inst.anchors[0];
      for (std::size_t i = 1; i + 1 < path.types.size(); ++i) {
        NodeId mid = g.add_node(path.types[i]);
        inst.nodes.push_back(mid);
        auto et = schema.edge_type_between(path.types[i - 1], path.types[i]);
        check_internal(et.has_value(), "instantiate_motif: meta-path step has no edge type");
        inst.edges.push_back(g.add_edge(*et, prev, mid));
        prev = mid;
      }
      auto et = schema.edge_type_between(path.types[path.types.size() - 2], path.types.back());
      check_internal(et.has_value(), "instantiate_motif: meta-path step has no edge type");
      inst.edges.push_back(g.add_edge(*et, prev, inst.anchors[1]));
    }
  }
  for (EdgeId e : inst.edges) g.set_motif(e);
  return inst;
}

}  // namespace hingen
