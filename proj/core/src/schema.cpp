#include "hingen/schema.hpp"

#include <algorithm>

namespace hingen {

Schema::Schema(std::vector<std::string> node_types, std::vector<EdgeTypeDef> edge_types,
               std::string target_type, std::vector<std::string> labels)
    : node_types_(std::move(node_types)), labels_(std::move(labels)) {
  require(!node_types_.empty(), "schema: node type set is empty");
  for (NodeTypeId t = 0; t < node_types_.size(); ++t) {
    require(node_type_ids_.emplace(node_types_[t], t).second,
            "schema: duplicate node type '" + node_types_[t] + "'");
  }

  auto target_it = node_type_ids_.find(target_type);
  require(target_it != node_type_ids_.end(),
          "schema: target type '" + target_type + "' is not a declared node type");
  target_type_ = target_it->second;

  require(!labels_.empty(), "schema: label set is empty");
  for (LabelId y = 0; y < labels_.size(); ++y) {
    require(label_ids_.emplace(labels_[y], y).second,
            "schema: duplicate label '" + labels_[y] + "'");
  }

  type_adjacency_.resize(node_types_.size());
  for (const EdgeTypeDef& def : edge_types) {
    auto src_it = node_type_ids_.find(def.src);
    auto dst_it = node_type_ids_.find(def.dst);
    require(src_it != node_type_ids_.end(),
            "schema: edge type '" + def.name + "' references unknown node type '" + def.src + "'");
    require(dst_it != node_type_ids_.end(),
            "schema: edge type '" + def.name + "' references unknown node type '" + def.dst + "'");
    EdgeTypeId e = static_cast<EdgeTypeId>(edge_src_.size());
    require(edge_type_ids_.emplace(def.name, e).second,
            "schema: duplicate edge type '" + def.name + "'");
    edge_names_.push_back(def.name);
    NodeTypeId a = src_it->second;
    NodeTypeId b = dst_it->second;
    edge_src_.push_back(a);
    edge_dst_.push_back(b);

    const std::uint64_t n = node_types_.size();
    bool fresh = pair_edge_type_.emplace(static_cast<std::uint64_t>(a) * n + b, e).second;
    if (a != b) {
      fresh = pair_edge_type_.emplace(static_cast<std::uint64_t>(b) * n + a, e).second && fresh;
    }
    require(fresh, "schema: more than one edge type declared between '" + def.src + "' and '" +
                       def.dst + "'");

    type_adjacency_[a].push_back(b);
    if (a != b) type_adjacency_[b].push_back(a);
  }
  for (auto& adj : type_adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
}

NodeTypeId Schema::node_type_id(const std::string& name) const {
  auto it = node_type_ids_.find(name);
  require(it != node_type_ids_.end(), "unknown node type '" + name + "'");
  return it->second;
}

EdgeTypeId Schema::edge_type_id(const std::string& name) const {
  auto it = edge_type_ids_.find(name);
  require(it != edge_type_ids_.end(), "unknown edge type '" + name + "'");
  return it->second;
}

LabelId Schema::label_id(const std::string& name) const {
  auto it = label_ids_.find(name);
  require(it != label_ids_.end(), "unknown label '" + name + "'");
  return it->second;
}

std::optional<EdgeTypeId> Schema::edge_type_between(NodeTypeId a, NodeTypeId b) const {
  auto it = pair_edge_type_.find(static_cast<std::uint64_t>(a) * node_types_.size() + b);
  if (it == pair_edge_type_.end()) return std::nullopt;
  return it->second;
}

}  // namespace hingen
