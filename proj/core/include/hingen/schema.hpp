#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hingen/error.hpp"

namespace hingen {

using NodeTypeId = std::uint32_t;
using EdgeTypeId = std::uint32_t;
using LabelId = std::uint32_t;

struct EdgeTypeDef {
  std::string name;
  std::string src;
  std::string dst;
};

// Declares the legal shape of a heterogeneous graph: node types, which
// edge types may connect which node-type pairs, the target (labeled)
// node type, and the label set. Immutable once constructed.
class Schema {
 public:
  Schema(std::vector<std::string> node_types, std::vector<EdgeTypeDef> edge_types,
         std::string target_type, std::vector<std::string> labels);

  std::size_t node_type_count() const { return node_types_.size(); }
  std::size_t edge_type_count() const { return edge_src_.size(); }
  std::size_t label_count() const { return labels_.size(); }

  const std::vector<std::string>& node_types() const { return node_types_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const std::string& node_type_name(NodeTypeId t) const { return node_types_.at(t); }
  const std::string& edge_type_name(EdgeTypeId e) const { return edge_names_.at(e); }
  const std::string& label_name(LabelId y) const { return labels_.at(y); }

  NodeTypeId node_type_id(const std::string& name) const;
  EdgeTypeId edge_type_id(const std::string& name) const;
  LabelId label_id(const std::string& name) const;

  bool has_node_type(const std::string& name) const { return node_type_ids_.count(name) > 0; }
  bool has_edge_type(const std::string& name) const { return edge_type_ids_.count(name) > 0; }

  NodeTypeId target_type() const { return target_type_; }
  NodeTypeId edge_src(EdgeTypeId e) const { return edge_src_.at(e); }
  NodeTypeId edge_dst(EdgeTypeId e) const { return edge_dst_.at(e); }

  // True when an edge of type e between nodes of types a and b is legal
  // (either orientation; edges are undirected).
  bool legal(EdgeTypeId e, NodeTypeId a, NodeTypeId b) const {
    return (edge_src_.at(e) == a && edge_dst_.at(e) == b) ||
           (edge_src_.at(e) == b && edge_dst_.at(e) == a);
  }

  // The declared edge type between an unordered node-type pair, if any.
  // The schema admits at most one edge type per pair.
  std::optional<EdgeTypeId> edge_type_between(NodeTypeId a, NodeTypeId b) const;

  // Node types reachable from t by one declared edge type.
  const std::vector<NodeTypeId>& adjacent_types(NodeTypeId t) const {
    return type_adjacency_.at(t);
  }

 private:
  std::vector<std::string> node_types_;
  std::vector<std::string> edge_names_;
  std::vector<NodeTypeId> edge_src_;
  std::vector<NodeTypeId> edge_dst_;
  NodeTypeId target_type_ = 0;
  std::vector<std::string> labels_;

  std::unordered_map<std::string, NodeTypeId> node_type_ids_;
  std::unordered_map<std::string, EdgeTypeId> edge_type_ids_;
  std::unordered_map<std::string, LabelId> label_ids_;
  std::vector<std::vector<NodeTypeId>> type_adjacency_;
  // (a * ntypes + b) -> edge type, for both orientations
  std::unordered_map<std::uint64_t, EdgeTypeId> pair_edge_type_;
};

}  // namespace hingen
