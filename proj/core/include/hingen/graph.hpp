#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hingen/schema.hpp"

namespace hingen {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

constexpr NodeId kInvalidNode = static_cast<NodeId>(-1);
constexpr EdgeId kInvalidEdge = static_cast<EdgeId>(-1);

// Maps node ids dropped by merges to their surviving node. Resolution
// follows chains (the survivor may itself be dropped later) with path
// compression, so resolve is idempotent: resolve(resolve(x)) == resolve(x).
class NodeRemap {
 public:
  void record(NodeId dropped, NodeId survivor) { parent_[dropped] = survivor; }

  NodeId resolve(NodeId v) const {
    NodeId root = v;
    for (auto it = parent_.find(root); it != parent_.end(); it = parent_.find(root)) {
      root = it->second;
    }
    while (v != root) {
      auto it = parent_.find(v);
      NodeId next = it->second;
      it->second = root;
      v = next;
    }
    return root;
  }

  std::size_t size() const { return parent_.size(); }

 private:
  mutable std::unordered_map<NodeId, NodeId> parent_;
};

// Mutable heterogeneous graph. Undirected simple graph: no self loops,
// at most one edge per node pair, every edge legal under the schema.
// Node and edge removal leaves tombstones; ids are never reused.
class TypedGraph {
 public:
  struct Edge {
    EdgeTypeId type;
    NodeId u;
    NodeId v;
    bool alive;
    bool motif;  // part of a major motif; protected by pruning
  };

  explicit TypedGraph(std::shared_ptr<const Schema> schema);

  const Schema& schema() const { return *schema_; }
  std::shared_ptr<const Schema> schema_ptr() const { return schema_; }

  NodeId add_node(NodeTypeId type);
  // Inserting an existing (type, u, v) edge is a no-op returning the
  // existing edge id. Throws InternalError on schema-illegal edges and
  // self loops: generation must never produce one.
  EdgeId add_edge(EdgeTypeId type, NodeId u, NodeId v);

  bool node_alive(NodeId v) const { return v < node_type_.size() && node_alive_[v]; }
  bool edge_alive(EdgeId e) const { return e < edges_.size() && edges_[e].alive; }
  NodeTypeId node_type(NodeId v) const;
  const Edge& edge(EdgeId e) const;

  std::optional<EdgeId> find_edge(NodeId u, NodeId v) const;
  void remove_edge(EdgeId e);
  // Node must have no incident edges.
  void remove_isolated_node(NodeId v);

  void set_motif(EdgeId e);

  // neighbor id -> connecting edge id
  const std::unordered_map<NodeId, EdgeId>& neighbors(NodeId v) const;
  std::size_t degree(NodeId v) const { return neighbors(v).size(); }
  std::size_t degree_by_type(NodeId v, NodeTypeId neighbor_type) const;

  // Labels (target nodes only). Label sets are kept sorted and unique.
  void add_label(NodeId v, LabelId y);
  const std::vector<LabelId>& label_set(NodeId v) const;
  bool has_label(NodeId v) const;

  std::size_t node_count() const { return alive_nodes_; }
  std::size_t edge_count() const { return alive_edges_; }
  // Upper bound on node/edge ids ever allocated (including tombstones).
  std::size_t node_capacity() const { return node_type_.size(); }
  std::size_t edge_capacity() const { return edges_.size(); }

  template <typename F>
  void for_each_node(F&& f) const {
    for (NodeId v = 0; v < node_type_.size(); ++v)
      if (node_alive_[v]) f(v);
  }

  template <typename F>
  void for_each_edge(F&& f) const {
    for (EdgeId e = 0; e < edges_.size(); ++e)
      if (edges_[e].alive) f(e, edges_[e]);
  }

  // Full consistency check: schema legality of every edge, adjacency
  // symmetry, per-type degree counters, label placement. O(|V| + |E|).
  void validate() const;

  std::size_t connected_components() const;

 private:
  std::shared_ptr<const Schema> schema_;
  std::vector<NodeTypeId> node_type_;
  std::vector<bool> node_alive_;
  std::vector<Edge> edges_;
  std::vector<std::unordered_map<NodeId, EdgeId>> adjacency_;
  std::vector<std::vector<std::uint32_t>> degree_by_type_;  // [node][neighbor type]
  std::unordered_map<NodeId, std::vector<LabelId>> labels_;
  std::size_t alive_nodes_ = 0;
  std::size_t alive_edges_ = 0;
};

}  // namespace hingen
