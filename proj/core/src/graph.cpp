#include "hingen/graph.hpp"

#include <algorithm>
#include <queue>

namespace hingen {

namespace {
const std::vector<LabelId> kEmptyLabels;
}

TypedGraph::TypedGraph(std::shared_ptr<const Schema> schema) : schema_(std::move(schema)) {
  require(schema_ != nullptr, "graph: null schema");
}

NodeId TypedGraph::add_node(NodeTypeId type) {
  check_internal(type < schema_->node_type_count(), "add_node: unknown node type");
  NodeId v = static_cast<NodeId>(node_type_.size());
  node_type_.push_back(type);
  node_alive_.push_back(true);
  adjacency_.emplace_back();
  degree_by_type_.emplace_back(schema_->node_type_count(), 0);
  ++alive_nodes_;
  return v;
}

NodeTypeId TypedGraph::node_type(NodeId v) const {
  check_internal(node_alive(v), "node_type: unknown or removed node");
  return node_type_[v];
}

EdgeId TypedGraph::add_edge(EdgeTypeId type, NodeId u, NodeId v) {
  check_internal(node_alive(u) && node_alive(v), "add_edge: unknown or removed endpoint");
  check_internal(u != v, "add_edge: self loop");
  check_internal(type < schema_->edge_type_count(), "add_edge: unknown edge type");
  check_internal(schema_->legal(type, node_type_[u], node_type_[v]),
                 "add_edge: schema-illegal edge '" + schema_->edge_type_name(type) + "' between " +
                     schema_->node_type_name(node_type_[u]) + " and " +
                     schema_->node_type_name(node_type_[v]));

  auto it = adjacency_[u].find(v);
  if (it != adjacency_[u].end()) {
    check_internal(edges_[it->second].type == type,
                   "add_edge: distinct edge types between one node pair");
    return it->second;  // duplicate insertion is a no-op
  }

  EdgeId e = static_cast<EdgeId>(edges_.size());
  edges_.push_back(Edge{type, u, v, true, false});
  adjacency_[u].emplace(v, e);
  adjacency_[v].emplace(u, e);
  ++degree_by_type_[u][node_type_[v]];
  ++degree_by_type_[v][node_type_[u]];
  ++alive_edges_;
  return e;
}

const TypedGraph::Edge& TypedGraph::edge(EdgeId e) const {
  check_internal(edge_alive(e), "edge: unknown or removed edge");
  return edges_[e];
}

std::optional<EdgeId> TypedGraph::find_edge(NodeId u, NodeId v) const {
  check_internal(node_alive(u) && node_alive(v), "find_edge: unknown or removed endpoint");
  auto it = adjacency_[u].find(v);
  if (it == adjacency_[u].end()) return std::nullopt;
  return it->second;
}

void TypedGraph::remove_edge(EdgeId e) {
  check_internal(edge_alive(e), "remove_edge: unknown or removed edge");
  Edge& rec = edges_[e];
  adjacency_[rec.u].erase(rec.v);
  adjacency_[rec.v].erase(rec.u);
  --degree_by_type_[rec.u][node_type_[rec.v]];
  --degree_by_type_[rec.v][node_type_[rec.u]];
  rec.alive = false;
  --alive_edges_;
}

void TypedGraph::remove_isolated_node(NodeId v) {
  check_internal(node_alive(v), "remove_isolated_node: unknown or removed node");
  check_internal(adjacency_[v].empty(), "remove_isolated_node: node still has edges");
  node_alive_[v] = false;
  labels_.erase(v);
  --alive_nodes_;
}

void TypedGraph::set_motif(EdgeId e) {
  check_internal(edge_alive(e), "set_motif: unknown or removed edge");
  edges_[e].motif = true;
}

const std::unordered_map<NodeId, EdgeId>& TypedGraph::neighbors(NodeId v) const {
  check_internal(node_alive(v), "neighbors: unknown or removed node");
  return adjacency_[v];
}

std::size_t TypedGraph::degree_by_type(NodeId v, NodeTypeId neighbor_type) const {
  check_internal(node_alive(v), "degree_by_type: unknown or removed node");
  check_internal(neighbor_type < schema_->node_type_count(), "degree_by_type: unknown node type");
  return degree_by_type_[v][neighbor_type];
}

void TypedGraph::add_label(NodeId v, LabelId y) {
  check_internal(node_alive(v), "add_label: unknown or removed node");
  check_internal(node_type_[v] == schema_->target_type(), "add_label: label on a non-target node");
  check_internal(y < schema_->label_count(), "add_label: unknown label");
  auto& set = labels_[v];
  auto it = std::lower_bound(set.begin(), set.end(), y);
  if (it == set.end() || *it != y) set.insert(it, y);
}

const std::vector<LabelId>& TypedGraph::label_set(NodeId v) const {
  auto it = labels_.find(v);
  return it == labels_.end() ? kEmptyLabels : it->second;
}

bool TypedGraph::has_label(NodeId v) const { return labels_.count(v) > 0; }

void TypedGraph::validate() const {
  std::size_t seen_edges = 0;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& rec = edges_[e];
    if (!rec.alive) continue;
    ++seen_edges;
    check_internal(node_alive(rec.u) && node_alive(rec.v), "validate: edge with dead endpoint");
    check_internal(rec.u != rec.v, "validate: self loop");
    check_internal(schema_->legal(rec.type, node_type_[rec.u], node_type_[rec.v]),
                   "validate: schema-illegal edge");
    auto it = adjacency_[rec.u].find(rec.v);
    check_internal(it != adjacency_[rec.u].end() && it->second == e,
                   "validate: adjacency out of sync (u side)");
    auto it2 = adjacency_[rec.v].find(rec.u);
    check_internal(it2 != adjacency_[rec.v].end() && it2->second == e,
                   "validate: adjacency out of sync (v side)");
  }
  check_internal(seen_edges == alive_edges_, "validate: edge count out of sync");

  std::size_t seen_nodes = 0;
  for (NodeId v = 0; v < node_type_.size(); ++v) {
    if (!node_alive_[v]) continue;
    ++seen_nodes;
    std::vector<std::uint32_t> counts(schema_->node_type_count(), 0);
    for (const auto& [u, e] : adjacency_[v]) {
      check_internal(node_alive(u) && edge_alive(e), "validate: dangling adjacency entry");
      ++counts[node_type_[u]];
    }
    check_internal(counts == degree_by_type_[v], "validate: per-type degree counters out of sync");
  }
  check_internal(seen_nodes == alive_nodes_, "validate: node count out of sync");

  for (const auto& [v, set] : labels_) {
    check_internal(node_alive(v), "validate: label on removed node");
    check_internal(node_type_[v] == schema_->target_type(), "validate: label on non-target node");
    check_internal(!set.empty() && std::is_sorted(set.begin(), set.end()),
                   "validate: malformed label set");
  }
}

std::size_t TypedGraph::connected_components() const {
  std::vector<bool> visited(node_type_.size(), false);
  std::size_t components = 0;
  for (NodeId start = 0; start < node_type_.size(); ++start) {
    if (!node_alive_[start] || visited[start]) continue;
    ++components;
    std::queue<NodeId> frontier;
    frontier.push(start);
    visited[start] = true;
    while (!frontier.empty()) {
      NodeId v = frontier.front();
      frontier.pop();
      for (const auto& [u, e] : adjacency_[v]) {
        if (!visited[u]) {
          visited[u] = true;
          frontier.push(u);
        }
      }
    }
  }
  return components;
}

}  // namespace hingen
