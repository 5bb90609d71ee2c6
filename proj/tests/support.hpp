// Shared fixtures for the test suites: dataset-style schemas, synthetic
// reference profiles, and a brute-force merge oracle kept independent of
// the merge engine.
#pragma once

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hingen/graph.hpp"
#include "hingen/reference.hpp"

namespace testsupport {

using namespace hingen;

inline std::shared_ptr<const Schema> imdb_schema() {
  return std::make_shared<Schema>(
      std::vector<std::string>{"movie", "director", "actor"},
      std::vector<EdgeTypeDef>{{"movie-director", "movie", "director"},
                               {"movie-actor", "movie", "actor"}},
      "movie", std::vector<std::string>{"action", "comedy", "drama"});
}

inline std::shared_ptr<const Schema> acm_schema() {
  return std::make_shared<Schema>(
      std::vector<std::string>{"paper", "author", "subject"},
      std::vector<EdgeTypeDef>{{"paper-author", "paper", "author"},
                               {"paper-subject", "paper", "subject"}},
      "paper", std::vector<std::string>{"database", "wireless", "datamining"});
}

inline std::shared_ptr<const Schema> dblp_schema() {
  return std::make_shared<Schema>(
      std::vector<std::string>{"author", "paper", "conference", "term"},
      std::vector<EdgeTypeDef>{{"author-paper", "author", "paper"},
                               {"paper-conference", "paper", "conference"},
                               {"paper-term", "paper", "term"}},
      "author", std::vector<std::string>{"db", "ai", "cv", "nlp"});
}

// A hand-written profile in the shape cmd_analyze would produce for an
// IMDB-like reference: every movie has one director, one to three
// actors.
inline ReferenceProfile imdb_profile(std::shared_ptr<const Schema> schema = imdb_schema()) {
  ReferenceProfile prof;
  prof.schema = schema;
  prof.target_count = 4278;
  prof.label_frequencies = {0.4, 0.35, 0.25};
  prof.target_degree_dists.resize(schema->node_type_count());
  prof.target_degree_dists[schema->node_type_id("director")].pmf = {{1, 1.0}};
  prof.target_degree_dists[schema->node_type_id("director")].support = 1;
  prof.target_degree_dists[schema->node_type_id("actor")].pmf = {{1, 0.2}, {2, 0.3}, {3, 0.5}};
  prof.target_degree_dists[schema->node_type_id("actor")].support = 3;
  prof.degree_caps.assign(schema->node_type_count(),
                          std::vector<int>(schema->node_type_count(), -1));
  auto movie = schema->node_type_id("movie");
  auto director = schema->node_type_id("director");
  auto actor = schema->node_type_id("actor");
  prof.degree_caps[movie][director] = 1;
  prof.degree_caps[movie][actor] = 3;
  prof.degree_caps[director][movie] = 12;
  prof.degree_caps[actor][movie] = 20;
  return prof;
}

inline GeneratorParams imdb_params(const ReferenceProfile& prof, std::size_t motifs,
                                   double p = 0.7, double q = 0.3, std::uint64_t seed = 1) {
  GeneratorParams params = estimate_params(prof);
  params.motif_count = motifs;
  std::fill(params.intra_prob.begin(), params.intra_prob.end(), p);
  std::fill(params.inter_prob.begin(), params.inter_prob.end(), q);
  params.seed = seed;
  params.feature_dim = 8;
  return params;
}

// Naive merge oracle: the graph as a set of canonical
// (type, min, max) triples. Merging replaces the dropped node everywhere,
// discards self pairs, and dedupes.
using EdgeSet = std::set<std::tuple<EdgeTypeId, NodeId, NodeId>>;

inline EdgeSet edge_set(const TypedGraph& g) {
  EdgeSet set;
  g.for_each_edge([&](EdgeId, const TypedGraph::Edge& e) {
    set.insert({e.type, std::min(e.u, e.v), std::max(e.u, e.v)});
  });
  return set;
}

inline EdgeSet oracle_merge(const EdgeSet& edges, NodeId keep, NodeId drop) {
  EdgeSet out;
  for (auto [t, u, v] : edges) {
    if (u == drop) u = keep;
    if (v == drop) v = keep;
    if (u == v) continue;
    out.insert({t, std::min(u, v), std::max(u, v)});
  }
  return out;
}

inline std::set<NodeId> node_set(const TypedGraph& g) {
  std::set<NodeId> out;
  g.for_each_node([&](NodeId v) { out.insert(v); });
  return out;
}

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<unsigned> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("hingen-test-" + tag + "-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  out << contents;
}

}  // namespace testsupport
