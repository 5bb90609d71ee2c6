#include "hingen/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hingen::io {

namespace fs = std::filesystem;

namespace {

std::string location(const fs::path& file, std::size_t line) {
  return file.string() + ":" + std::to_string(line);
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  if (!fields.empty() && !fields.back().empty() && fields.back().back() == '\r') {
    fields.back().pop_back();
  }
  return fields;
}

std::uint64_t parse_u64(const std::string& s, const fs::path& file, std::size_t line) {
  try {
    std::size_t pos = 0;
    std::uint64_t v = std::stoull(s, &pos);
    require(pos == s.size(), "");
    return v;
  } catch (const std::exception&) {
    throw UserError(location(file, line) + ": expected an unsigned integer, got '" + s + "'");
  }
}

double parse_double(const std::string& s, const fs::path& file, std::size_t line) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    require(pos == s.size(), "");
    return v;
  } catch (const std::exception&) {
    throw UserError(location(file, line) + ": expected a number, got '" + s + "'");
  }
}

// Calls fn(fields, line_number) for every non-comment, non-empty line.
template <typename F>
void for_each_record(const fs::path& path, F&& fn) {
  std::ifstream in(path);
  require(in.good(), "cannot open '" + path.string() + "'");
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    fn(split_tabs(line), lineno);
  }
}

void require_keys(const json& j, const std::vector<std::string>& allowed,
                  const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const auto& a : allowed) {
      if (key == a) {
        known = true;
        break;
      }
    }
    require(known, where + ": unknown key '" + key + "'");
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
  return buf;
}

std::string digest_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return fnv1a_hex(buf.str());
}

json load_json(const fs::path& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UserError(path.string() + ": " + e.what());
  }
}

std::shared_ptr<const Schema> schema_from_json(const json& j) {
  require(j.is_object(), "schema: expected a JSON object");
  require_keys(j, {"node_types", "edge_types", "target_type", "labels"}, "schema");
  for (const char* key : {"node_types", "edge_types", "target_type", "labels"}) {
    require(j.contains(key), std::string("schema: missing key '") + key + "'");
  }
  std::vector<std::string> node_types = j.at("node_types").get<std::vector<std::string>>();
  std::vector<EdgeTypeDef> edge_types;
  for (const auto& e : j.at("edge_types")) {
    require_keys(e, {"name", "src", "dst"}, "schema edge type");
    edge_types.push_back({e.at("name").get<std::string>(), e.at("src").get<std::string>(),
                          e.at("dst").get<std::string>()});
  }
  return std::make_shared<Schema>(std::move(node_types), std::move(edge_types),
                                  j.at("target_type").get<std::string>(),
                                  j.at("labels").get<std::vector<std::string>>());
}

json schema_to_json(const Schema& schema) {
  json j;
  j["node_types"] = schema.node_types();
  j["edge_types"] = json::array();
  for (EdgeTypeId e = 0; e < schema.edge_type_count(); ++e) {
    j["edge_types"].push_back({{"name", schema.edge_type_name(e)},
                               {"src", schema.node_type_name(schema.edge_src(e))},
                               {"dst", schema.node_type_name(schema.edge_dst(e))}});
  }
  j["target_type"] = schema.node_type_name(schema.target_type());
  j["labels"] = schema.labels();
  return j;
}

std::shared_ptr<const Schema> load_schema(const fs::path& path) {
  return schema_from_json(load_json(path));
}

json profile_to_json(const ReferenceProfile& prof) {
  const Schema& schema = *prof.schema;
  json j;
  j["format"] = 1;
  j["schema"] = schema_to_json(schema);
  j["target_count"] = prof.target_count;
  j["label_frequencies"] = json::object();
  for (LabelId y = 0; y < schema.label_count(); ++y) {
    j["label_frequencies"][schema.label_name(y)] = prof.label_frequencies[y];
  }
  j["degree_distributions"] = json::object();
  for (NodeTypeId t = 0; t < schema.node_type_count(); ++t) {
    if (t == schema.target_type()) continue;
    json dist = json::object();
    for (const auto& [k, p] : prof.target_degree_dists[t].pmf) {
      dist[std::to_string(k)] = p;
    }
    j["degree_distributions"][schema.node_type_name(t)] = std::move(dist);
  }
  j["degree_caps"] = json::object();
  for (NodeTypeId a = 0; a < schema.node_type_count(); ++a) {
    for (NodeTypeId b = 0; b < schema.node_type_count(); ++b) {
      if (prof.degree_caps[a][b] < 0) continue;
      j["degree_caps"][schema.node_type_name(a) + ":" + schema.node_type_name(b)] =
          prof.degree_caps[a][b];
    }
  }
  return j;
}

ReferenceProfile profile_from_json(const json& j) {
  require(j.is_object(), "profile: expected a JSON object");
  require_keys(j,
               {"format", "schema", "target_count", "label_frequencies", "degree_distributions",
                "degree_caps"},
               "profile");
  ReferenceProfile prof;
  prof.schema = schema_from_json(j.at("schema"));
  const Schema& schema = *prof.schema;
  prof.target_count = j.at("target_count").get<std::size_t>();

  prof.label_frequencies.assign(schema.label_count(), 0.0);
  for (const auto& [name, freq] : j.at("label_frequencies").items()) {
    prof.label_frequencies[schema.label_id(name)] = freq.get<double>();
  }

  prof.target_degree_dists.resize(schema.node_type_count());
  for (const auto& [name, dist] : j.at("degree_distributions").items()) {
    NodeTypeId t = schema.node_type_id(name);
    require(t != schema.target_type(), "profile: degree distribution for the target type");
    DegreeDistribution& d = prof.target_degree_dists[t];
    for (const auto& [k, p] : dist.items()) {
      int degree = static_cast<int>(std::stoll(k));
      d.pmf[degree] = p.get<double>();
      d.support = std::max(d.support, degree);
    }
    d.normalize_check();
  }
  for (NodeTypeId t = 0; t < schema.node_type_count(); ++t) {
    if (t == schema.target_type()) continue;
    if (prof.target_degree_dists[t].pmf.empty()) {
      prof.target_degree_dists[t].pmf[0] = 1.0;
    }
  }

  prof.degree_caps.assign(schema.node_type_count(),
                          std::vector<int>(schema.node_type_count(), -1));
  for (const auto& [key, cap] : j.at("degree_caps").items()) {
    auto colon = key.find(':');
    require(colon != std::string::npos, "profile: malformed degree cap key '" + key + "'");
    NodeTypeId a = schema.node_type_id(key.substr(0, colon));
    NodeTypeId b = schema.node_type_id(key.substr(colon + 1));
    prof.degree_caps[a][b] = cap.get<int>();
  }
  return prof;
}

ReferenceProfile load_profile(const fs::path& path) { return profile_from_json(load_json(path)); }

void save_profile(const ReferenceProfile& prof, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "cannot write '" + path.string() + "'");
  out << profile_to_json(prof).dump(2) << '\n';
}

json apply_overrides(json config, const std::vector<std::string>& overrides) {
  for (const std::string& entry : overrides) {
    auto eq = entry.find('=');
    require(eq != std::string::npos, "--set: expected key=value, got '" + entry + "'");
    std::string key = entry.substr(0, eq);
    std::string raw = entry.substr(eq + 1);
    json value;
    if (raw == "true" || raw == "false") {
      value = (raw == "true");
    } else {
      try {
        std::size_t pos = 0;
        double d = std::stod(raw, &pos);
        if (pos == raw.size()) {
          if (d == static_cast<long long>(d) && raw.find_first_of(".eE") == std::string::npos) {
            value = static_cast<long long>(d);
          } else {
            value = d;
          }
        } else {
          value = raw;
        }
      } catch (const std::exception&) {
        value = raw;
      }
    }
    auto dot = key.find('.');
    json& generator = config["generator"];
    if (dot == std::string::npos) {
      generator[key] = value;
    } else {
      generator[key.substr(0, dot)][key.substr(dot + 1)] = value;
    }
  }
  return config;
}

namespace {

std::vector<double> parse_prob_map(const json& j, const Schema& schema, double fallback,
                                   const std::string& name) {
  std::vector<double> probs(schema.node_type_count(), fallback);
  if (j.is_null()) return probs;
  if (j.is_number()) {
    probs.assign(schema.node_type_count(), j.get<double>());
    return probs;
  }
  require(j.is_object(), "config: '" + name + "' must be a number or an object");
  double def = fallback;
  if (j.contains("default")) def = j.at("default").get<double>();
  probs.assign(schema.node_type_count(), def);
  for (const auto& [key, value] : j.items()) {
    if (key == "default") continue;
    probs[schema.node_type_id(key)] = value.get<double>();
  }
  return probs;
}

}  // namespace

GeneratorParams params_from_config(const json& config, const Schema& schema) {
  require(config.is_object(), "config: expected a JSON object");
  require_keys(config, {"schema", "generator", "io"}, "config");
  require(config.contains("generator"), "config: missing 'generator' section");
  const json& gen = config.at("generator");
  require_keys(gen,
               {"motifs", "p", "q", "alpha", "beta", "feature_dim", "max_hops", "bridge_ranges",
                "multi_label", "seed", "caps", "label_policy", "multilabel_combine", "threads",
                "verify"},
               "config generator");

  GeneratorParams params;
  require(gen.contains("motifs"), "config: generator.motifs is required");
  params.motif_count = gen.at("motifs").get<std::size_t>();
  params.intra_prob =
      parse_prob_map(gen.value("p", json()), schema, kDefaultIntraProb, "p");
  params.inter_prob =
      parse_prob_map(gen.value("q", json()), schema, kDefaultInterProb, "q");
  params.cluster_variance = gen.value("alpha", 1.0);
  params.center_variance = gen.value("beta", 1.0);
  params.feature_dim = gen.value("feature_dim", std::size_t{64});
  params.max_hops = gen.value("max_hops", 2);
  params.multi_label = gen.value("multi_label", false);
  params.seed = gen.value("seed", std::uint64_t{0});
  params.threads = gen.value("threads", 1);
  params.verify = gen.value("verify", false);

  if (gen.contains("bridge_ranges")) {
    for (const auto& [sig, range] : gen.at("bridge_ranges").items()) {
      require(range.is_array() && range.size() == 2,
              "config: bridge range for '" + sig + "' must be [min, max]");
      params.bridge_ranges[sig] = {range[0].get<int>(), range[1].get<int>()};
    }
  }

  if (gen.contains("caps")) {
    const json& caps = gen.at("caps");
    if (caps.is_string()) {
      std::string mode = caps.get<std::string>();
      if (mode == "none") {
        params.apply_caps = false;
      } else {
        require(mode == "reference", "config: caps must be 'reference', 'none', or an object");
      }
    } else {
      require(caps.is_object(), "config: caps must be 'reference', 'none', or an object");
      DegreeCaps matrix(schema.node_type_count(),
                        std::vector<int>(schema.node_type_count(), -1));
      for (const auto& [key, cap] : caps.items()) {
        auto colon = key.find(':');
        require(colon != std::string::npos,
                "config: cap key '" + key + "' must be 'type:neighbor_type'");
        NodeTypeId a = schema.node_type_id(key.substr(0, colon));
        NodeTypeId b = schema.node_type_id(key.substr(colon + 1));
        matrix[a][b] = cap.get<int>();
      }
      params.cap_override = std::move(matrix);
    }
  }

  if (gen.contains("label_policy")) {
    std::string policy = gen.at("label_policy").get<std::string>();
    require(policy == "reference" || policy == "uniform",
            "config: label_policy must be 'reference' or 'uniform'");
    params.label_policy = policy == "uniform" ? LabelPolicy::kUniform : LabelPolicy::kReference;
  }
  if (gen.contains("multilabel_combine")) {
    std::string combine = gen.at("multilabel_combine").get<std::string>();
    require(combine == "product" || combine == "mixture",
            "config: multilabel_combine must be 'product' or 'mixture'");
    params.combine =
        combine == "mixture" ? MultiLabelCombine::kMixture : MultiLabelCombine::kProduct;
  }

  params.validate(schema);
  return params;
}

TypedGraph read_graph_dir(std::shared_ptr<const Schema> schema, const fs::path& edges_dir,
                          const fs::path& labels_file) {
  require(fs::is_directory(edges_dir), "'" + edges_dir.string() + "' is not a directory");
  TypedGraph g(schema);

  std::unordered_map<std::uint64_t, NodeId> id_map;
  const fs::path nodes_path = edges_dir / "nodes.tsv";
  for_each_record(nodes_path, [&](const std::vector<std::string>& fields, std::size_t line) {
    require(fields.size() == 2, location(nodes_path, line) + ": expected 'id<TAB>type'");
    std::uint64_t ext = parse_u64(fields[0], nodes_path, line);
    require(schema->has_node_type(fields[1]),
            location(nodes_path, line) + ": unknown node type '" + fields[1] + "'");
    require(id_map.emplace(ext, kInvalidNode).second,
            location(nodes_path, line) + ": duplicate node id " + fields[0]);
    id_map[ext] = g.add_node(schema->node_type_id(fields[1]));
  });
  require(!id_map.empty(), "'" + nodes_path.string() + "' declares no nodes");

  auto resolve = [&](const std::string& s, const fs::path& file, std::size_t line) {
    std::uint64_t ext = parse_u64(s, file, line);
    auto it = id_map.find(ext);
    require(it != id_map.end(), location(file, line) + ": undeclared node id " + s);
    return it->second;
  };

  for (EdgeTypeId e = 0; e < schema->edge_type_count(); ++e) {
    const fs::path edge_path = edges_dir / (schema->edge_type_name(e) + ".tsv");
    if (!fs::exists(edge_path)) continue;
    for_each_record(edge_path, [&](const std::vector<std::string>& fields, std::size_t line) {
      require(fields.size() == 2, location(edge_path, line) + ": expected 'src<TAB>dst'");
      NodeId u = resolve(fields[0], edge_path, line);
      NodeId v = resolve(fields[1], edge_path, line);
      require(u != v, location(edge_path, line) + ": self loop");
      require(schema->legal(e, g.node_type(u), g.node_type(v)),
              location(edge_path, line) + ": edge violates schema declaration for '" +
                  schema->edge_type_name(e) + "'");
      g.add_edge(e, u, v);
    });
  }

  if (!labels_file.empty()) {
    for_each_record(labels_file, [&](const std::vector<std::string>& fields, std::size_t line) {
      require(fields.size() == 2,
              location(labels_file, line) + ": expected 'id<TAB>label[,label...]'");
      NodeId v = resolve(fields[0], labels_file, line);
      require(g.node_type(v) == schema->target_type(),
              location(labels_file, line) + ": label on a non-target node");
      std::stringstream ss(fields[1]);
      std::string name;
      while (std::getline(ss, name, ',')) {
        require(!name.empty(), location(labels_file, line) + ": empty label");
        g.add_label(v, schema->label_id(name));
      }
    });
  }
  return g;
}

json manifest_to_json(const RunManifest& manifest, const Schema& schema) {
  json j;
  j["format"] = 1;
  j["seed"] = manifest.seed;
  j["motifs"] = manifest.motif_count;
  j["merged_pairs"] = manifest.merged_pairs;
  j["target_nodes"] = manifest.target_nodes;
  j["components"] = manifest.components;
  j["ground_truth_intact_fraction"] = manifest.ground_truth_intact_fraction;
  j["stages"] = json::array();
  for (const StageStats& s : manifest.stages) {
    j["stages"].push_back(
        {{"name", s.name}, {"nodes", s.nodes}, {"edges", s.edges}, {"seconds", s.seconds}});
  }
  if (manifest.pruned) {
    json p;
    p["removed_total"] = manifest.prune_report.removed_total;
    p["passes"] = manifest.prune_report.passes;
    p["components_before"] = manifest.prune_report.components_before;
    p["components_after"] = manifest.prune_report.components_after;
    p["removed"] = json::object();
    for (const auto& [pair, count] : manifest.prune_report.removed) {
      p["removed"][schema.node_type_name(pair.first) + ":" + schema.node_type_name(pair.second)] =
          count;
    }
    p["motif_violations"] = json::array();
    for (const auto& v : manifest.prune_report.violations) {
      p["motif_violations"].push_back({{"node", v.node},
                                       {"neighbor_type", schema.node_type_name(v.neighbor_type)},
                                       {"motif_degree", v.motif_degree},
                                       {"cap", v.cap}});
    }
    j["prune"] = std::move(p);
  }
  j["file_digests"] = manifest.file_digests;
  return j;
}

void write_outputs(GenerationResult& result, const fs::path& out_dir) {
  const TypedGraph& g = result.graph;
  const Schema& schema = g.schema();
  fs::create_directories(out_dir);

  auto open = [&](const std::string& name) {
    std::ofstream out(out_dir / name, std::ios::binary);
    require(out.good(), "cannot write '" + (out_dir / name).string() + "'");
    out << kFormatHeader << '\n';
    return out;
  };
  auto record = [&](const std::string& name) {
    result.manifest.file_digests[name] = digest_file(out_dir / name);
  };

  {
    auto out = open("nodes.tsv");
    out << "#id\ttype\n";
    g.for_each_node([&](NodeId v) {
      out << v << '\t' << schema.node_type_name(g.node_type(v)) << '\n';
    });
  }
  record("nodes.tsv");

  for (EdgeTypeId e = 0; e < schema.edge_type_count(); ++e) {
    const std::string name = schema.edge_type_name(e) + ".tsv";
    {
      auto out = open(name);
      out << "#src\tdst\n";
      g.for_each_edge([&](EdgeId id, const TypedGraph::Edge& rec) {
        if (rec.type == e) out << rec.u << '\t' << rec.v << '\n';
      });
    }
    record(name);
  }

  {
    auto out = open("labels.tsv");
    out << "#id\tlabels\n";
    g.for_each_node([&](NodeId v) {
      if (!g.has_label(v)) return;
      out << v << '\t';
      const auto& set = g.label_set(v);
      for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out << ',';
        out << schema.label_name(set[i]);
      }
      out << '\n';
    });
  }
  record("labels.tsv");

  {
    auto out = open("features.tsv");
    // Minor nodes carry no generated features; consumers choose their
    // own policy (constant, id, or none).
    out << "#minor-feature-policy none\n";
    out << "#id";
    for (std::size_t i = 0; i < result.features.dim; ++i) out << "\tf" << i;
    out << '\n';
    for (std::size_t i = 0; i < result.features.rows(); ++i) {
      out << result.features.node_ids[i];
      const double* row = result.features.row(i);
      for (std::size_t c = 0; c < result.features.dim; ++c) out << '\t' << format_double(row[c]);
      out << '\n';
    }
  }
  record("features.tsv");

  {
    auto out = open("ground_truth.tsv");
    out << "#target_id\tmotif_nodes\tmotif_edges\n";
    std::vector<NodeId> targets;
    g.for_each_node([&](NodeId v) {
      if (g.node_type(v) == schema.target_type()) targets.push_back(v);
    });
    for (NodeId t : targets) {
      for (std::size_t id : result.ground_truth.records_for(t)) {
        const MotifRecord& rec = result.ground_truth.records()[id];
        out << t << '\t';
        for (std::size_t i = 0; i < rec.nodes.size(); ++i) {
          if (i) out << ',';
          out << rec.nodes[i];
        }
        out << '\t';
        for (std::size_t i = 0; i < rec.edges.size(); ++i) {
          if (i) out << ';';
          out << schema.edge_type_name(rec.edges[i].type) << ':' << rec.edges[i].u << ':'
              << rec.edges[i].v;
        }
        out << '\n';
      }
    }
  }
  record("ground_truth.tsv");

  {
    std::ofstream out(out_dir / "manifest.json", std::ios::binary);
    require(out.good(), "cannot write manifest.json");
    out << manifest_to_json(result.manifest, schema).dump(2) << '\n';
  }
}

PredictionFile read_predictions(const fs::path& path) {
  PredictionFile preds;
  bool header_seen = false;
  for_each_record(path, [&](const std::vector<std::string>& fields, std::size_t line) {
    if (!header_seen) {
      // Header row: id, then L full-graph columns, then L motif columns.
      require(fields.size() >= 3 && fields.size() % 2 == 1,
              location(path, line) + ": header must be 'id' plus two equal label column groups");
      preds.label_count = (fields.size() - 1) / 2;
      header_seen = true;
      return;
    }
    require(fields.size() == 1 + 2 * preds.label_count,
            location(path, line) + ": wrong column count");
    preds.node_ids.push_back(parse_u64(fields[0], path, line));
    std::vector<double> full(preds.label_count), motif(preds.label_count);
    for (std::size_t l = 0; l < preds.label_count; ++l) {
      full[l] = parse_double(fields[1 + l], path, line);
      motif[l] = parse_double(fields[1 + preds.label_count + l], path, line);
      require(full[l] >= 0.0 && full[l] <= 1.0 && motif[l] >= 0.0 && motif[l] <= 1.0,
              location(path, line) + ": probability out of [0,1]");
    }
    preds.full.push_back(std::move(full));
    preds.motif.push_back(std::move(motif));
  });
  require(header_seen, "'" + path.string() + "' has no header row");
  return preds;
}

}  // namespace hingen::io
