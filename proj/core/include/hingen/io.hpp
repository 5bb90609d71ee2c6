#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "json.hpp"

#include "hingen/metrics.hpp"
#include "hingen/pipeline.hpp"
#include "hingen/reference.hpp"

namespace hingen::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kFormatHeader = "#hingen-format 1";

std::shared_ptr<const Schema> schema_from_json(const json& j);
json schema_to_json(const Schema& schema);
std::shared_ptr<const Schema> load_schema(const std::filesystem::path& path);

ReferenceProfile profile_from_json(const json& j);
json profile_to_json(const ReferenceProfile& prof);
ReferenceProfile load_profile(const std::filesystem::path& path);
void save_profile(const ReferenceProfile& prof, const std::filesystem::path& path);

// Parses the config file's generator section against the schema; rejects
// unknown keys. `overrides` holds `--set key=value` entries applied on
// top of the file.
GeneratorParams params_from_config(const json& config, const Schema& schema);
json apply_overrides(json config, const std::vector<std::string>& overrides);
json load_json(const std::filesystem::path& path);

// Reads a graph from a dataset directory: nodes.tsv (id, type), one
// <edge_type>.tsv (src, dst) per edge type, plus an optional label file
// (id, comma-separated labels). External ids may be sparse; they are
// remapped to dense internal ids.
TypedGraph read_graph_dir(std::shared_ptr<const Schema> schema,
                          const std::filesystem::path& edges_dir,
                          const std::filesystem::path& labels_file);

// Writes nodes.tsv, per-edge-type edge lists, labels.tsv, features.tsv,
// ground_truth.tsv and manifest.json, recording each data file's digest
// in the manifest before it is written.
void write_outputs(GenerationResult& result, const std::filesystem::path& out_dir);

json manifest_to_json(const RunManifest& manifest, const Schema& schema);

PredictionFile read_predictions(const std::filesystem::path& path);

std::string fnv1a_hex(const std::string& bytes);
std::string digest_file(const std::filesystem::path& path);

}  // namespace hingen::io
