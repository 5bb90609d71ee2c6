#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "hingen/merge.hpp"
#include "hingen/pipeline.hpp"
#include "hingen/reference.hpp"

using namespace hingen;

namespace {

std::shared_ptr<const Schema> bench_schema() {
  return std::make_shared<Schema>(
      std::vector<std::string>{"movie", "director", "actor"},
      std::vector<EdgeTypeDef>{{"movie-director", "movie", "director"},
                               {"movie-actor", "movie", "actor"}},
      "movie", std::vector<std::string>{"action", "comedy", "drama"});
}

ReferenceProfile bench_profile() {
  auto schema = bench_schema();
  ReferenceProfile prof;
  prof.schema = schema;
  prof.target_count = 4278;
  prof.label_frequencies = {0.4, 0.35, 0.25};
  prof.target_degree_dists.resize(schema->node_type_count());
  prof.target_degree_dists[schema->node_type_id("director")] = {{{1, 1.0}}, 1};
  prof.target_degree_dists[schema->node_type_id("actor")] = {{{1, 0.2}, {2, 0.3}, {3, 0.5}}, 3};
  prof.degree_caps.assign(schema->node_type_count(),
                          std::vector<int>(schema->node_type_count(), -1));
  prof.degree_caps[0][1] = 1;
  prof.degree_caps[0][2] = 3;
  prof.degree_caps[1][0] = 12;
  prof.degree_caps[2][0] = 20;
  return prof;
}

void BM_MergePair(benchmark::State& state) {
  auto schema = bench_schema();
  const std::size_t stars = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    state.PauseTiming();
    TypedGraph g(schema);
    Rng rng(1);
    std::vector<NodeId> actors;
    // Star-shaped actors with random movie fan-out.
    std::vector<NodeId> movies;
    for (std::size_t i = 0; i < stars; ++i) movies.push_back(g.add_node(0));
    for (std::size_t i = 0; i < stars; ++i) {
      NodeId a = g.add_node(2);
      actors.push_back(a);
      for (int k = 0; k < 4; ++k) {
        g.add_edge(1, movies[rng() % movies.size()], a);
      }
    }
    state.ResumeTiming();
    NodeRemap remap;
    for (std::size_t i = 0; i + 1 < actors.size(); i += 2) {
      merge_pair(g, actors[i], actors[i + 1], remap);
    }
    benchmark::DoNotOptimize(g.edge_count());
  }
  state.SetItemsProcessed(state.iterations() * (stars / 2));
}
BENCHMARK(BM_MergePair)->Arg(256)->Arg(1024)->Arg(4096);

void BM_GeneratePipeline(benchmark::State& state) {
  ReferenceProfile prof = bench_profile();
  GeneratorParams params = estimate_params(prof);
  params.motif_count = static_cast<std::size_t>(state.range(0));
  params.seed = 7;
  for (auto _ : state) {
    GenerationResult result = generate(params, prof);
    benchmark::DoNotOptimize(result.graph.edge_count());
  }
  state.SetItemsProcessed(state.iterations() * params.motif_count);
}
BENCHMARK(BM_GeneratePipeline)->Arg(100)->Arg(500)->Arg(2139)->Unit(benchmark::kMillisecond);

void BM_FeatureSampling(benchmark::State& state) {
  ReferenceProfile prof = bench_profile();
  GeneratorParams params = estimate_params(prof);
  params.motif_count = 500;
  params.seed = 7;
  params.threads = static_cast<int>(state.range(0));
  GenerationResult base = generate(params, prof);
  for (auto _ : state) {
    FeatureMatrix m = sample_features(base.graph, base.feature_spec,
                                      MultiLabelCombine::kProduct, 7, params.threads);
    benchmark::DoNotOptimize(m.values.data());
  }
}
BENCHMARK(BM_FeatureSampling)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
