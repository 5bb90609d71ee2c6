// Acceptance gate: runs every release criterion and prints one PASS/FAIL
// line each. Exits nonzero if any criterion fails.

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "hingen/io.hpp"
#include "hingen/pipeline.hpp"
#include "support.hpp"

using namespace hingen;
using testsupport::EdgeSet;
using testsupport::edge_set;
using testsupport::node_set;
using testsupport::oracle_merge;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - start).count();
}

TypedGraph random_graph(std::shared_ptr<const Schema> schema, std::size_t movies,
                        std::size_t minors, std::size_t edges, Rng& rng) {
  TypedGraph g(schema);
  std::vector<NodeId> targets, others;
  for (std::size_t i = 0; i < movies; ++i)
    targets.push_back(g.add_node(schema->node_type_id("movie")));
  for (std::size_t i = 0; i < minors; ++i) {
    others.push_back(g.add_node(i % 2 ? schema->node_type_id("director")
                                      : schema->node_type_id("actor")));
  }
  for (std::size_t i = 0; i < edges; ++i) {
    NodeId m = targets[rng() % targets.size()];
    NodeId x = others[rng() % others.size()];
    g.add_edge(*schema->edge_type_between(g.node_type(m), g.node_type(x)), m, x);
  }
  return g;
}

// Connected components as node sets (TypedGraph only reports the count).
std::vector<std::vector<NodeId>> component_lists(const TypedGraph& g) {
  std::vector<std::vector<NodeId>> comps;
  std::set<NodeId> seen;
  g.for_each_node([&](NodeId start) {
    if (seen.count(start)) return;
    comps.emplace_back();
    std::queue<NodeId> frontier;
    frontier.push(start);
    seen.insert(start);
    while (!frontier.empty()) {
      NodeId v = frontier.front();
      frontier.pop();
      comps.back().push_back(v);
      for (const auto& [u, e] : g.neighbors(v)) {
        if (seen.insert(u).second) frontier.push(u);
      }
    }
  });
  return comps;
}

// ---- Criterion 1: merge oracle equivalence --------------------------------

bool criterion_merge_oracle() {
  auto schema = testsupport::imdb_schema();
  Rng rng(101);
  auto start = Clock::now();
  for (int trial = 0; trial < 1000; ++trial) {
    TypedGraph g = random_graph(schema, 8 + rng() % 8, 10 + rng() % 20, 20 + rng() % 60, rng);
    std::vector<NodeId> actors;
    g.for_each_node([&](NodeId v) {
      if (g.node_type(v) == schema->node_type_id("actor")) actors.push_back(v);
    });
    if (actors.size() < 2) continue;
    NodeId keep = actors[rng() % actors.size()];
    NodeId drop = keep;
    while (drop == keep) drop = actors[rng() % actors.size()];

    EdgeSet expected = oracle_merge(edge_set(g), keep, drop);
    NodeRemap remap;
    merge_pair(g, keep, drop, remap);
    g.validate();
    if (edge_set(g) != expected || g.node_alive(drop)) return false;
  }
  return seconds_since(start) < 10.0;
}

// ---- Criterion 2: plan-order independence ----------------------------------

bool criterion_plan_order() {
  auto schema = testsupport::imdb_schema();
  Rng rng(202);
  for (int trial = 0; trial < 100; ++trial) {
    std::uint64_t graph_seed = rng();
    auto build = [&](std::uint64_t shuffle_seed) {
      Rng graph_rng(graph_seed);
      TypedGraph g = random_graph(schema, 10, 24, 60, graph_rng);
      std::vector<NodeId> actors;
      g.for_each_node([&](NodeId v) {
        if (g.node_type(v) == schema->node_type_id("actor")) actors.push_back(v);
      });
      MergePlan plan{schema->node_type_id("actor"), {}};
      for (std::size_t i = 0; i + 1 < actors.size(); i += 2) {
        plan.pairs.push_back({actors[i], actors[i + 1]});
      }
      Rng shuffle_rng(shuffle_seed);
      std::shuffle(plan.pairs.begin(), plan.pairs.end(), shuffle_rng);
      NodeRemap remap;
      apply_plan(g, plan, remap);
      return std::make_pair(edge_set(g), node_set(g));
    };
    auto base = build(1);
    if (build(rng() | 1) != base || build(rng() | 1) != base) return false;
  }
  return true;
}

// ---- Criterion 3: schema legality sweep ------------------------------------

bool criterion_schema_legality() {
  auto prof = testsupport::imdb_profile();
  for (double p : {0.1, 0.4, 0.7}) {
    for (double q : {0.1, 0.4, 0.7}) {
      for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        GeneratorParams params = testsupport::imdb_params(prof, 40, p, q, seed);
        GenerationResult result = generate(params, prof);
        const TypedGraph& g = result.graph;
        bool ok = true;
        g.for_each_edge([&](EdgeId, const TypedGraph::Edge& e) {
          if (e.u == e.v) ok = false;
          if (!g.schema().legal(e.type, g.node_type(e.u), g.node_type(e.v))) ok = false;
        });
        try {
          g.validate();
        } catch (const std::exception&) {
          ok = false;
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

// ---- Criterion 4: q = 0 keeps components single-label ----------------------

bool criterion_disjointness_limit() {
  auto prof = testsupport::imdb_profile();
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
    GeneratorParams params = testsupport::imdb_params(prof, 50, 0.7, 0.0, seed);
    GenerationResult result = generate(params, prof);
    const TypedGraph& g = result.graph;
    for (const auto& comp : component_lists(g)) {
      std::set<LabelId> labels;
      for (NodeId v : comp) {
        if (!g.has_label(v)) continue;
        for (LabelId y : g.label_set(v)) labels.insert(y);
      }
      if (labels.size() > 1) return false;
    }
  }
  return true;
}

// ---- Criterion 5: binomial sampling moments --------------------------------

bool criterion_binomial_moments() {
  struct Case {
    std::size_t n;
    double p;
  };
  Rng rng(505);
  for (Case c : {Case{100, 0.7}, Case{50, 0.3}}) {
    std::vector<NodeId> cluster(2 * c.n), incoming(c.n);
    for (NodeId i = 0; i < cluster.size(); ++i) cluster[i] = i;
    for (NodeId i = 0; i < incoming.size(); ++i) incoming[i] = 1000 + i;

    const int trials = 10000;
    double sum = 0, sumsq = 0;
    for (int t = 0; t < trials; ++t) {
      double k = static_cast<double>(plan_intra_merge(0, cluster, incoming, c.p, rng).pairs.size());
      sum += k;
      sumsq += k * k;
    }
    double mean = sum / trials;
    double var = sumsq / trials - mean * mean;
    double mu = c.n * c.p;
    double v = c.n * c.p * (1 - c.p);
    if (std::abs(mean - mu) > 3 * std::sqrt(v / trials)) return false;
    // Sampling sd of the variance estimate, normal approximation.
    if (std::abs(var - v) > 3 * v * std::sqrt(2.0 / trials)) return false;
  }
  return true;
}

// ---- Criterion 6: degree-distribution fidelity at N = 1000 -----------------

bool criterion_degree_fidelity() {
  auto prof = testsupport::imdb_profile();
  GeneratorParams params = testsupport::imdb_params(prof, 1000, 0.7, 0.3, 6);
  auto start = Clock::now();
  GenerationResult result = generate(params, prof);
  if (seconds_since(start) >= 60.0) return false;

  ReferenceProfile post = profile(result.graph);
  DistributionReport report = compare_distributions(prof, post);
  for (const auto& entry : report.per_type) {
    if (entry.tv > 0.15) return false;
  }
  return !report.per_type.empty();
}

// ---- Criterion 7: exclusion monotone in q -----------------------------------

bool criterion_exclusion_monotone() {
  auto prof = testsupport::imdb_profile();
  std::vector<double> purities;
  for (double q : {0.1, 0.2, 0.3, 0.4}) {
    double total = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      GeneratorParams params = testsupport::imdb_params(prof, 60, 0.7, q, seed);
      GenerationResult result = generate(params, prof);
      total += exclusion_summary(result.graph).component_purity;
    }
    purities.push_back(total / 5.0);
  }
  for (std::size_t i = 1; i < purities.size(); ++i) {
    if (purities[i] > purities[i - 1] + 1e-12) return false;
  }
  return true;
}

// ---- Criterion 8: feature separability monotone in beta/alpha --------------

bool criterion_feature_separability() {
  auto prof = testsupport::imdb_profile();
  std::vector<double> accuracies;
  for (double snr : {0.25, 1.0, 4.0, 16.0}) {
    double correct = 0.0, total = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      GeneratorParams params = testsupport::imdb_params(prof, 200, 0.7, 0.3, seed);
      params.cluster_variance = 1.0;
      params.center_variance = snr;
      params.feature_dim = 8;
      GenerationResult result = generate(params, prof);
      const FeatureMatrix& m = result.features;
      const auto& centers = result.feature_spec.centers;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        const double* x = m.row(i);
        std::size_t best = 0;
        double best_d = 0.0;
        for (std::size_t y = 0; y < centers.size(); ++y) {
          double d = 0.0;
          for (std::size_t c = 0; c < m.dim; ++c) {
            d += (x[c] - centers[y][c]) * (x[c] - centers[y][c]);
          }
          if (y == 0 || d < best_d) {
            best_d = d;
            best = y;
          }
        }
        total += 1.0;
        if (static_cast<LabelId>(best) == result.graph.label_set(m.node_ids[i]).front()) {
          correct += 1.0;
        }
      }
    }
    accuracies.push_back(correct / total);
  }
  for (std::size_t i = 1; i < accuracies.size(); ++i) {
    if (accuracies[i] + 1e-12 < accuracies[i - 1]) return false;
  }
  return accuracies.back() > accuracies.front();
}

// ---- Criterion 9: ground-truth preservation and prune flagging -------------

bool criterion_ground_truth() {
  auto prof = testsupport::imdb_profile();
  GeneratorParams params = testsupport::imdb_params(prof, 80, 0.7, 0.3, 9);
  GenerationResult result = generate(params, prof);
  if (result.manifest.ground_truth_intact_fraction != 1.0) return false;

  // Adversarially tight caps: one below the motif degree on movie-actor,
  // applied to an unpruned pipeline output with the violation count known
  // in advance.
  GeneratorParams raw_params = testsupport::imdb_params(prof, 80, 0.7, 0.3, 9);
  raw_params.apply_caps = false;
  GenerationResult raw = generate(raw_params, prof);
  TypedGraph& g = raw.graph;
  const Schema& schema = g.schema();
  auto movie = schema.node_type_id("movie");
  auto actor = schema.node_type_id("actor");

  DegreeCaps caps(schema.node_type_count(), std::vector<int>(schema.node_type_count(), -1));
  caps[movie][actor] = 0;  // every motif movie-actor edge is a violation

  // Injected count: (node, neighbor type) pairs whose motif degree exceeds
  // the cap, counted from the raw motif edges.
  std::map<NodeId, std::size_t> motif_actor_degree;
  g.for_each_edge([&](EdgeId, const TypedGraph::Edge& e) {
    if (!e.motif) return;
    if (g.node_type(e.u) == movie && g.node_type(e.v) == actor) ++motif_actor_degree[e.u];
    if (g.node_type(e.v) == movie && g.node_type(e.u) == actor) ++motif_actor_degree[e.v];
  });
  std::size_t injected = motif_actor_degree.size();  // all exceed cap 0
  std::size_t motif_edges_before = 0;
  g.for_each_edge([&](EdgeId, const TypedGraph::Edge& e) {
    if (e.motif) ++motif_edges_before;
  });

  Rng rng(99);
  PruneReport report = prune(g, caps, rng);

  std::size_t motif_edges_after = 0;
  g.for_each_edge([&](EdgeId, const TypedGraph::Edge& e) {
    if (e.motif) ++motif_edges_after;
  });
  if (motif_edges_after != motif_edges_before) return false;  // never removed
  if (report.violations.size() != injected) return false;     // flagged, 1:1
  return verify_ground_truth(g, raw.ground_truth).intact_fraction() == 1.0;
}

// ---- Criterion 10: fidelity formula to 1e-12 -------------------------------

bool criterion_fidelity_formula() {
  struct Case {
    std::vector<std::vector<double>> full;
    std::vector<std::vector<double>> motif;
    double expected;
  };
  // Hand-computed: mean over nodes of mean over labels of |full - motif|.
  std::vector<Case> cases = {
      // The worked examples: per-node mean gaps 0.2 and 0.1.
      {{{0.9, 0.1}}, {{0.7, 0.3}}, 0.2},
      {{{0.6, 0.4}}, {{0.5, 0.5}}, 0.1},
      {{{0.9, 0.1}, {0.6, 0.4}}, {{0.7, 0.3}, {0.5, 0.5}}, 0.15},
      // Exact binary fractions.
      {{{1.0, 0.0}}, {{0.0, 1.0}}, 1.0},
      {{{0.5, 0.5}}, {{0.5, 0.5}}, 0.0},
      {{{0.75, 0.25}}, {{0.5, 0.5}}, 0.25},
      {{{0.875, 0.125}}, {{0.625, 0.375}}, 0.25},
      {{{1.0, 0.0}, {0.5, 0.5}}, {{0.5, 0.5}, {0.5, 0.5}}, 0.25},
      // Three labels: node means (0.25 + 0.25 + 0) / 3 and (0.75+0+0.75)/3,
      // file mean (1/6 + 1/2) / 2 = 1/3.
      {{{0.5, 0.25, 0.25}, {0.75, 0.25, 0.0}}, {{0.25, 0.5, 0.25}, {0.0, 0.25, 0.75}}, 1.0 / 3.0},
      // Four labels, uniform gap 0.125 everywhere.
      {{{0.5, 0.25, 0.125, 0.125}}, {{0.375, 0.375, 0.25, 0.0}}, 0.125},
  };

  testsupport::TempDir dir("fidelity-files");
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Case& c = cases[i];
    std::size_t labels = c.full.front().size();
    std::string text = "id";
    for (std::size_t l = 0; l < labels; ++l) text += "\tfull" + std::to_string(l);
    for (std::size_t l = 0; l < labels; ++l) text += "\tmotif" + std::to_string(l);
    text += "\n";
    for (std::size_t row = 0; row < c.full.size(); ++row) {
      text += std::to_string(row);
      char buf[40];
      for (double v : c.full[row]) {
        std::snprintf(buf, sizeof(buf), "\t%.17g", v);
        text += buf;
      }
      for (double v : c.motif[row]) {
        std::snprintf(buf, sizeof(buf), "\t%.17g", v);
        text += buf;
      }
      text += "\n";
    }
    auto path = dir.path() / ("case" + std::to_string(i) + ".tsv");
    testsupport::write_file(path, text);
    PredictionFile preds = io::read_predictions(path);
    if (std::abs(fidelity(preds) - c.expected) > 1e-12) return false;
  }
  return true;
}

// ---- Criterion 11: byte-identical determinism ------------------------------

bool criterion_determinism() {
  auto prof = testsupport::imdb_profile();
  testsupport::TempDir dir("determinism");

  auto run = [&](const std::string& name, int threads) {
    GeneratorParams params = testsupport::imdb_params(prof, 120, 0.7, 0.3, 11);
    params.threads = threads;
    GenerationResult result = generate(params, prof);
    io::write_outputs(result, dir.path() / name);
    return result.manifest.file_digests;
  };
  auto a = run("a", 1);
  auto b = run("b", 1);
  auto c = run("c", 4);
  auto d = run("d", 8);
  return a == b && a == c && a == d && !a.empty();
}

// ---- Criterion 12: scale ----------------------------------------------------

bool criterion_scale() {
  auto prof = testsupport::imdb_profile();
  GeneratorParams params = estimate_params(prof);  // N = 2139, p = 0.7, q = 0.3
  params.seed = 12;

  auto start = Clock::now();
  GenerationResult result = generate(params, prof);
  double elapsed = seconds_since(start);

  struct rusage usage {};
  getrusage(RUSAGE_SELF, &usage);
  double peak_gb = static_cast<double>(usage.ru_maxrss) / (1024.0 * 1024.0);  // KB -> GB

  std::size_t targets = 0;
  result.graph.for_each_node([&](NodeId v) {
    if (result.graph.node_type(v) == prof.schema->target_type()) ++targets;
  });
  std::printf("    scale: %zu motifs, %zu targets, %.2f s, peak rss %.2f GB\n",
              params.motif_count, targets, elapsed, peak_gb);
  return params.motif_count == 2139 && targets == 4278 && elapsed < 60.0 && peak_gb < 2.0;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<bool()> run;
  };
  const std::vector<Criterion> criteria = {
      {"01 merge oracle equivalence (1000 ops, < 10 s)", criterion_merge_oracle},
      {"02 merge plan order independence (100 plans)", criterion_plan_order},
      {"03 schema legality across (p, q) sweep", criterion_schema_legality},
      {"04 q = 0 keeps components single-label", criterion_disjointness_limit},
      {"05 intra-merge binomial moments (3 sigma)", criterion_binomial_moments},
      {"06 degree-distribution fidelity at N = 1000 (TV <= 0.15)", criterion_degree_fidelity},
      {"07 component purity non-increasing in q", criterion_exclusion_monotone},
      {"08 nearest-centroid accuracy monotone in beta/alpha", criterion_feature_separability},
      {"09 ground truth intact; tight caps flag, never degrade", criterion_ground_truth},
      {"10 fidelity formula on 10 files (1e-12)", criterion_fidelity_formula},
      {"11 byte-identical determinism across thread counts", criterion_determinism},
      {"12 scale: N = 2139 in < 60 s and < 2 GB", criterion_scale},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::printf("    exception: %s\n", e.what());
      ok = false;
    }
    std::printf("%s  %s\n", ok ? "PASS" : "FAIL", c.name);
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
