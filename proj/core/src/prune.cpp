#include "hingen/prune.hpp"

#include <algorithm>

namespace hingen {

PruneReport prune(TypedGraph& g, const DegreeCaps& caps, Rng& rng) {
  const Schema& schema = g.schema();
  require(caps.size() == schema.node_type_count(), "prune: caps matrix has wrong shape");
  for (const auto& row : caps)
    require(row.size() == schema.node_type_count(), "prune: caps matrix has wrong shape");

  PruneReport report;
  report.components_before = g.connected_components();

  bool removed_any = true;
  while (removed_any) {
    removed_any = false;
    ++report.passes;
    for (NodeId v = 0; v < g.node_capacity(); ++v) {
      if (!g.node_alive(v)) continue;
      const NodeTypeId vt = g.node_type(v);
      for (NodeTypeId nt = 0; nt < schema.node_type_count(); ++nt) {
        const int cap = caps[vt][nt];
        if (cap < 0) continue;
        std::size_t deg = g.degree_by_type(v, nt);
        if (deg <= static_cast<std::size_t>(cap)) continue;

        std::vector<EdgeId> removable;
        std::size_t motif_degree = 0;
        for (const auto& [u, e] : g.neighbors(v)) {
          if (g.node_type(u) != nt) continue;
          if (g.edge(e).motif) {
            ++motif_degree;
          } else {
            removable.push_back(e);
          }
        }
        if (motif_degree > static_cast<std::size_t>(cap) && report.passes == 1) {
          report.violations.push_back({v, nt, motif_degree, cap});
        }

        std::size_t target_degree = std::max<std::size_t>(cap, motif_degree);
        std::size_t excess = deg - target_degree;
        if (excess == 0) continue;
        std::sort(removable.begin(), removable.end());
        std::shuffle(removable.begin(), removable.end(), rng);
        for (std::size_t i = 0; i < excess; ++i) {
          ++report.removed[{vt, nt}];
          ++report.removed_total;
          g.remove_edge(removable[i]);
          removed_any = true;
        }
      }
    }
  }

  report.components_after = g.connected_components();
  return report;
}

}  // namespace hingen
