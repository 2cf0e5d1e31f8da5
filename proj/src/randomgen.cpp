#include "yinv/randomgen.hpp"

#include <algorithm>

namespace yinv {

MarkedGraphDiagram random_braid_closure(std::mt19937& rng, int max_crossings,
                                        int max_strands) {
  std::uniform_int_distribution<int> strands_d(2, max_strands);
  int k = strands_d(rng);
  std::uniform_int_distribution<int> len_d(1, max_crossings);
  int len = len_d(rng);
  std::uniform_int_distribution<int> pos_d(0, k - 2);
  std::uniform_int_distribution<int> sign_d(0, 1);

  MarkedGraphDiagram d;
  int next = 0;
  auto fresh = [&] { return ++next; };
  std::vector<int> start(k), cur(k);
  for (int i = 0; i < k; ++i) start[i] = cur[i] = fresh();
  // head occurrence per edge, filled when an edge enters a crossing.
  std::map<int, SlotRef> heads;

  for (int step = 0; step < len; ++step) {
    int i = pos_d(rng);
    bool positive = sign_d(rng) == 1;
    int u = cur[i], v = cur[i + 1];
    int up = fresh(), vp = fresh();
    int n = static_cast<int>(d.nodes.size());
    if (positive) {
      // sigma_i: strand at position i passes over; X[v, u', v', u].
      d.nodes.push_back(
          Node{NodeKind::Crossing, std::array<int, 4>{v, up, vp, u}});
      heads[v] = SlotRef{n, 0};
      heads[u] = SlotRef{n, 3};
    } else {
      // sigma_i^{-1}: X[u, v, u', v'].
      d.nodes.push_back(
          Node{NodeKind::Crossing, std::array<int, 4>{u, v, up, vp}});
      heads[u] = SlotRef{n, 0};
      heads[v] = SlotRef{n, 1};
    }
    cur[i] = up;
    cur[i + 1] = vp;
  }

  // Trace closure: merge each final edge with its position's start edge.
  for (int i = 0; i < k; ++i) {
    int f = cur[i], s = start[i];
    if (f == s) {
      // Untouched strand closes into a free circle.
      d.free_loops++;
      continue;
    }
    for (auto& node : d.nodes)
      for (int& slot : node.slots)
        if (slot == f) slot = s;
    if (heads.count(f)) heads[s] = heads[f];
    heads.erase(f);
  }
  for (auto& [e, h] : heads) d.orientation[e] = h;
  // Drop heads of edges that vanished in the merge.
  std::map<int, SlotRef> cleaned;
  auto occ = d.edge_occurrences();
  for (auto& [e, h] : d.orientation)
    if (occ.count(e)) cleaned[e] = h;
  d.orientation = cleaned;
  return d;
}

MoveSite random_move_site(std::mt19937& rng, const MarkedGraphDiagram& d,
                          bool allow_gamma6) {
  std::vector<int> edges;
  for (auto& [e, _] : d.edge_occurrences()) edges.push_back(e);

  std::uniform_int_distribution<int> kind_d(0, allow_gamma6 ? 6 : 3);
  for (int attempt = 0; attempt < 64; ++attempt) {
    int kind = kind_d(rng);
    if (kind == 3) {  // disjoint circle
      return MoveSite{MoveSite::Kind::DisjointCircle, {}, {}};
    }
    if (edges.empty()) continue;
    std::uniform_int_distribution<int> edge_d(0,
                                              static_cast<int>(edges.size()) - 1);
    if (kind == 0 || kind == 1) {
      return MoveSite{kind == 0 ? MoveSite::Kind::R1Plus
                                : MoveSite::Kind::R1Minus,
                      {edges[edge_d(rng)]},
                      {}};
    }
    if (kind == 2) {
      if (edges.size() < 2) continue;
      int a = edge_d(rng), b = edge_d(rng);
      if (a == b) continue;
      return MoveSite{MoveSite::Kind::R2, {edges[a], edges[b]}, {}};
    }
    if (kind == 4 || kind == 5) {
      return MoveSite{kind == 4 ? MoveSite::Kind::Gamma6
                                : MoveSite::Kind::Gamma6Prime,
                      {edges[edge_d(rng)]},
                      {}};
    }
    if (kind == 6) {
      auto sites = find_r3_sites(d);
      if (sites.empty()) continue;
      std::uniform_int_distribution<int> site_d(
          0, static_cast<int>(sites.size()) - 1);
      return sites[site_d(rng)];
    }
  }
  return MoveSite{MoveSite::Kind::DisjointCircle, {}, {}};
}

}  // namespace yinv
