#pragma once

#include <cstdint>
#include <vector>

#include "knots/diagram.hpp"

namespace knots {

enum class Resolution : std::uint8_t { A, B };

/// Total assignment of a resolution to every crossing.
using KauffmanState = std::vector<Resolution>;

KauffmanState all_a_state(const Diagram& d);
KauffmanState all_b_state(const Diagram& d);

/// Circles left after smoothing every crossing.  Free loops are not
/// included in `count`; callers weigh them separately.
struct StateCircles {
  int count = 0;
  std::vector<std::vector<int>> circle_arcs;  // arcs in traversal order
};

/// State graph: one vertex per state circle, one edge per crossing, with
/// the cyclic order of edge-ends around each vertex inherited from the
/// positions of the crossing smoothings along the circle.  Rotations are
/// globally coherent, so face counts of spanning subgraphs are well defined.
struct RibbonGraph {
  int num_vertices = 0;
  struct Edge {
    int u = -1, v = -1;  // u carries end 0 (the slot-0 smoothing), v end 1
    int crossing = -1;
  };
  std::vector<Edge> edges;
  // per vertex: cyclic list of (edge index, end 0/1)
  std::vector<std::vector<std::pair<int, int>>> rotation;

  bool has_loop() const {
    for (const auto& e : edges)
      if (e.u == e.v) return true;
    return false;
  }
};

/// Smoothed diagram with one connector segment per crossing (the trivalent
/// graph whose collapse gives the state graph).  Circles are stored in the
/// coherent traversal direction used for ribbon rotations.
struct StateStructure {
  KauffmanState state;
  struct Visit {
    int crossing = -1;
    int end = -1;         // 0: smoothing arc containing slot 0; 1: containing slot 2
    int arrive_slot = -1;
    int leave_slot = -1;
    int in_arc = -1;      // arc traversed into this visit
    int out_arc = -1;     // arc traversed when leaving
  };
  std::vector<std::vector<Visit>> circles;
  std::vector<int> end_circle;  // end id (2*crossing+end) -> circle index
  std::vector<int> end_pos;     // end id -> position within its circle
  RibbonGraph ribbon;

  int circle_count() const { return static_cast<int>(circles.size()); }
};

/// Slot joined to `slot` by the smoothing `r`.
int smoothing_partner(Resolution r, int slot);
/// Which smoothing arc (0 or 1) of a crossing the slot belongs to.
int smoothing_end(Resolution r, int slot);

StateCircles resolve(const Diagram& d, const KauffmanState& state);

StateStructure build_state_structure(const Diagram& d, const KauffmanState& state);

inline RibbonGraph build_ribbon_graph(const Diagram& d, const KauffmanState& s) {
  return build_state_structure(d, s).ribbon;
}

/// Simple graph obtained by collapsing duplicate edges between vertex
/// pairs; 1-edge loops are deduplicated but retained.
struct ReducedGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> multiplicity;  // parallel-edge count behind each kept edge
};

ReducedGraph reduce(const RibbonGraph& g);

struct AdequacyReport {
  bool a_adequate = false;
  bool b_adequate = false;
  bool adequate = false;
};

AdequacyReport adequacy(const Diagram& d);

struct GraphStats {
  int v = 0;
  int e = 0;
  int chi = 0;
  int chi_minus = 0;
  bool bipartite = false;
  bool tree = false;
  int components = 0;
  int loops = 0;
};

GraphStats graph_stats(int num_vertices, const std::vector<std::pair<int, int>>& edges);
GraphStats graph_stats(const RibbonGraph& g);
GraphStats graph_stats(const ReducedGraph& g);

/// Number of boundary walks of the spanning ribbon subgraph on the edges
/// with include[e] set; isolated vertices contribute one boundary each.
int ribbon_faces(const RibbonGraph& g, const std::vector<bool>& include);
inline int ribbon_faces(const RibbonGraph& g) {
  return ribbon_faces(g, std::vector<bool>(g.edges.size(), true));
}

/// Genus of the closed orientable surface interpolating between the all-A
/// and all-B circles: (c + 2 - |s_A| - |s_B|) / 2 for connected diagrams.
int turaev_genus(const Diagram& d);

/// Edge list text export: one `u v multiplicity` line per reduced edge.
std::string graph_edge_list(const RibbonGraph& g);

}  // namespace knots
