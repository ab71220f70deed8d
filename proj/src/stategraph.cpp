#include "knots/stategraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "knots/errors.hpp"

namespace knots {

KauffmanState all_a_state(const Diagram& d) {
  return KauffmanState(d.crossing_count(), Resolution::A);
}

KauffmanState all_b_state(const Diagram& d) {
  return KauffmanState(d.crossing_count(), Resolution::B);
}

int smoothing_partner(Resolution r, int slot) {
  if (r == Resolution::A) {
    static constexpr int p[4] = {1, 0, 3, 2};
    return p[slot];
  }
  static constexpr int p[4] = {3, 2, 1, 0};
  return p[slot];
}

int smoothing_end(Resolution r, int slot) {
  if (r == Resolution::A) return slot <= 1 ? 0 : 1;
  return (slot == 0 || slot == 3) ? 0 : 1;
}

namespace {

struct CircleTrace {
  std::vector<std::vector<StateStructure::Visit>> circles;
  std::vector<int> end_circle, end_pos;
};

// Trace the smoothed diagram into directed circles.  Each circle is first
// traversed in the direction of its lowest dart; the caller may flip whole
// circles afterwards.
CircleTrace trace_circles(const Diagram& d, const KauffmanState& state) {
  const int n_arcs = d.arc_count();
  CircleTrace out;
  out.end_circle.assign(2 * d.crossing_count(), -1);
  out.end_pos.assign(2 * d.crossing_count(), -1);
  std::vector<bool> seen(2 * n_arcs, false);
  for (int start = 0; start < 2 * n_arcs; start++) {
    if (seen[start]) continue;
    // skip if the reverse orbit was already traced
    {
      bool skip = false;
      int dart = start;
      do {
        if (seen[dart ^ 1]) {
          skip = true;
          break;
        }
        int a = dart / 2;
        Port head = d.arc_ends[a][dart % 2 == 0 ? 1 : 0];
        int leave = smoothing_partner(state[head.crossing], head.slot);
        Port lp{head.crossing, leave};
        int na = d.arc_at(lp);
        dart = 2 * na + (d.arc_ends[na][0] == lp ? 0 : 1);
      } while (dart != start);
      if (skip) continue;
    }
    std::vector<StateStructure::Visit> walk;
    int ci = static_cast<int>(out.circles.size());
    int dart = start;
    do {
      seen[dart] = true;
      int a = dart / 2;
      Port head = d.arc_ends[a][dart % 2 == 0 ? 1 : 0];
      Resolution r = state[head.crossing];
      int leave = smoothing_partner(r, head.slot);
      StateStructure::Visit v;
      v.crossing = head.crossing;
      v.end = smoothing_end(r, head.slot);
      v.arrive_slot = head.slot;
      v.leave_slot = leave;
      v.in_arc = a;
      Port lp{head.crossing, leave};
      v.out_arc = d.arc_at(lp);
      int eid = 2 * v.crossing + v.end;
      out.end_circle[eid] = ci;
      out.end_pos[eid] = static_cast<int>(walk.size());
      walk.push_back(v);
      int na = v.out_arc;
      dart = 2 * na + (d.arc_ends[na][0] == lp ? 0 : 1);
    } while (dart != start);
    out.circles.push_back(std::move(walk));
  }
  return out;
}

}  // namespace

StateCircles resolve(const Diagram& d, const KauffmanState& state) {
  StateCircles sc;
  if (d.crossing_count() == 0) return sc;
  CircleTrace tr = trace_circles(d, state);
  sc.count = static_cast<int>(tr.circles.size());
  for (const auto& walk : tr.circles) {
    std::vector<int> arcsv;
    for (const auto& v : walk) arcsv.push_back(v.in_arc);
    sc.circle_arcs.push_back(std::move(arcsv));
  }
  return sc;
}

StateStructure build_state_structure(const Diagram& d, const KauffmanState& state) {
  StateStructure st;
  st.state = state;
  const int c = d.crossing_count();
  CircleTrace tr = trace_circles(d, state);
  const int n_circ = static_cast<int>(tr.circles.size());

  // Make the circle directions coherent: at every crossing the two
  // smoothing-arc passes must arrive on even slots together or odd slots
  // together (the orientability constraint of the interpolating surface).
  std::vector<int> flip(n_circ, -1);  // -1 undecided, 0 keep, 1 reverse
  std::vector<std::vector<std::pair<int, bool>>> adj(n_circ);  // (other, same_parity)
  for (int x = 0; x < c; x++) {
    int e0 = 2 * x, e1 = 2 * x + 1;
    int u = tr.end_circle[e0], v = tr.end_circle[e1];
    bool even_u = tr.circles[u][tr.end_pos[e0]].arrive_slot % 2 == 0;
    bool even_v = tr.circles[v][tr.end_pos[e1]].arrive_slot % 2 == 0;
    adj[u].emplace_back(v, even_u == even_v);
    adj[v].emplace_back(u, even_u == even_v);
  }
  for (int s = 0; s < n_circ; s++) {
    if (flip[s] != -1) continue;
    flip[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (auto [v, same] : adj[u]) {
        int want = same ? flip[u] : 1 - flip[u];
        if (flip[v] == -1) {
          flip[v] = want;
          q.push(v);
        } else if (flip[v] != want) {
          throw internal_error("state surface rotation parity is inconsistent");
        }
      }
    }
  }

  st.circles.resize(n_circ);
  st.end_circle.assign(2 * c, -1);
  st.end_pos.assign(2 * c, -1);
  for (int ci = 0; ci < n_circ; ci++) {
    auto walk = tr.circles[ci];
    if (flip[ci]) {
      std::reverse(walk.begin(), walk.end());
      for (auto& v : walk) {
        std::swap(v.arrive_slot, v.leave_slot);
        std::swap(v.in_arc, v.out_arc);
      }
    }
    for (int k = 0; k < static_cast<int>(walk.size()); k++) {
      int eid = 2 * walk[k].crossing + walk[k].end;
      st.end_circle[eid] = ci;
      st.end_pos[eid] = k;
    }
    st.circles[ci] = std::move(walk);
  }

  st.ribbon.num_vertices = n_circ;
  st.ribbon.edges.resize(c);
  st.ribbon.rotation.resize(n_circ);
  for (int x = 0; x < c; x++) {
    st.ribbon.edges[x] = RibbonGraph::Edge{st.end_circle[2 * x], st.end_circle[2 * x + 1], x};
  }
  for (int ci = 0; ci < n_circ; ci++)
    for (const auto& v : st.circles[ci])
      st.ribbon.rotation[ci].emplace_back(v.crossing, v.end);
  return st;
}

ReducedGraph reduce(const RibbonGraph& g) {
  ReducedGraph r;
  r.num_vertices = g.num_vertices;
  std::map<std::pair<int, int>, int> seen;
  for (const auto& e : g.edges) {
    auto key = std::minmax(e.u, e.v);
    auto [it, inserted] = seen.emplace(std::pair<int, int>(key.first, key.second), 0);
    it->second++;
  }
  for (const auto& [key, mult] : seen) {
    r.edges.push_back(key);
    r.multiplicity.push_back(mult);
  }
  return r;
}

AdequacyReport adequacy(const Diagram& d) {
  AdequacyReport rep;
  rep.a_adequate = !build_state_structure(d, all_a_state(d)).ribbon.has_loop();
  rep.b_adequate = !build_state_structure(d, all_b_state(d)).ribbon.has_loop();
  rep.adequate = rep.a_adequate && rep.b_adequate;
  return rep;
}

GraphStats graph_stats(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
  GraphStats s;
  s.v = num_vertices;
  s.e = static_cast<int>(edges.size());
  std::vector<int> parent(num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges) {
    if (u == v) {
      s.loops++;
      continue;
    }
    parent[find(u)] = find(v);
  }
  std::map<int, std::pair<int, int>> comp;  // root -> (v, e)
  for (int u = 0; u < num_vertices; u++) comp[find(u)].first++;
  for (auto [u, v] : edges) comp[find(u)].second++;
  s.components = static_cast<int>(comp.size());
  for (const auto& [root, ve] : comp) {
    int chi = ve.first - ve.second;
    s.chi += chi;
    s.chi_minus += std::max(-chi, 0);
  }
  // bipartite by BFS 2-coloring; any loop breaks it
  s.bipartite = s.loops == 0;
  if (s.bipartite) {
    std::vector<std::vector<int>> adj(num_vertices);
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    std::vector<int> color(num_vertices, -1);
    for (int s0 = 0; s0 < num_vertices && s.bipartite; s0++) {
      if (color[s0] != -1) continue;
      color[s0] = 0;
      std::queue<int> q;
      q.push(s0);
      while (!q.empty() && s.bipartite) {
        int u = q.front();
        q.pop();
        for (int v : adj[u]) {
          if (color[v] == -1) {
            color[v] = 1 - color[u];
            q.push(v);
          } else if (color[v] == color[u]) {
            s.bipartite = false;
            break;
          }
        }
      }
    }
  }
  s.tree = (s.components == 1) && (s.e == s.v - 1) && (s.loops == 0);
  return s;
}

GraphStats graph_stats(const RibbonGraph& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges.size());
  for (const auto& e : g.edges) edges.emplace_back(e.u, e.v);
  return graph_stats(g.num_vertices, edges);
}

GraphStats graph_stats(const ReducedGraph& g) { return graph_stats(g.num_vertices, g.edges); }

int ribbon_faces(const RibbonGraph& g, const std::vector<bool>& include) {
  if (include.size() != g.edges.size())
    throw internal_error("ribbon_faces: include mask size mismatch");
  // restricted rotations: per vertex, list of darts (edge, end)
  std::vector<std::vector<std::pair<int, int>>> rot(g.num_vertices);
  std::map<std::pair<int, int>, int> pos;  // (edge, end) -> index in its vertex list
  for (int v = 0; v < g.num_vertices; v++) {
    for (const auto& [e, end] : g.rotation[v]) {
      if (!include[e]) continue;
      pos[{e, end}] = static_cast<int>(rot[v].size());
      rot[v].push_back({e, end});
    }
  }
  int faces = 0;
  std::set<std::pair<int, int>> visited;  // darts: (edge, end) = dart leaving that end
  for (int e0 = 0; e0 < static_cast<int>(g.edges.size()); e0++) {
    if (!include[e0]) continue;
    for (int k0 = 0; k0 < 2; k0++) {
      if (visited.count({e0, k0})) continue;
      faces++;
      int e = e0, k = k0;
      do {
        visited.insert({e, k});
        // travel along edge e from end k to end 1-k, then take the next
        // dart counterclockwise at the arrival vertex
        int ke = 1 - k;
        int v = ke == 0 ? g.edges[e].u : g.edges[e].v;
        int p = pos.at({e, ke});
        const auto& list = rot[v];
        auto [ne, nk] = list[(p + 1) % list.size()];
        e = ne;
        k = nk;
      } while (!(e == e0 && k == k0));
    }
  }
  for (int v = 0; v < g.num_vertices; v++)
    if (rot[v].empty()) faces++;
  return faces;
}

int turaev_genus(const Diagram& d) {
  if (d.num_projection_components != 1)
    throw precondition_unverifiable("turaev genus requires a connected diagram");
  int c = d.crossing_count();
  if (c == 0) return 0;
  int sa = resolve(d, all_a_state(d)).count;
  int sb = resolve(d, all_b_state(d)).count;
  int num = c + 2 - sa - sb;
  if (num < 0 || num % 2 != 0)
    throw odd_parity("impossible state circle counts: c=" + std::to_string(c) +
                     " |sA|=" + std::to_string(sa) + " |sB|=" + std::to_string(sb));
  return num / 2;
}

std::string graph_edge_list(const RibbonGraph& g) {
  ReducedGraph r = reduce(g);
  std::ostringstream os;
  os << "# vertices " << g.num_vertices << "\n";
  for (size_t i = 0; i < r.edges.size(); i++)
    os << r.edges[i].first << " " << r.edges[i].second << " " << r.multiplicity[i] << "\n";
  return os.str();
}

}  // namespace knots
