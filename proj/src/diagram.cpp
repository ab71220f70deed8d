#include "knots/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "knots/errors.hpp"

namespace knots {

namespace {

// Union-find with path compression.
struct UF {
  std::vector<int> parent;
  explicit UF(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

int Diagram::writhe() const { return positive_crossings() - negative_crossings(); }

int Diagram::positive_crossings() const {
  int n = 0;
  for (int s : signs) n += (s > 0);
  return n;
}

int Diagram::negative_crossings() const {
  int n = 0;
  for (int s : signs) n += (s < 0);
  return n;
}

Port Diagram::partner(const Port& p) const {
  int a = arc_at(p);
  const auto& ends = arc_ends[a];
  return (ends[0] == p) ? ends[1] : ends[0];
}

Diagram parse_pd(const std::string& text) { return build_diagram(parse_pd_text(text)); }

namespace {

// Relabel arcs to 0..n-1 and record the two ports of each.
std::vector<std::array<Port, 2>> collect_arc_ports(const PDCode& pd,
                                                   std::vector<std::array<int, 4>>& relabeled) {
  std::map<int, std::vector<Port>> occ;
  for (int x = 0; x < static_cast<int>(pd.crossings.size()); x++)
    for (int s = 0; s < 4; s++) occ[pd.crossings[x][s]].push_back(Port{x, s});
  for (const auto& [label, ports] : occ)
    if (ports.size() != 2)
      throw bad_arc_multiplicity("arc label " + std::to_string(label) + " occurs " +
                                 std::to_string(ports.size()) + " times (expected 2)");
  std::map<int, int> new_id;
  for (const auto& [label, ports] : occ) new_id.emplace(label, static_cast<int>(new_id.size()));
  relabeled.assign(pd.crossings.size(), {});
  std::vector<std::array<Port, 2>> ends(occ.size());
  for (const auto& [label, ports] : occ) {
    int a = new_id[label];
    ends[a] = {ports[0], ports[1]};
    for (const Port& p : ports) relabeled[p.crossing][p.slot] = a;
  }
  return ends;
}

}  // namespace

Diagram build_diagram(const PDCode& pd) {
  Diagram d;
  d.pd.free_loops = pd.free_loops;
  std::vector<std::array<int, 4>> arcs;  // crossing -> internal arc ids
  d.arc_ends = collect_arc_ports(pd, arcs);
  const int c = static_cast<int>(pd.crossings.size());
  const int n_arcs = static_cast<int>(d.arc_ends.size());
  d.pd.crossings.resize(c);
  for (int x = 0; x < c; x++)
    for (int s = 0; s < 4; s++) d.pd.crossings[x][s] = arcs[x][s];

  // Orientation: decide which port of each arc is the tail (arc flows out)
  // and which is the head.  Slot 0 is always a head, slot 2 always a tail;
  // over-strand slots are linked (slot 1 in <=> slot 3 out) and resolved by
  // propagation.  Components никогда forced (all-over components) fall back
  // to a deterministic choice.
  // state per port: 0 unknown, 1 = head (incoming), 2 = tail (outgoing)
  std::vector<int> port_state(4 * c, 0);
  std::queue<int> work;
  auto set_state = [&](int pid, int st) {
    if (port_state[pid] == st) return;
    if (port_state[pid] != 0)
      throw malformed_pd("inconsistent strand orientations in PD code");
    port_state[pid] = st;
    work.push(pid);
  };
  for (int x = 0; x < c; x++) {
    set_state(4 * x + 0, 1);
    set_state(4 * x + 2, 2);
  }
  auto other_port = [&](int pid) {
    Port p = port_from_id(pid);
    int a = arcs[p.crossing][p.slot];
    const auto& e = d.arc_ends[a];
    int p0 = port_id(e[0]);
    return p0 == pid ? port_id(e[1]) : p0;
  };
  auto propagate = [&]() {
    while (!work.empty()) {
      int pid = work.front();
      work.pop();
      int st = port_state[pid];
      // the arc's other end has the opposite role
      set_state(other_port(pid), st == 1 ? 2 : 1);
      // over-strand linkage within a crossing
      Port p = port_from_id(pid);
      if (p.slot == 1 || p.slot == 3) {
        int mate = 4 * p.crossing + (p.slot == 1 ? 3 : 1);
        set_state(mate, st == 1 ? 2 : 1);
      }
    }
  };
  propagate();
  // all-over components: orient from the smallest unresolved port id
  for (int pid = 0; pid < 4 * c; pid++) {
    if (port_state[pid] == 0) {
      set_state(pid, 1);
      propagate();
    }
  }

  // Normalize arc_ends to [tail, head] and record over-strand entry slots.
  for (int a = 0; a < n_arcs; a++) {
    auto& e = d.arc_ends[a];
    int st0 = port_state[port_id(e[0])];
    if (st0 == 1) std::swap(e[0], e[1]);
  }
  d.over_in_slot.resize(c);
  d.signs.resize(c);
  for (int x = 0; x < c; x++) {
    int in_slot = port_state[4 * x + 1] == 1 ? 1 : 3;
    d.over_in_slot[x] = in_slot;
    // positive crossing: over-strand enters at slot 3 and leaves at slot 1
    d.signs[x] = (in_slot == 3) ? +1 : -1;
  }

  // Link components: arcs joined through the two passes of each crossing.
  {
    UF uf(n_arcs);
    for (int x = 0; x < c; x++) {
      uf.unite(arcs[x][0], arcs[x][2]);
      uf.unite(arcs[x][1], arcs[x][3]);
    }
    std::map<int, int> comp_id;
    d.arc_component.resize(n_arcs);
    for (int a = 0; a < n_arcs; a++) {
      int r = uf.find(a);
      auto [it, inserted] = comp_id.emplace(r, static_cast<int>(comp_id.size()));
      d.arc_component[a] = it->second;
    }
    d.num_components = static_cast<int>(comp_id.size()) + pd.free_loops;
  }

  // Projection components: crossings joined by arcs.
  {
    UF uf(std::max(c, 1));
    for (int a = 0; a < n_arcs; a++)
      uf.unite(d.arc_ends[a][0].crossing, d.arc_ends[a][1].crossing);
    std::map<int, int> comp_id;
    d.crossing_projection_component.resize(c);
    for (int x = 0; x < c; x++) {
      int r = uf.find(x);
      auto [it, inserted] = comp_id.emplace(r, static_cast<int>(comp_id.size()));
      d.crossing_projection_component[x] = it->second;
    }
    d.num_projection_components = static_cast<int>(comp_id.size()) + pd.free_loops;
  }

  // Face tracing on the 4-valent projection map.  A dart is a directed arc;
  // arriving at slot i we leave through slot i+1, sweeping the corner
  // (i, i+1).  Each corner lies on exactly one face.
  {
    // dart id = 2*arc + dir; dir 0 = tail->head
    auto dart_head = [&](int dart) {
      int a = dart / 2;
      return d.arc_ends[a][dart % 2 == 0 ? 1 : 0];
    };
    auto dart_from_port = [&](const Port& p) {
      // dart leaving through port p
      int a = arcs[p.crossing][p.slot];
      return 2 * a + (d.arc_ends[a][0] == p ? 0 : 1);
    };
    std::vector<bool> seen(2 * n_arcs, false);
    for (int start = 0; start < 2 * n_arcs; start++) {
      if (seen[start]) continue;
      FaceWalk f;
      int dart = start;
      do {
        seen[dart] = true;
        Port h = dart_head(dart);
        f.arcs.push_back(dart / 2);
        f.corners.emplace_back(h.crossing, h.slot);
        Port next{h.crossing, (h.slot + 1) % 4};
        dart = dart_from_port(next);
      } while (dart != start);
      // record the walk with corners aligned to the arc *leaving* them
      std::rotate(f.arcs.begin(), f.arcs.begin() + 1, f.arcs.end());
      d.faces.push_back(std::move(f));
    }
  }

  // Sphere check per projection component.
  if (c > 0) {
    std::vector<int> verts(d.num_projection_components - pd.free_loops, 0);
    std::vector<int> edges(verts.size(), 0);
    std::vector<int> face_cnt(verts.size(), 0);
    for (int x = 0; x < c; x++) verts[d.crossing_projection_component[x]]++;
    for (int a = 0; a < n_arcs; a++)
      edges[d.crossing_projection_component[d.arc_ends[a][0].crossing]]++;
    for (const auto& f : d.faces)
      face_cnt[d.crossing_projection_component[f.corners.front().first]]++;
    for (size_t k = 0; k < verts.size(); k++) {
      if (verts[k] - edges[k] + face_cnt[k] != 2)
        throw non_planar("face tracing fails the sphere Euler check (V-E+F = " +
                         std::to_string(verts[k] - edges[k] + face_cnt[k]) + ")");
    }
  }
  return d;
}

Classification classify(const Diagram& d) {
  Classification r;
  r.connected = d.num_projection_components == 1;
  r.alternating = true;
  for (const auto& e : d.arc_ends) {
    bool under0 = e[0].slot % 2 == 0;
    bool under1 = e[1].slot % 2 == 0;
    if (under0 == under1) {
      r.alternating = false;
      break;
    }
  }
  // prime: connected, at least one crossing, and no pair of arcs whose
  // removal separates crossings from crossings
  r.prime = false;
  const int c = d.crossing_count();
  if (r.connected && c >= 1) {
    const int n_arcs = d.arc_count();
    r.prime = true;
    for (int e1 = 0; e1 < n_arcs && r.prime; e1++) {
      for (int e2 = e1 + 1; e2 < n_arcs && r.prime; e2++) {
        // BFS over crossings avoiding arcs e1, e2
        std::vector<bool> vis(c, false);
        std::queue<int> q;
        q.push(0);
        vis[0] = true;
        int cnt = 1;
        while (!q.empty()) {
          int x = q.front();
          q.pop();
          for (int s = 0; s < 4; s++) {
            int a = d.pd.crossings[x][s];
            if (a == e1 || a == e2) continue;
            int y = d.partner(Port{x, s}).crossing;
            if (!vis[y]) {
              vis[y] = true;
              cnt++;
              q.push(y);
            }
          }
        }
        if (cnt != c) r.prime = false;
      }
    }
  }
  return r;
}

TwistPartition twist_partition(const Diagram& d) {
  const int c = d.crossing_count();
  TwistPartition tp;
  UF bigon_uf(std::max(c, 1));
  // bigon faces merge their two (distinct) crossings
  for (const auto& f : d.faces) {
    if (f.corners.size() == 2 && f.corners[0].first != f.corners[1].first)
      bigon_uf.unite(f.corners[0].first, f.corners[1].first);
  }
  // Curve-based twist equivalence: x ~ y when two faces jointly carry a
  // corner of each crossing and the diagonally opposite corners.
  std::vector<std::array<int, 4>> corner_face(c);
  for (int fi = 0; fi < static_cast<int>(d.faces.size()); fi++)
    for (const auto& [x, s] : d.faces[fi].corners) corner_face[x][s] = fi;
  auto corner_pos = [&](int fi, int x, int s) {
    const auto& cs = d.faces[fi].corners;
    for (int k = 0; k < static_cast<int>(cs.size()); k++)
      if (cs[k].first == x && cs[k].second == s) return k;
    return -1;
  };
  UF curve_uf(std::max(c, 1));
  for (int x = 0; x < c; x++) {
    for (int y = x + 1; y < c; y++) {
      bool linked = false;
      for (int i = 0; i < 4 && !linked; i++) {
        for (int j = 0; j < 4 && !linked; j++) {
          int f1 = corner_face[x][i];
          if (corner_face[y][j] != f1) continue;
          int f2 = corner_face[x][(i + 2) % 4];
          if (corner_face[y][(j + 2) % 4] != f2) continue;
          if (f1 != f2) {
            linked = true;
          } else {
            // both arcs of the curve run through one face; the chords
            // (x,i)-(y,j) and opposite must not interleave around it
            int n = static_cast<int>(d.faces[f1].corners.size());
            int a = corner_pos(f1, x, i), b = corner_pos(f1, y, j);
            int a2 = corner_pos(f1, x, (i + 2) % 4), b2 = corner_pos(f1, y, (j + 2) % 4);
            auto between = [&](int p, int lo, int hi) {
              // strictly between lo and hi cyclically
              return ((p - lo + n) % n) > 0 && ((p - lo + n) % n) < ((hi - lo + n) % n);
            };
            bool inter = between(a2, a, b) != between(b2, a, b);
            if (!inter) linked = true;
          }
        }
      }
      if (linked) curve_uf.unite(x, y);
    }
  }
  // assemble classes from the bigon closure (the operational partition)
  std::map<int, int> class_id;
  tp.class_of.resize(c);
  for (int x = 0; x < c; x++) {
    int r = bigon_uf.find(x);
    auto [it, inserted] = class_id.emplace(r, static_cast<int>(class_id.size()));
    tp.class_of[x] = it->second;
  }
  tp.classes.resize(class_id.size());
  for (int x = 0; x < c; x++) tp.classes[tp.class_of[x]].push_back(x);
  tp.twist_number = static_cast<int>(tp.classes.size());
  tp.twist_reduced = true;
  for (int x = 0; x < c && tp.twist_reduced; x++)
    for (int y = x + 1; y < c; y++)
      if ((bigon_uf.find(x) == bigon_uf.find(y)) != (curve_uf.find(x) == curve_uf.find(y))) {
        tp.twist_reduced = false;
        break;
      }
  return tp;
}

Diagram mirror(const Diagram& d) {
  PDCode pd;
  pd.free_loops = d.pd.free_loops;
  for (int x = 0; x < d.crossing_count(); x++) {
    int r = d.over_in_slot[x];  // becomes the new incoming under-strand
    std::array<int, 4> t{};
    for (int k = 0; k < 4; k++) t[k] = d.pd.crossings[x][(r + k) % 4] + 1;
    pd.crossings.push_back(t);
  }
  return build_diagram(pd);
}

Diagram cable(const Diagram& d, int m, long long max_crossings) {
  if (m < 1) throw malformed_pd("cable index must be >= 1");
  const int c = d.crossing_count();
  if (static_cast<long long>(m) * m * c > max_crossings)
    throw resource_limit("cable would have " + std::to_string((long long)m * m * c) +
                         " crossings (cap " + std::to_string(max_crossings) + ")");
  if (m == 1) return build_diagram(d.pd);

  PDCode pd;
  pd.free_loops = d.pd.free_loops * m;
  // grid crossing (x, col i, row r) -> index; rows south->north, cols west->east
  auto grid_index = [&](int x, int i, int r) { return x * m * m + r * m + i; };
  const int total = c * m * m;
  pd.crossings.assign(total, {0, 0, 0, 0});
  int next_arc = 1;
  // internal vertical arcs: (x, i, r) joins row r to r+1 in column i
  for (int x = 0; x < c; x++) {
    bool east_flow = d.over_in_slot[x] == 3;  // over-strand runs west->east
    for (int i = 0; i < m; i++) {
      for (int r = 0; r + 1 < m; r++) {
        int a = next_arc++;
        pd.crossings[grid_index(x, i, r)][2] = a;
        pd.crossings[grid_index(x, i, r + 1)][0] = a;
      }
    }
    for (int r = 0; r < m; r++) {
      for (int i = 0; i + 1 < m; i++) {
        int a = next_arc++;
        if (east_flow) {
          pd.crossings[grid_index(x, i, r)][1] = a;
          pd.crossings[grid_index(x, i + 1, r)][3] = a;
        } else {
          pd.crossings[grid_index(x, i + 1, r)][3] = a;
          pd.crossings[grid_index(x, i, r)][1] = a;
        }
      }
    }
  }
  // boundary ports: copy k (1-based would be clearer, use 0-based: copy k =
  // k-th strand with copy 0 leftmost along the травel direction)
  auto boundary_port = [&](int x, int side, int k) -> std::pair<int, int> {
    bool east_flow = d.over_in_slot[x] == 3;
    switch (side) {
      case 0:  // south, under-strands enter; copy k = column k
        return {grid_index(x, k, 0), 0};
      case 2:  // north, under-strands exit
        return {grid_index(x, k, m - 1), 2};
      case 1:  // east
        return {grid_index(x, m - 1, east_flow ? m - 1 - k : k), 1};
      case 3:  // west
        return {grid_index(x, 0, east_flow ? m - 1 - k : k), 3};
    }
    throw internal_error("bad side");
  };
  for (int a = 0; a < d.arc_count(); a++) {
    const Port tail = d.arc_ends[a][0];
    const Port head = d.arc_ends[a][1];
    for (int k = 0; k < m; k++) {
      int arc = next_arc++;
      auto [cx1, s1] = boundary_port(tail.crossing, tail.slot, k);
      auto [cx2, s2] = boundary_port(head.crossing, head.slot, k);
      pd.crossings[cx1][s1] = arc;
      pd.crossings[cx2][s2] = arc;
    }
  }
  return build_diagram(pd);
}

namespace {

// Follow the strand through a crossing: entering at the head port, return
// the tail port of the continuation arc.
Port continuation(const Diagram& d, const Port& head) {
  static constexpr int cont_slot[4] = {2, 3, 0, 1};
  return Port{head.crossing, cont_slot[head.slot]};
}

}  // namespace

std::string canonical_pd_text(const Diagram& d) {
  const int n_arcs = d.arc_count();
  std::vector<int> new_label(n_arcs, 0);
  int next = 1;
  for (int start = 0; start < n_arcs; start++) {
    if (new_label[start] != 0) continue;
    int a = start;
    do {
      new_label[a] = next++;
      Port h = d.arc_ends[a][1];
      a = d.arc_at(continuation(d, h));
    } while (a != start);
  }
  PDCode pd;
  pd.free_loops = d.pd.free_loops;
  for (const auto& x : d.pd.crossings) {
    std::array<int, 4> t{};
    for (int s = 0; s < 4; s++) t[s] = new_label[x[s]];
    pd.crossings.push_back(t);
  }
  std::sort(pd.crossings.begin(), pd.crossings.end());
  return pd_to_text(pd);
}

Diagram add_kink(const Diagram& d, int arc, int sign) {
  PDCode pd = d.pd;
  for (auto& x : pd.crossings)
    for (auto& a : x) a++;  // back to 1-based labels
  int base = d.arc_count();
  int a = arc + 1, n1 = base + 1, n2 = base + 2;
  Port head = d.arc_ends[arc][1];
  pd.crossings[head.crossing][head.slot] = n1;
  if (sign > 0)
    pd.crossings.push_back({a, n1, n2, n2});
  else
    pd.crossings.push_back({a, n2, n2, n1});
  return build_diagram(pd);
}

Diagram kinked_unknot(int k, int sign) {
  PDCode pd;
  if (k == 0) {
    pd.free_loops = 1;
    return build_diagram(pd);
  }
  for (int i = 1; i <= k; i++) {
    int a = 2 * i - 1, b = 2 * i, anext = (i == k) ? 1 : 2 * i + 1;
    if (sign > 0)
      pd.crossings.push_back({a, anext, b, b});
    else
      pd.crossings.push_back({a, b, b, anext});
  }
  return build_diagram(pd);
}

Diagram split_union(const Diagram& a, const Diagram& b) {
  PDCode pd = a.pd;
  for (auto& x : pd.crossings)
    for (auto& v : x) v++;
  int shift = a.arc_count();
  for (const auto& x : b.pd.crossings) {
    std::array<int, 4> t{};
    for (int s = 0; s < 4; s++) t[s] = x[s] + shift + 1;
    pd.crossings.push_back(t);
  }
  pd.free_loops = a.pd.free_loops + b.pd.free_loops;
  return build_diagram(pd);
}

}  // namespace knots
