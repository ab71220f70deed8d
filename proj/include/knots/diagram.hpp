#pragma once

#include <array>
#include <optional>
#include <vector>

#include "knots/pd.hpp"

namespace knots {

/// A port is one of the four edge-ends of a crossing.  Slots follow the PD
/// tuple: slot 0 = incoming under-strand, then counterclockwise 1, 2, 3.
/// The under-strand exits at slot 2; slots 1 and 3 carry the over-strand.
struct Port {
  int crossing = -1;
  int slot = -1;
  bool operator==(const Port&) const = default;
};

inline int port_id(const Port& p) { return 4 * p.crossing + p.slot; }
inline Port port_from_id(int id) { return Port{id / 4, id % 4}; }

/// One face of the projection map as a cyclic walk of corners.  A corner
/// (crossing, slot) stands for the wedge between slot and slot+1; the walk
/// also records which arc is traversed leaving each corner.
struct FaceWalk {
  std::vector<int> arcs;                  // arcs traversed, one per corner
  std::vector<std::pair<int, int>> corners;  // (crossing, slot)
};

/// Validated link diagram: PD code plus the planar embedding data derived
/// from it (arc endpoints, orientations, crossing signs, faces, components).
/// Arc labels are canonical: 0..num_arcs-1 by traversal order.
class Diagram {
public:
  PDCode pd;

  // arc -> its two ports; [0] = tail (arc leaves), [1] = head (arc enters)
  std::vector<std::array<Port, 2>> arc_ends;
  std::vector<int> signs;         // per crossing, +1 or -1
  std::vector<int> over_in_slot;  // per crossing, 1 or 3
  std::vector<int> arc_component; // arc -> link component id
  int num_components = 0;         // link components including free loops
  std::vector<FaceWalk> faces;    // faces of every projection component
  std::vector<int> crossing_projection_component;
  int num_projection_components = 0;  // incl. free loops

  int crossing_count() const { return static_cast<int>(pd.crossings.size()); }
  int arc_count() const { return static_cast<int>(arc_ends.size()); }
  int free_loops() const { return pd.free_loops; }

  int writhe() const;
  int positive_crossings() const;
  int negative_crossings() const;

  /// Arc occupying a given port.
  int arc_at(const Port& p) const { return pd.crossings[p.crossing][p.slot]; }
  /// The other port of the arc at p.
  Port partner(const Port& p) const;
};

struct Classification {
  bool connected = false;
  bool alternating = false;
  bool prime = false;
};

struct TwistPartition {
  std::vector<std::vector<int>> classes;  // crossing ids, each class sorted
  int twist_number = 0;
  bool twist_reduced = true;
  std::vector<int> class_of;  // crossing -> class index
};

/// Parse + validate a PD text into a Diagram (canonical arc labels).
Diagram parse_pd(const std::string& text);

/// Build/validate a Diagram from an already-parsed PD code.
Diagram build_diagram(const PDCode& pd);

Classification classify(const Diagram& d);

/// Merge crossings joined by chains of bigon faces; the twist_reduced flag
/// compares this against the closed-curve notion of twist equivalence.
TwistPartition twist_partition(const Diagram& d);

/// Switch every crossing (over <-> under); the projection is unchanged.
Diagram mirror(const Diagram& d);

/// Blackboard-framed cable: every arc becomes m parallel arcs and every
/// crossing an m x m grid of crossings of the same sign.
Diagram cable(const Diagram& d, int m, long long max_crossings = 20000);

/// Canonical PD text (arcs renumbered from the lowest original label by
/// traversal order, crossings sorted); used for hashing and caching.
std::string canonical_pd_text(const Diagram& d);

/// Insert a kink (Reidemeister-I twist) of the given sign on an arc.
Diagram add_kink(const Diagram& d, int arc, int sign);

/// Unknot diagram with k kinks of the given sign (k = 0 gives a free loop).
Diagram kinked_unknot(int k, int sign = +1);

/// Disjoint union (arc labels of b shifted past those of a).
Diagram split_union(const Diagram& a, const Diagram& b);

}  // namespace knots
