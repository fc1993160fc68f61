#pragma once

// Link diagrams on closed orientable surfaces.
//
// A diagram is a 4-valent combinatorial map. Crossing v owns half-edges
// 4v+0 .. 4v+3, listed counterclockwise ("slots"). The strand through slots
// {0,2} passes over the strand through {1,3}; parsing normalizes to this.
// Arc a is edge a of the map, directed tail -> head along the link.
//
// Face walks follow phi = sigma o alpha, so the face containing half-edge
// 4v+j is the region at the corner between slots j-1 and j of crossing v.
//
// Smoothings follow Kauffman: the A-regions at a crossing are the two
// corners swept when the over-strand turns counterclockwise, here the
// corners (0,1) and (2,3). The A-smoothing opens a channel joining the
// A-regions, i.e. it connects slots 1-2 and 3-0; the B-smoothing connects
// 0-1 and 2-3.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "slinv/homology.hpp"
#include "slinv/limits.hpp"
#include "slinv/ribbon.hpp"

namespace slinv {

struct Slot {
  int crossing = 0;
  int slot = 0;
  friend bool operator==(const Slot&, const Slot&) = default;
};

struct Arc {
  Slot tail;
  Slot head;
  friend bool operator==(const Arc&, const Arc&) = default;
};

class SurfaceLinkDiagram {
 public:
  /// Validates and builds a diagram. With `auto_orient`, inconsistent arc
  /// directions are replaced by a traversal of each component starting
  /// along its lowest-numbered arc, and a note is appended to `warnings`.
  /// Throws BadSlot, NotFourValent, InconsistentOrientation, Disconnected.
  static SurfaceLinkDiagram from_arcs(int crossings, std::vector<Arc> arcs, bool auto_orient = false,
                                      std::vector<std::string>* warnings = nullptr);

  /// Crossingless unknot on the sphere.
  static SurfaceLinkDiagram unknot() { return from_arcs(0, {}); }

  int num_crossings() const { return crossings_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(int a) const { return arcs_[a]; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  const CombinatorialMap& map() const { return map_; }
  const HomologyContext& homology() const { return *homology_; }
  int genus() const { return map_.genus(); }

  /// Link components as arc lists in traversal order, each starting at its
  /// lowest arc id; ordered by that id.
  const std::vector<std::vector<int>>& components() const { return components_; }
  int num_components() const { return static_cast<int>(components_.size()); }

  static HalfEdge half_edge(int crossing, int slot) { return 4 * crossing + slot; }

  friend bool operator==(const SurfaceLinkDiagram& a, const SurfaceLinkDiagram& b) {
    return a.crossings_ == b.crossings_ && a.arcs_ == b.arcs_;
  }

 private:
  int crossings_ = 0;
  std::vector<Arc> arcs_;
  CombinatorialMap map_;
  std::shared_ptr<const HomologyContext> homology_;
  std::vector<std::vector<int>> components_;
};

/// "sld v1" text format. Throws ParseError plus the from_arcs errors.
SurfaceLinkDiagram parse_sld(std::string_view text, bool auto_orient = false,
                             std::vector<std::string>* warnings = nullptr);
/// Normalized rendering (over-strand on {0,2}, no `over` lines).
std::string to_sld(const SurfaceLinkDiagram& d);

/// Same projection with every crossing switched.
SurfaceLinkDiagram mirror(const SurfaceLinkDiagram& d);

/// Alternating diagram whose A-Tait graph is `g`: crossing e sits on edge e.
/// Components are oriented by traversal. Requires at least one edge.
SurfaceLinkDiagram medial_diagram(const CombinatorialMap& g);

/// Shading of the faces of d.map().
struct Coloring {
  std::vector<bool> shaded;

  Coloring swapped() const;
  int num_shaded() const;
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// The checkerboard coloring whose shaded class contains the A-regions of
/// crossing 0 (for alternating diagrams: of every crossing).
/// Throws NotCheckerboardColorable.
Coloring checkerboard(const SurfaceLinkDiagram& d);
bool is_checkerboard_colorable(const SurfaceLinkDiagram& d);

bool is_alternating(const SurfaceLinkDiagram& d);

struct ReducedFlags {
  bool cellular = true;  ///< always, the surface comes from the map
  bool nugatory_free = true;
  bool strongly_reduced = true;
};

/// Looks for closed curves meeting the diagram in one crossing: a region
/// touching a crossing at two opposite corners. Such a curve is a Tait-graph
/// loop; it is nugatory when null-homologous.
ReducedFlags reduced_flags(const SurfaceLinkDiagram& d);

/// Tait graphs of a colored diagram. Vertices of `a` are the shaded regions
/// and vertices of `b` the unshaded ones; edge v of either graph is crossing v,
/// directed from the region at the lower corner slot. `a` carries the
/// orientation of the surface, and `b` is oriented as dual(a).
struct TaitPair {
  CombinatorialMap a;
  CombinatorialMap b;
  std::vector<int> a_regions;  ///< vertex of a -> face of d.map()
  std::vector<int> b_regions;  ///< vertex of b -> face of d.map()
};

TaitPair tait_graphs(const SurfaceLinkDiagram& d, const Coloring& coloring);

/// Smoothing state. Bit v of `choice` set means crossing v is A-smoothed.
struct State {
  std::uint64_t choice = 0;
  int a = 0;
  int b = 0;
  /// Each curve as the half-edges it departs from, in order.
  std::vector<std::vector<HalfEdge>> curves;
  std::vector<RationalVector> classes;
  int k = 0;  ///< |s| - r(s)
  int r = 0;  ///< rank of the curve classes in H1(F)

  int size() const { return static_cast<int>(curves.size()); }
};

/// Slot joined to `slot` by the smoothing at a crossing.
inline int smoothing_partner(int slot, bool a_smoothing) { return a_smoothing ? 3 - slot : slot ^ 1; }

State state_at(const SurfaceLinkDiagram& d, std::uint64_t choice);

/// Calls `visit` on all 2^c states in order of `choice`.
/// Throws CrossingCapExceeded when c > cap.
void enumerate_states(const SurfaceLinkDiagram& d, const std::function<void(const State&)>& visit,
                      int cap = kDefaultCap);

/// +1 when the under-strand leaves through the slot counterclockwise after
/// the over-strand's exit (right-hand rule), else -1.
int crossing_sign(const SurfaceLinkDiagram& d, int crossing);
int writhe(const SurfaceLinkDiagram& d);

/// Crossing classes joined by bigon faces; each class is one twist region.
std::vector<int> twist_region_ids(const SurfaceLinkDiagram& d);
int twist_regions(const SurfaceLinkDiagram& d);

}  // namespace slinv
