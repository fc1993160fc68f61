#pragma once

// Combinatorial maps (ribbon graphs) on closed orientable surfaces.
//
// Half-edges are dense integers 0..2m-1. sigma is the counterclockwise
// rotation at each vertex, alpha the fixed-point-free edge involution.
// Faces are the cycles of the face permutation
//
//     phi = sigma o alpha     (cross the edge, then turn counterclockwise)
//
// and this convention is used everywhere, including duals and ribbon
// boundaries of spanning subgraphs. The surface is whatever the rotation
// system defines, so every embedding is cellular.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace slinv {

using HalfEdge = int;
/// Edge subset of a map; bit e set means edge e is present. Limits subgraph
/// work to maps with at most 64 edges.
using EdgeMask = std::uint64_t;

class CombinatorialMap {
 public:
  /// Builds and validates a map. `rotations[v]` lists the half-edges at v in
  /// counterclockwise order; `edges[e] = {tail, head}`.
  /// Throws Error{NotInvolution, Disconnected, DanglingHalfEdge}.
  static CombinatorialMap build(std::vector<std::vector<HalfEdge>> rotations,
                                std::vector<std::array<HalfEdge, 2>> edges);

  /// One vertex, no edges (the sphere with a point).
  static CombinatorialMap point() { return build({{}}, {}); }

  int num_vertices() const { return static_cast<int>(rotations_.size()); }
  int num_edges() const { return static_cast<int>(tail_.size()); }
  int num_half_edges() const { return static_cast<int>(sigma_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int genus() const { return genus_; }
  int euler_characteristic() const { return num_vertices() - num_edges() + num_faces(); }

  HalfEdge sigma(HalfEdge h) const { return sigma_[h]; }
  HalfEdge sigma_inv(HalfEdge h) const { return sigma_inv_[h]; }
  HalfEdge alpha(HalfEdge h) const { return alpha_[h]; }
  HalfEdge phi(HalfEdge h) const { return sigma_[alpha_[h]]; }

  int vertex_of(HalfEdge h) const { return vertex_of_[h]; }
  int edge_of(HalfEdge h) const { return edge_of_[h]; }
  int face_of(HalfEdge h) const { return face_of_[h]; }
  bool is_tail(HalfEdge h) const { return tail_[edge_of_[h]] == h; }
  /// +1 when walking h -> alpha(h) follows the edge orientation.
  int direction(HalfEdge h) const { return is_tail(h) ? 1 : -1; }

  HalfEdge tail(int e) const { return tail_[e]; }
  HalfEdge head(int e) const { return alpha_[tail_[e]]; }
  int tail_vertex(int e) const { return vertex_of_[tail(e)]; }
  int head_vertex(int e) const { return vertex_of_[head(e)]; }
  bool is_loop(int e) const { return tail_vertex(e) == head_vertex(e); }

  const std::vector<HalfEdge>& rotation(int v) const { return rotations_[v]; }
  const std::vector<std::vector<HalfEdge>>& rotations() const { return rotations_; }
  /// Face walks as phi-cycles, each starting at its smallest half-edge.
  const std::vector<std::vector<HalfEdge>>& faces() const { return faces_; }
  std::vector<std::array<HalfEdge, 2>> edge_list() const;

  EdgeMask all_edges() const;

  friend bool operator==(const CombinatorialMap&, const CombinatorialMap&) = default;

 private:
  std::vector<std::vector<HalfEdge>> rotations_;
  std::vector<HalfEdge> sigma_, sigma_inv_, alpha_;
  std::vector<int> vertex_of_, edge_of_, face_of_;
  std::vector<HalfEdge> tail_;
  std::vector<std::vector<HalfEdge>> faces_;
  int genus_ = 0;
};

/// Dual map: vertices are the faces of `map` with rotation phi; edges keep
/// their ids, half-edge labels and tails. dual(dual(m)) == m.
CombinatorialMap dual(const CombinatorialMap& map);

/// Map with edge e removed; remaining edges and half-edges are renumbered
/// densely in their original order. Throws Disconnected if e was a bridge.
CombinatorialMap delete_edge(const CombinatorialMap& map, int e);

/// Map with the orientation of every edge in `flip` reversed.
CombinatorialMap reorient(const CombinatorialMap& map, std::span<const int> flip);

/// Label-independent isomorphism of connected maps. With `allow_reflection`
/// an orientation-reversing isomorphism (sigma -> sigma^-1) also counts.
/// Edge orientations are ignored.
bool isomorphic(const CombinatorialMap& a, const CombinatorialMap& b, bool allow_reflection);

/// "rg v1" text format.
CombinatorialMap parse_rg(std::string_view text);
/// Canonical "rg v1" rendering: each rotation starts at its smallest half-edge.
std::string to_rg(const CombinatorialMap& map);

}  // namespace slinv
