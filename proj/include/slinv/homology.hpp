#pragma once

// Exact rational homology of a map and topology of its spanning subgraphs.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "slinv/ribbon.hpp"

namespace slinv {

using RationalVector = std::vector<mpq_class>;
/// 1-chain: integer coefficient per edge id, relative to each edge's orientation.
using Chain = std::vector<int>;

/// Rank over Q of the given rows (exact).
int exact_rank(std::vector<RationalVector> rows);
/// Rank over Q of integer rows. Uses checked 64-bit fraction-free elimination
/// and falls back to GMP on overflow, so the result is always exact.
int exact_rank(std::vector<std::vector<std::int64_t>> rows);

/// H1(F; Q) of the surface carried by a map, realized as Z1(G)/B where B is
/// spanned by face-boundary walks.
///
/// Every edge e gets an image psi(e) in Q^{2g} such that the class of any
/// cycle z is sum_e z(e) psi(e); psi vanishes on a fixed spanning tree.
class HomologyContext {
 public:
  explicit HomologyContext(const CombinatorialMap& map);

  const CombinatorialMap& map() const { return map_; }

  int cycle_space_dim() const { return static_cast<int>(cycle_basis_.size()); }
  int boundary_rank() const { return boundary_rank_; }
  int h1_dim() const { return h1_dim_; }

  /// Fundamental cycles of the spanning tree, as chains.
  const std::vector<Chain>& cycle_basis() const { return cycle_basis_; }
  /// Face-boundary walks as chains, one per face.
  const std::vector<Chain>& face_boundaries() const { return face_boundaries_; }
  bool in_tree(int e) const { return in_tree_[e]; }

  const RationalVector& edge_image(int e) const { return psi_[e]; }
  /// psi(e) scaled by a common denominator; integral, same span.
  const std::vector<std::int64_t>& scaled_image(int e) const { return psi_scaled_[e]; }

  bool is_cycle(std::span<const int> chain) const;
  /// Homology class of a cycle. Throws std::invalid_argument if not closed.
  RationalVector chain_class(std::span<const int> chain) const;
  std::vector<std::int64_t> scaled_class(std::span<const int> chain) const;

  /// Chain traversed by a closed walk given as successive half-edges, where
  /// each step moves along h -> alpha(h).
  Chain walk_chain(std::span<const HalfEdge> walk) const;

 private:
  CombinatorialMap map_;
  std::vector<bool> in_tree_;
  std::vector<Chain> cycle_basis_;
  std::vector<Chain> face_boundaries_;
  std::vector<RationalVector> psi_;
  std::vector<std::vector<std::int64_t>> psi_scaled_;
  int boundary_rank_ = 0;
  int h1_dim_ = 0;
};

struct SpanningSubgraph {
  const CombinatorialMap* parent = nullptr;
  EdgeMask edges = 0;

  int num_edges() const;
  bool contains(int e) const { return (edges >> e) & 1U; }
};

/// Topology of a spanning subgraph H and its regular neighborhood.
struct SubgraphProfile {
  int components = 0;      ///< c(H)
  int s = 0;               ///< twice the genus of the neighborhood of H
  int s_perp = 0;          ///< twice the genus of its complement in F
  int k = 0;               ///< dim ker(H1(H) -> H1(F))
  int b1 = 0;              ///< first Betti number of H
  int boundary_count = 0;  ///< boundary circles of the ribbon subgraph
  int boundary_rank = 0;   ///< dim of the span of boundary-circle classes in H1(F)

  friend bool operator==(const SubgraphProfile&, const SubgraphProfile&) = default;
};

/// Boundary walks of the ribbon subgraph (sigma restricted to H, then phi).
/// Isolated vertices contribute an empty walk.
std::vector<std::vector<HalfEdge>> ribbon_boundaries(const CombinatorialMap& map, EdgeMask edges);

/// Counts for the neighborhood of `edges` inside the dual map, i.e. the
/// complement side. Returns {components, boundary_count}.
std::array<int, 2> dual_ribbon_counts(const CombinatorialMap& map, EdgeMask dual_edges);

/// Reference computation straight from the definitions: k(H) as
/// dim(Z1(H) cap B) by rational elimination over the full chain space,
/// s_perp from the dual complementary subgraph.
/// Throws ContextMismatch when ctx was built for another map.
SubgraphProfile subgraph_profile(const SpanningSubgraph& h, const HomologyContext& ctx);

/// Class of a loop in H1(F). Throws NotALoop.
RationalVector edge_class(int e, const HomologyContext& ctx);
/// Closed chain e -+ f for two non-loop edges with the same endpoints.
/// Throws NotALoop when either is a loop and EndpointsDiffer otherwise.
Chain cycle_of_pair(int e, int f, const HomologyContext& ctx);
/// Edges homologous on the surface (loops: classes equal up to sign;
/// non-loops: same endpoints and bounding 2-cycle).
bool parallel(int e, int f, const HomologyContext& ctx);
/// Loop whose class is zero.
bool is_trivial_loop(int e, const HomologyContext& ctx);

}  // namespace slinv
