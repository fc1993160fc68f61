#include "slinv/homology.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "slinv/error.hpp"

namespace slinv {

// ---------------------------------------------------------------------------
// Exact rank

int exact_rank(std::vector<RationalVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int rank = 0;
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const RationalVector& r) { return r[col] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    const RationalVector& p = rows[rank];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      mpq_class factor = rows[i][col] / p[col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= factor * p[j];
    }
    ++rank;
  }
  return rank;
}

namespace {

int exact_rank_mpz(std::vector<std::vector<mpz_class>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int rank = 0;
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& r) { return r[col] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    const auto& p = rows[rank];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      mpz_class a = rows[i][col];
      mpz_class g = 0;
      for (std::size_t j = col; j < cols; ++j) {
        rows[i][j] = rows[i][j] * p[col] - p[j] * a;
        g = gcd(g, rows[i][j]);
      }
      if (g > 1) {
        for (std::size_t j = col; j < cols; ++j) rows[i][j] /= g;
      }
    }
    ++rank;
  }
  return rank;
}

std::optional<int> exact_rank_i64(std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows[0].size();
  int rank = 0;
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& r) { return r[col] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    const auto& p = rows[rank];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      std::int64_t a = rows[i][col];
      std::int64_t g = 0;
      for (std::size_t j = col; j < cols; ++j) {
        std::int64_t x = 0;
        std::int64_t y = 0;
        std::int64_t z = 0;
        if (__builtin_mul_overflow(rows[i][j], p[col], &x) || __builtin_mul_overflow(p[j], a, &y) ||
            __builtin_sub_overflow(x, y, &z)) {
          return std::nullopt;
        }
        rows[i][j] = z;
        g = std::gcd(g, z);
      }
      if (g > 1) {
        for (std::size_t j = col; j < cols; ++j) rows[i][j] /= g;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int exact_rank(std::vector<std::vector<std::int64_t>> rows) {
  if (rows.empty() || rows[0].empty()) return 0;
  std::vector<std::vector<mpz_class>> wide;
  wide.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<mpz_class> w;
    w.reserve(r.size());
    for (std::int64_t v : r) w.emplace_back(static_cast<long>(v));
    wide.push_back(std::move(w));
  }
  if (auto r = exact_rank_i64(rows)) return *r;
  return exact_rank_mpz(std::move(wide));
}

// ---------------------------------------------------------------------------
// HomologyContext

namespace {

/// Signed tree path from vertex 0 to every vertex, as chains.
std::vector<Chain> tree_paths(const CombinatorialMap& map, std::vector<bool>& in_tree) {
  const int nv = map.num_vertices();
  const int ne = map.num_edges();
  in_tree.assign(ne, false);
  std::vector<Chain> path(nv);
  std::vector<bool> seen(nv, false);
  path[0].assign(ne, 0);
  seen[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (HalfEdge h : map.rotation(v)) {
      int w = map.vertex_of(map.alpha(h));
      if (seen[w]) continue;
      seen[w] = true;
      int e = map.edge_of(h);
      in_tree[e] = true;
      path[w] = path[v];
      path[w][e] += map.direction(h);
      queue.push_back(w);
    }
  }
  return path;
}

}  // namespace

HomologyContext::HomologyContext(const CombinatorialMap& map) : map_(map) {
  const int ne = map_.num_edges();
  std::vector<Chain> paths = tree_paths(map_, in_tree_);

  std::vector<int> coord(ne, -1);
  int beta = 0;
  for (int e = 0; e < ne; ++e) {
    if (in_tree_[e]) continue;
    coord[e] = beta++;
    Chain z(ne, 0);
    for (int i = 0; i < ne; ++i) z[i] = paths[map_.tail_vertex(e)][i] - paths[map_.head_vertex(e)][i];
    z[e] += 1;
    cycle_basis_.push_back(std::move(z));
  }

  for (const auto& f : map_.faces()) face_boundaries_.push_back(walk_chain(f));

  // Row-reduce the face boundaries in fundamental-cycle coordinates.
  std::vector<RationalVector> rows;
  for (const Chain& fb : face_boundaries_) {
    RationalVector r(beta, 0);
    for (int e = 0; e < ne; ++e) {
      if (coord[e] >= 0) r[coord[e]] = fb[e];
    }
    rows.push_back(std::move(r));
  }
  std::vector<int> pivots;
  std::vector<RationalVector> rref;
  for (int col = 0; col < beta; ++col) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const RationalVector& r) { return r[col] != 0; });
    if (it == rows.end()) continue;
    RationalVector p = *it;
    rows.erase(it);
    mpq_class lead = p[col];
    for (auto& x : p) x /= lead;
    for (auto& r : rows) {
      if (r[col] == 0) continue;
      mpq_class f = r[col];
      for (int j = 0; j < beta; ++j) r[j] -= f * p[j];
    }
    for (auto& r : rref) {
      if (r[col] == 0) continue;
      mpq_class f = r[col];
      for (int j = 0; j < beta; ++j) r[j] -= f * p[j];
    }
    rref.push_back(std::move(p));
    pivots.push_back(col);
  }
  boundary_rank_ = static_cast<int>(rref.size());
  h1_dim_ = beta - boundary_rank_;
  if (h1_dim_ != 2 * map_.genus()) {
    throw Error(ErrorCode::NonIntegerGenus, "homology rank " + std::to_string(h1_dim_) +
                                                " disagrees with Euler genus " + std::to_string(map_.genus()));
  }
  std::vector<int> free_cols;
  for (int col = 0; col < beta; ++col) {
    if (std::find(pivots.begin(), pivots.end(), col) == pivots.end()) free_cols.push_back(col);
  }

  psi_.assign(ne, RationalVector(h1_dim_, 0));
  mpz_class denom = 1;
  for (int e = 0; e < ne; ++e) {
    if (coord[e] < 0) continue;
    RationalVector x(beta, 0);
    x[coord[e]] = 1;
    for (std::size_t i = 0; i < rref.size(); ++i) {
      mpq_class f = x[pivots[i]];
      if (f == 0) continue;
      for (int j = 0; j < beta; ++j) x[j] -= f * rref[i][j];
    }
    for (int i = 0; i < h1_dim_; ++i) {
      psi_[e][i] = x[free_cols[i]];
      denom = lcm(denom, psi_[e][i].get_den());
    }
  }
  psi_scaled_.assign(ne, std::vector<std::int64_t>(h1_dim_, 0));
  for (int e = 0; e < ne; ++e) {
    for (int i = 0; i < h1_dim_; ++i) {
      mpq_class v = psi_[e][i] * denom;
      mpz_class n = v.get_num();
      if (!n.fits_slong_p() || abs(n) > (mpz_class(1) << 40)) {
        throw std::overflow_error("homology coordinates exceed 40 bits");
      }
      psi_scaled_[e][i] = n.get_si();
    }
  }
}

bool HomologyContext::is_cycle(std::span<const int> chain) const {
  std::vector<long> boundary(map_.num_vertices(), 0);
  for (int e = 0; e < map_.num_edges(); ++e) {
    boundary[map_.head_vertex(e)] += chain[e];
    boundary[map_.tail_vertex(e)] -= chain[e];
  }
  return std::all_of(boundary.begin(), boundary.end(), [](long b) { return b == 0; });
}

RationalVector HomologyContext::chain_class(std::span<const int> chain) const {
  if (chain.size() != static_cast<std::size_t>(map_.num_edges()) || !is_cycle(chain)) {
    throw std::invalid_argument("chain_class: not a cycle of this map");
  }
  RationalVector c(h1_dim_, 0);
  for (int e = 0; e < map_.num_edges(); ++e) {
    if (chain[e] == 0) continue;
    for (int i = 0; i < h1_dim_; ++i) c[i] += chain[e] * psi_[e][i];
  }
  return c;
}

std::vector<std::int64_t> HomologyContext::scaled_class(std::span<const int> chain) const {
  if (chain.size() != static_cast<std::size_t>(map_.num_edges()) || !is_cycle(chain)) {
    throw std::invalid_argument("scaled_class: not a cycle of this map");
  }
  std::vector<std::int64_t> c(h1_dim_, 0);
  for (int e = 0; e < map_.num_edges(); ++e) {
    if (chain[e] == 0) continue;
    for (int i = 0; i < h1_dim_; ++i) c[i] += chain[e] * psi_scaled_[e][i];
  }
  return c;
}

Chain HomologyContext::walk_chain(std::span<const HalfEdge> walk) const {
  Chain c(map_.num_edges(), 0);
  for (HalfEdge h : walk) c[map_.edge_of(h)] += map_.direction(h);
  return c;
}

// ---------------------------------------------------------------------------
// Spanning subgraphs

int SpanningSubgraph::num_edges() const { return std::popcount(edges); }

namespace {

int root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

bool has(EdgeMask mask, int e) { return (mask >> e) & 1U; }

/// Fundamental cycles of a spanning forest of H, as full chains.
std::vector<Chain> forest_cycles(const CombinatorialMap& map, EdgeMask mask) {
  const int nv = map.num_vertices();
  const int ne = map.num_edges();
  std::vector<Chain> path(nv);
  std::vector<bool> seen(nv, false);
  std::vector<bool> forest(ne, false);
  for (int start = 0; start < nv; ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    path[start].assign(ne, 0);
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (HalfEdge h : map.rotation(v)) {
        int e = map.edge_of(h);
        if (!has(mask, e)) continue;
        int w = map.vertex_of(map.alpha(h));
        if (seen[w]) continue;
        seen[w] = true;
        forest[e] = true;
        path[w] = path[v];
        path[w][e] += map.direction(h);
        queue.push_back(w);
      }
    }
  }
  std::vector<Chain> cycles;
  for (int e = 0; e < ne; ++e) {
    if (!has(mask, e) || forest[e]) continue;
    Chain z(ne, 0);
    for (int i = 0; i < ne; ++i) z[i] = path[map.tail_vertex(e)][i] - path[map.head_vertex(e)][i];
    z[e] += 1;
    cycles.push_back(std::move(z));
  }
  return cycles;
}

RationalVector to_rational(const Chain& c) {
  RationalVector r;
  r.reserve(c.size());
  for (int v : c) r.emplace_back(v);
  return r;
}

template <class Sigma>
std::vector<std::vector<HalfEdge>> trace_restricted(const CombinatorialMap& map, EdgeMask mask,
                                                    Sigma&& sigma) {
  const int nh = map.num_half_edges();
  auto restricted = [&](HalfEdge h) {
    HalfEdge x = sigma(h);
    while (!has(mask, map.edge_of(x))) x = sigma(x);
    return x;
  };
  std::vector<bool> seen(nh, false);
  std::vector<std::vector<HalfEdge>> walks;
  for (HalfEdge h = 0; h < nh; ++h) {
    if (seen[h] || !has(mask, map.edge_of(h))) continue;
    std::vector<HalfEdge> walk;
    HalfEdge x = h;
    do {
      seen[x] = true;
      walk.push_back(x);
      x = restricted(map.alpha(x));
    } while (x != h);
    walks.push_back(std::move(walk));
  }
  return walks;
}

}  // namespace

std::vector<std::vector<HalfEdge>> ribbon_boundaries(const CombinatorialMap& map, EdgeMask edges) {
  auto walks = trace_restricted(map, edges, [&](HalfEdge h) { return map.sigma(h); });
  for (int v = 0; v < map.num_vertices(); ++v) {
    const auto& rot = map.rotation(v);
    bool isolated = std::none_of(rot.begin(), rot.end(), [&](HalfEdge h) { return has(edges, map.edge_of(h)); });
    if (isolated) walks.emplace_back();
  }
  return walks;
}

std::array<int, 2> dual_ribbon_counts(const CombinatorialMap& map, EdgeMask dual_edges) {
  const int nf = map.num_faces();
  std::vector<int> parent(nf);
  std::iota(parent.begin(), parent.end(), 0);
  int comps = nf;
  std::vector<bool> touched(nf, false);
  for (int e = 0; e < map.num_edges(); ++e) {
    if (!has(dual_edges, e)) continue;
    int a = map.face_of(map.tail(e));
    int b = map.face_of(map.head(e));
    touched[a] = touched[b] = true;
    int ra = root(parent, a);
    int rb = root(parent, b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  // Dual rotation is phi = sigma o alpha.
  auto walks = trace_restricted(map, dual_edges, [&](HalfEdge h) { return map.phi(h); });
  int isolated = static_cast<int>(std::count(touched.begin(), touched.end(), false));
  return {comps, static_cast<int>(walks.size()) + isolated};
}

SubgraphProfile subgraph_profile(const SpanningSubgraph& h, const HomologyContext& ctx) {
  if (h.parent == nullptr || (h.parent != &ctx.map() && !(*h.parent == ctx.map()))) {
    throw Error(ErrorCode::ContextMismatch, "homology context built for a different map");
  }
  const CombinatorialMap& map = *h.parent;
  const int nv = map.num_vertices();
  const int ne = map.num_edges();
  if ((h.edges & ~map.all_edges()) != 0) throw std::out_of_range("subgraph edge outside parent");

  SubgraphProfile p;
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  p.components = nv;
  for (int e = 0; e < ne; ++e) {
    if (!h.contains(e)) continue;
    int a = root(parent, map.tail_vertex(e));
    int b = root(parent, map.head_vertex(e));
    if (a != b) {
      parent[a] = b;
      --p.components;
    }
  }
  const int size = h.num_edges();
  p.b1 = size - nv + p.components;

  auto boundaries = ribbon_boundaries(map, h.edges);
  p.boundary_count = static_cast<int>(boundaries.size());
  p.s = 2 * p.components - nv + size - p.boundary_count;

  EdgeMask complement = map.all_edges() & ~h.edges;
  auto [dual_comps, dual_bc] = dual_ribbon_counts(map, complement);
  p.s_perp = 2 * dual_comps - map.num_faces() + (ne - size) - dual_bc;

  std::vector<RationalVector> b_rows;
  for (const Chain& fb : ctx.face_boundaries()) b_rows.push_back(to_rational(fb));
  const int rank_b = ctx.boundary_rank();

  std::vector<RationalVector> rows = b_rows;
  for (const Chain& z : forest_cycles(map, h.edges)) rows.push_back(to_rational(z));
  p.k = p.b1 + rank_b - exact_rank(std::move(rows));

  rows = b_rows;
  for (const auto& walk : boundaries) rows.push_back(to_rational(ctx.walk_chain(walk)));
  p.boundary_rank = exact_rank(std::move(rows)) - rank_b;
  return p;
}

RationalVector edge_class(int e, const HomologyContext& ctx) {
  if (!ctx.map().is_loop(e)) throw Error(ErrorCode::NotALoop, "edge " + std::to_string(e));
  return ctx.edge_image(e);
}

Chain cycle_of_pair(int e, int f, const HomologyContext& ctx) {
  const CombinatorialMap& map = ctx.map();
  if (map.is_loop(e) || map.is_loop(f)) throw Error(ErrorCode::NotALoop, "cycle_of_pair needs non-loop edges");
  Chain c(map.num_edges(), 0);
  if (map.tail_vertex(e) == map.tail_vertex(f) && map.head_vertex(e) == map.head_vertex(f)) {
    c[e] += 1;
    c[f] -= 1;
  } else if (map.tail_vertex(e) == map.head_vertex(f) && map.head_vertex(e) == map.tail_vertex(f)) {
    c[e] += 1;
    c[f] += 1;
  } else {
    throw Error(ErrorCode::EndpointsDiffer, "edges " + std::to_string(e) + ", " + std::to_string(f));
  }
  return c;
}

bool is_trivial_loop(int e, const HomologyContext& ctx) {
  if (!ctx.map().is_loop(e)) return false;
  const auto& v = ctx.edge_image(e);
  return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return x == 0; });
}

bool parallel(int e, int f, const HomologyContext& ctx) {
  if (e == f) return true;
  const CombinatorialMap& map = ctx.map();
  bool le = map.is_loop(e);
  bool lf = map.is_loop(f);
  if (le != lf) return false;
  if (le) {
    const auto& a = ctx.edge_image(e);
    const auto& b = ctx.edge_image(f);
    bool same = true;
    bool opposite = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
      same = same && a[i] == b[i];
      opposite = opposite && a[i] == -b[i];
    }
    return same || opposite;
  }
  Chain c;
  try {
    c = cycle_of_pair(e, f, ctx);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::EndpointsDiffer) return false;
    throw;
  }
  auto cls = ctx.chain_class(c);
  return std::all_of(cls.begin(), cls.end(), [](const mpq_class& x) { return x == 0; });
}

}  // namespace slinv
