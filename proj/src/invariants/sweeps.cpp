#include "sweeps.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

namespace slinv::detail {

int rank_in_place(std::int64_t* buf, int rows, int cols) {
  std::vector<std::int64_t> saved(buf, buf + static_cast<std::ptrdiff_t>(rows) * cols);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (buf[i * cols + col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) std::swap_ranges(buf + pivot * cols, buf + (pivot + 1) * cols, buf + rank * cols);
    const std::int64_t* p = buf + rank * cols;
    for (int i = rank + 1; i < rows; ++i) {
      std::int64_t* r = buf + i * cols;
      std::int64_t a = r[col];
      if (a == 0) continue;
      std::int64_t g = 0;
      for (int j = col; j < cols; ++j) {
        std::int64_t x = 0;
        std::int64_t y = 0;
        if (__builtin_mul_overflow(r[j], p[col], &x) || __builtin_mul_overflow(p[j], a, &y) ||
            __builtin_sub_overflow(x, y, &r[j])) {
          std::vector<std::vector<std::int64_t>> wide(rows, std::vector<std::int64_t>(cols));
          for (int u = 0; u < rows; ++u) {
            std::copy_n(saved.begin() + static_cast<std::ptrdiff_t>(u) * cols, cols, wide[u].begin());
          }
          return exact_rank(std::move(wide));
        }
        g = std::gcd(g, r[j]);
      }
      if (g > 1) {
        for (int j = col; j < cols; ++j) r[j] /= g;
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

/// Flat copies of the map permutations plus integer homology images.
struct MapTables {
  int nv = 0;
  int ne = 0;
  int nf = 0;
  int dim = 0;
  std::vector<int> sigma, alpha, phi, vertex, edge, face, dir;
  std::vector<int> tail_v, head_v, tail_f, head_f;
  std::vector<std::int64_t> psi;  // ne x dim

  MapTables(const CombinatorialMap& g, const HomologyContext& ctx)
      : nv(g.num_vertices()), ne(g.num_edges()), nf(g.num_faces()), dim(ctx.h1_dim()) {
    const int nh = g.num_half_edges();
    for (int h = 0; h < nh; ++h) {
      sigma.push_back(g.sigma(h));
      alpha.push_back(g.alpha(h));
      phi.push_back(g.phi(h));
      vertex.push_back(g.vertex_of(h));
      edge.push_back(g.edge_of(h));
      face.push_back(g.face_of(h));
      dir.push_back(g.direction(h));
    }
    for (int e = 0; e < ne; ++e) {
      tail_v.push_back(g.tail_vertex(e));
      head_v.push_back(g.head_vertex(e));
      tail_f.push_back(g.face_of(g.tail(e)));
      head_f.push_back(g.face_of(g.head(e)));
      const auto& s = ctx.scaled_image(e);
      psi.insert(psi.end(), s.begin(), s.end());
    }
  }
};

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

/// Per-thread scratch space for one subgraph evaluation.
struct Workspace {
  std::vector<int> parent;
  std::vector<char> seen;
  std::vector<char> touched;
  std::vector<int> queue;
  std::vector<char> forest;
  std::vector<std::int64_t> pot;
  std::vector<std::int64_t> rows;
};

bool has(EdgeMask m, int e) { return (m >> e) & 1U; }

/// Number of boundary circles of the ribbon subgraph `mask` under the
/// rotation `rot`, counting `nodes` minus touched nodes as isolated disks.
int boundary_circles(const MapTables& t, const std::vector<int>& rot, const std::vector<int>& node_of,
                     int nodes, EdgeMask mask, Workspace& ws) {
  const int nh = 2 * t.ne;
  ws.seen.assign(nh, 0);
  ws.touched.assign(nodes, 0);
  int circles = 0;
  for (int h = 0; h < nh; ++h) {
    if (ws.seen[h] || !has(mask, t.edge[h])) continue;
    ++circles;
    int x = h;
    do {
      ws.seen[x] = 1;
      ws.touched[node_of[x]] = 1;
      int y = rot[t.alpha[x]];
      while (!has(mask, t.edge[y])) y = rot[y];
      x = y;
    } while (x != h);
  }
  for (int v = 0; v < nodes; ++v) circles += ws.touched[v] ? 0 : 1;
  return circles;
}

int union_count(const std::vector<int>& a, const std::vector<int>& b, int nodes, int ne, EdgeMask mask,
                Workspace& ws) {
  ws.parent.resize(nodes);
  std::iota(ws.parent.begin(), ws.parent.end(), 0);
  int comps = nodes;
  for (int e = 0; e < ne; ++e) {
    if (!has(mask, e)) continue;
    int x = find(ws.parent, a[e]);
    int y = find(ws.parent, b[e]);
    if (x != y) {
      ws.parent[x] = y;
      --comps;
    }
  }
  return comps;
}

/// dim ker(H1(H) -> H1(F)) via potentials along a spanning forest of H.
int kernel_dim(const CombinatorialMap& g, const MapTables& t, EdgeMask mask, int b1, Workspace& ws) {
  if (t.dim == 0 || b1 == 0) return b1;
  const int dim = t.dim;
  ws.pot.assign(static_cast<std::size_t>(t.nv) * dim, 0);
  ws.forest.assign(t.ne, 0);
  std::vector<char>& visited = ws.touched;
  visited.assign(t.nv, 0);
  for (int root = 0; root < t.nv; ++root) {
    if (visited[root]) continue;
    visited[root] = 1;
    ws.queue.assign(1, root);
    for (std::size_t qi = 0; qi < ws.queue.size(); ++qi) {
      int v = ws.queue[qi];
      for (HalfEdge h : g.rotation(v)) {
        int e = t.edge[h];
        if (!has(mask, e)) continue;
        int w = t.vertex[t.alpha[h]];
        if (visited[w]) continue;
        visited[w] = 1;
        ws.forest[e] = 1;
        for (int i = 0; i < dim; ++i) ws.pot[w * dim + i] = ws.pot[v * dim + i] + t.dir[h] * t.psi[e * dim + i];
        ws.queue.push_back(w);
      }
    }
  }
  ws.rows.clear();
  int nrows = 0;
  for (int e = 0; e < t.ne; ++e) {
    if (!has(mask, e) || ws.forest[e]) continue;
    bool zero = true;
    for (int i = 0; i < dim; ++i) {
      std::int64_t val = ws.pot[t.tail_v[e] * dim + i] + t.psi[e * dim + i] - ws.pot[t.head_v[e] * dim + i];
      ws.rows.push_back(val);
      zero = zero && val == 0;
    }
    if (zero) {
      ws.rows.resize(ws.rows.size() - dim);
    } else {
      ++nrows;
    }
  }
  return b1 - rank_in_place(ws.rows.data(), nrows, dim);
}

}  // namespace

KrushkalHistogram krushkal_histogram(const CombinatorialMap& g, const HomologyContext& ctx) {
  const MapTables t(g, ctx);
  const EdgeMask full = g.all_edges();
  const std::int64_t total = std::int64_t{1} << t.ne;
  // Histogram index: ((c * (E+1) + k) * (g+1) + s/2) * (g+1) + s_perp/2.
  const int gg = g.genus() + 1;
  const std::size_t bins = static_cast<std::size_t>(t.nv + 1) * (t.ne + 1) * gg * gg;
  std::vector<std::int64_t> hist(bins, 0);

#pragma omp parallel
  {
    std::vector<std::int64_t> local(bins, 0);
    Workspace ws;
#pragma omp for schedule(static)
    for (std::int64_t m = 0; m < total; ++m) {
      const EdgeMask mask = static_cast<EdgeMask>(m);
      const int size = std::popcount(mask);
      const int comps = union_count(t.tail_v, t.head_v, t.nv, t.ne, mask, ws);
      const int bc = boundary_circles(t, t.sigma, t.vertex, t.nv, mask, ws);
      const int s = 2 * comps - t.nv + size - bc;
      const EdgeMask comp_mask = full & ~mask;
      const int dual_comps = union_count(t.tail_f, t.head_f, t.nf, t.ne, comp_mask, ws);
      const int dual_bc = boundary_circles(t, t.phi, t.face, t.nf, comp_mask, ws);
      const int s_perp = 2 * dual_comps - t.nf + (t.ne - size) - dual_bc;
      const int b1 = size - t.nv + comps;
      const int k = kernel_dim(g, t, mask, b1, ws);
      ++local[((static_cast<std::size_t>(comps) * (t.ne + 1) + k) * gg + s / 2) * gg + s_perp / 2];
    }
#pragma omp critical
    for (std::size_t i = 0; i < bins; ++i) hist[i] += local[i];
  }

  KrushkalHistogram out;
  for (std::size_t i = 0; i < bins; ++i) {
    if (hist[i] == 0) continue;
    std::size_t rest = i;
    int sp = static_cast<int>(rest % gg);
    rest /= gg;
    int s = static_cast<int>(rest % gg);
    rest /= gg;
    int k = static_cast<int>(rest % (t.ne + 1));
    int c = static_cast<int>(rest / (t.ne + 1));
    out[{c, k, s, sp}] = hist[i];
  }
  return out;
}

StateHistogram state_histogram(const SurfaceLinkDiagram& d) {
  const int c = d.num_crossings();
  if (c == 0) return {{{0, 1, 0}, 1}};
  const CombinatorialMap& m = d.map();
  const HomologyContext& ctx = d.homology();
  const int dim = ctx.h1_dim();
  const int ne = m.num_edges();
  std::vector<int> alpha(m.num_half_edges());
  std::vector<int> dir(m.num_half_edges());
  std::vector<int> edge_of(m.num_half_edges());
  for (int h = 0; h < m.num_half_edges(); ++h) {
    alpha[h] = m.alpha(h);
    dir[h] = m.direction(h);
    edge_of[h] = m.edge_of(h);
  }
  std::vector<std::int64_t> psi;
  std::vector<int> tails;
  for (int e = 0; e < ne; ++e) {
    const auto& s = ctx.scaled_image(e);
    psi.insert(psi.end(), s.begin(), s.end());
    tails.push_back(m.tail(e));
  }

  const std::int64_t total = std::int64_t{1} << c;
  // Index: (b * (2c+1) + k) * (dim+1) + r.
  const std::size_t bins = static_cast<std::size_t>(c + 1) * (2 * c + 1) * (dim + 1);
  std::vector<std::int64_t> hist(bins, 0);

#pragma omp parallel
  {
    std::vector<std::int64_t> local(bins, 0);
    std::vector<char> seen(ne);
    std::vector<std::int64_t> rows;
#pragma omp for schedule(static)
    for (std::int64_t choice = 0; choice < total; ++choice) {
      std::fill(seen.begin(), seen.end(), 0);
      rows.clear();
      int curves = 0;
      int nonzero = 0;
      for (int e = 0; e < ne; ++e) {
        if (seen[e]) continue;
        ++curves;
        std::size_t base = rows.size();
        rows.resize(base + dim, 0);
        int start = tails[e];
        int x = start;
        do {
          int edge = edge_of[x];
          seen[edge] = 1;
          for (int i = 0; i < dim; ++i) rows[base + i] += dir[x] * psi[edge * dim + i];
          int arrive = alpha[x];
          int v = arrive / 4;
          x = 4 * v + smoothing_partner(arrive % 4, (choice >> v) & 1);
        } while (x != start);
        bool zero = std::all_of(rows.begin() + base, rows.end(), [](std::int64_t q) { return q == 0; });
        if (zero) {
          rows.resize(base);
        } else {
          ++nonzero;
        }
      }
      int r = dim == 0 ? 0 : rank_in_place(rows.data(), nonzero, dim);
      int b = c - std::popcount(static_cast<std::uint64_t>(choice));
      ++local[(static_cast<std::size_t>(b) * (2 * c + 1) + (curves - r)) * (dim + 1) + r];
    }
#pragma omp critical
    for (std::size_t i = 0; i < bins; ++i) hist[i] += local[i];
  }

  StateHistogram out;
  for (std::size_t i = 0; i < bins; ++i) {
    if (hist[i] == 0) continue;
    int r = static_cast<int>(i % (dim + 1));
    std::size_t rest = i / (dim + 1);
    int k = static_cast<int>(rest % (2 * c + 1));
    int b = static_cast<int>(rest / (2 * c + 1));
    out[{b, k, r}] = hist[i];
  }
  return out;
}

}  // namespace slinv::detail
