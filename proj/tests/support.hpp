#pragma once

// Shared fixtures for the test binaries: corpus access, random maps and
// diagrams, and oracles written against raw rotations and arcs only.

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "slinv/error.hpp"
#include "slinv/invariants.hpp"

namespace slinv::test {

inline std::string corpus_path(const std::string& name) { return std::string(SLINV_CORPUS_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline SurfaceLinkDiagram corpus_diagram(const std::string& name) { return parse_sld(read_text(corpus_path(name))); }
inline CombinatorialMap corpus_map(const std::string& name) { return parse_rg(read_text(corpus_path(name))); }

inline const std::vector<std::string>& corpus_diagram_names() {
  static const std::vector<std::string> names{"weave2x2.sld", "vk4_106.sld", "vk4_105.sld", "trefoil.sld",
                                              "figure8.sld",  "noncolorable_torus.sld", "curl.sld"};
  return names;
}

inline const std::vector<std::string>& corpus_map_names() {
  static const std::vector<std::string> names{"weave_tait.rg",     "vk4_106_GA.rg",   "vk4_105_GA.rg",
                                              "torus_bouquet.rg",  "genus2_bouquet.rg", "theta_sphere.rg",
                                              "torus_bouquet_curl.rg"};
  return names;
}

/// Map from a rotation permutation on 2E half-edges, edges {2e, 2e+1}.
inline std::optional<CombinatorialMap> map_from_sigma(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<std::vector<HalfEdge>> rots;
  std::vector<bool> seen(n, false);
  for (int h = 0; h < n; ++h) {
    if (seen[h]) continue;
    std::vector<HalfEdge> rot;
    for (int x = h; !seen[x]; x = sigma[x]) {
      seen[x] = true;
      rot.push_back(x);
    }
    rots.push_back(std::move(rot));
  }
  std::vector<std::array<HalfEdge, 2>> es;
  for (int e = 0; 2 * e < n; ++e) es.push_back({2 * e, 2 * e + 1});
  try {
    return CombinatorialMap::build(std::move(rots), std::move(es));
  } catch (const Error&) {
    return std::nullopt;
  }
}

/// Uniform random rotation systems, rejected until connected with genus in range.
inline CombinatorialMap random_map(std::mt19937_64& rng, int edges, int genus_lo, int genus_hi) {
  std::vector<int> sigma(2 * edges);
  for (;;) {
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    // a random permutation of the values read as a cycle structure
    std::vector<int> perm(sigma.size());
    std::uniform_int_distribution<int> cuts(1, std::max(1, edges));
    int vertices = cuts(rng);
    std::vector<int> bounds{0};
    for (int i = 1; i < vertices; ++i) bounds.push_back(std::uniform_int_distribution<int>(1, 2 * edges - 1)(rng));
    bounds.push_back(2 * edges);
    std::sort(bounds.begin(), bounds.end());
    for (std::size_t b = 0; b + 1 < bounds.size(); ++b) {
      for (int i = bounds[b]; i < bounds[b + 1]; ++i) {
        int next = i + 1 < bounds[b + 1] ? i + 1 : bounds[b];
        perm[sigma[i]] = sigma[next];
      }
    }
    auto g = map_from_sigma(perm);
    if (g && g->genus() >= genus_lo && g->genus() <= genus_hi) return *g;
  }
}

/// Adds a loop whose two half-edges sit next to each other at vertex 0, so
/// it bounds a disk. The new loop is the last edge.
inline CombinatorialMap with_trivial_loop(const CombinatorialMap& g) {
  auto rots = g.rotations();
  auto es = g.edge_list();
  const int h = g.num_half_edges();
  rots[0].push_back(h);
  rots[0].push_back(h + 1);
  es.push_back({h, h + 1});
  return CombinatorialMap::build(std::move(rots), std::move(es));
}

inline SurfaceLinkDiagram flip_components(const SurfaceLinkDiagram& d, unsigned mask) {
  std::vector<Arc> arcs = d.arcs();
  for (int i = 0; i < d.num_components(); ++i) {
    if (((mask >> i) & 1U) == 0) continue;
    for (int a : d.components()[i]) std::swap(arcs[a].tail, arcs[a].head);
  }
  return SurfaceLinkDiagram::from_arcs(d.num_crossings(), std::move(arcs));
}

/// Switches the crossings in `mask` by turning their slots a quarter turn.
inline SurfaceLinkDiagram switch_crossings(const SurfaceLinkDiagram& d, std::uint64_t mask) {
  std::vector<Arc> arcs = d.arcs();
  for (Arc& a : arcs) {
    for (Slot* s : {&a.tail, &a.head}) {
      if ((mask >> s->crossing) & 1U) s->slot = (s->slot + 1) % 4;
    }
  }
  return SurfaceLinkDiagram::from_arcs(d.num_crossings(), std::move(arcs));
}

/// Alternating diagram on the torus from a random genus-1 Tait graph, with
/// random component orientations.
inline SurfaceLinkDiagram random_torus_diagram(std::mt19937_64& rng, int max_crossings) {
  int c = std::uniform_int_distribution<int>(2, max_crossings)(rng);
  SurfaceLinkDiagram d = medial_diagram(random_map(rng, c, 1, 1));
  unsigned mask = std::uniform_int_distribution<unsigned>(0, (1U << std::min(d.num_components(), 16)) - 1)(rng);
  return flip_components(d, mask);
}

// ---------------------------------------------------------------------------
// Oracles

/// Faces of phi = sigma o alpha traced from the raw rotations and edge pairs.
inline int oracle_face_count(const CombinatorialMap& g) {
  const int n = g.num_half_edges();
  std::vector<int> sigma(n), alpha(n);
  for (const auto& rot : g.rotations()) {
    for (std::size_t i = 0; i < rot.size(); ++i) sigma[rot[i]] = rot[(i + 1) % rot.size()];
  }
  for (auto [a, b] : g.edge_list()) {
    alpha[a] = b;
    alpha[b] = a;
  }
  std::vector<bool> seen(n, false);
  int faces = 0;
  for (int h = 0; h < n; ++h) {
    if (seen[h]) continue;
    ++faces;
    for (int x = h; !seen[x]; x = sigma[alpha[x]]) seen[x] = true;
  }
  return n == 0 ? 1 : faces;
}

inline int oracle_genus(const CombinatorialMap& g) {
  return (2 - (g.num_vertices() - g.num_edges() + oracle_face_count(g))) / 2;
}

/// Rank over Q by plain Gaussian elimination.
inline int oracle_rank(std::vector<std::vector<mpq_class>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || rows[r][c] == 0) continue;
      mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// k(H) = dim(Z1(H) cap B): cycles of H from a spanning forest, face
/// boundaries as signed edge chains.
inline int oracle_kernel(const CombinatorialMap& g, EdgeMask h) {
  const int ne = g.num_edges();
  std::vector<std::vector<mpq_class>> boundaries;
  for (const auto& f : g.faces()) {
    std::vector<mpq_class> row(ne, 0);
    for (HalfEdge x : f) row[g.edge_of(x)] += g.is_tail(x) ? 1 : -1;
    boundaries.push_back(row);
  }
  // forest of H, then one cycle per non-forest edge
  std::vector<int> parent(g.num_vertices(), -1), via(g.num_vertices(), -1);
  std::vector<bool> tree(ne, false);
  for (int root = 0; root < g.num_vertices(); ++root) {
    if (parent[root] != -1) continue;
    parent[root] = root;
    std::vector<int> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int e = 0; e < ne; ++e) {
        if (((h >> e) & 1U) == 0 || g.is_loop(e)) continue;
        int a = g.tail_vertex(e), b = g.head_vertex(e);
        int w = a == v ? b : b == v ? a : -1;
        if (w < 0 || parent[w] != -1) continue;
        parent[w] = v;
        via[w] = e;
        tree[e] = true;
        queue.push_back(w);
      }
    }
  }
  auto path_to_root = [&](int v, std::vector<mpq_class>& row, int sign) {
    while (parent[v] != v) {
      int e = via[v];
      // walking from v up to its parent
      row[e] += sign * (g.tail_vertex(e) == v ? 1 : -1);
      v = parent[v];
    }
  };
  std::vector<std::vector<mpq_class>> cycles;
  for (int e = 0; e < ne; ++e) {
    if (((h >> e) & 1U) == 0 || tree[e]) continue;
    std::vector<mpq_class> row(ne, 0);
    row[e] += 1;
    // head back to tail through the tree: head -> root -> tail
    path_to_root(g.head_vertex(e), row, 1);
    path_to_root(g.tail_vertex(e), row, -1);
    cycles.push_back(row);
  }
  std::vector<std::vector<mpq_class>> both = boundaries;
  both.insert(both.end(), cycles.begin(), cycles.end());
  const int rb = oracle_rank(boundaries);
  return static_cast<int>(cycles.size()) + rb - oracle_rank(both);
}

/// Kauffman bracket from a PD code, each crossing {i, j, k, l} listed
/// counterclockwise from the incoming under-strand. Returns A-exponent ->
/// coefficient of <K> normalized so the unknot is 1.
inline std::map<int, long> pd_bracket(const std::vector<std::array<int, 4>>& pd) {
  const int c = static_cast<int>(pd.size());
  int labels = 0;
  for (const auto& x : pd) {
    for (int v : x) labels = std::max(labels, v + 1);
  }
  std::map<int, long> total;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << c); ++s) {
    std::vector<int> parent(labels);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int a = 0;
    for (int v = 0; v < c; ++v) {
      auto [i, j, k, l] = pd[v];
      if ((s >> v) & 1U) {
        ++a;
        parent[find(i)] = find(j);
        parent[find(k)] = find(l);
      } else {
        parent[find(i)] = find(l);
        parent[find(j)] = find(k);
      }
    }
    std::vector<bool> used(labels, false);
    for (const auto& x : pd) {
      for (int v : x) used[v] = true;
    }
    int loops = 0;
    for (int x = 0; x < labels; ++x) loops += used[x] && find(x) == x ? 1 : 0;
    // d^{loops-1} with d = -A^2 - A^-2
    std::map<int, long> term{{a - (c - a), 1}};
    for (int i = 1; i < loops; ++i) {
      std::map<int, long> next;
      for (auto [e, v] : term) {
        next[e + 2] -= v;
        next[e - 2] -= v;
      }
      term = next;
    }
    for (auto [e, v] : term) total[e] += v;
  }
  std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
  return total;
}

/// Jones polynomial (-A^3)^{-w} <K> rewritten with A = t^{-1/4}, as a JKPoly.
inline JKPoly pd_jones(const std::vector<std::array<int, 4>>& pd, int writhe) {
  JKPoly out;
  const long sign = writhe % 2 == 0 ? 1 : -1;
  for (auto [e, v] : pd_bracket(pd)) out.add_term(-(e - 3 * writhe), 0, sign * v);
  return out;
}

/// PD code and writhe read directly off the arcs of a diagram: labels are
/// arc ids, the incoming under-strand is the {1,3} slot that is an arc head,
/// and the sign compares the over-strand direction with the under-strand.
inline std::pair<std::vector<std::array<int, 4>>, int> pd_of(const SurfaceLinkDiagram& d) {
  const int c = d.num_crossings();
  std::vector<int> at(4 * c, -1);
  std::vector<bool> head(4 * c, false);
  for (int a = 0; a < d.num_arcs(); ++a) {
    const Arc& arc = d.arc(a);
    at[4 * arc.tail.crossing + arc.tail.slot] = a;
    at[4 * arc.head.crossing + arc.head.slot] = a;
    head[4 * arc.head.crossing + arc.head.slot] = true;
  }
  std::vector<std::array<int, 4>> pd;
  int w = 0;
  for (int v = 0; v < c; ++v) {
    int in = head[4 * v + 1] ? 1 : 3;
    std::array<int, 4> x{};
    for (int i = 0; i < 4; ++i) x[i] = at[4 * v + (in + i) % 4];
    pd.push_back(x);
    // over-strand leaving through the slot after the incoming under-strand
    // points east while the under-strand points north
    w += head[4 * v + (in + 1) % 4] ? -1 : 1;
  }
  return {pd, w};
}

/// Twist regions counted from bigon faces traced off the arcs.
inline int oracle_twist_regions(const SurfaceLinkDiagram& d) {
  const int c = d.num_crossings();
  std::vector<int> other(4 * c);
  for (const Arc& a : d.arcs()) {
    int x = 4 * a.tail.crossing + a.tail.slot;
    int y = 4 * a.head.crossing + a.head.slot;
    other[x] = y;
    other[y] = x;
  }
  auto next_ccw = [](int h) { return 4 * (h / 4) + (h % 4 + 1) % 4; };
  std::vector<int> parent(c);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> seen(4 * c, false);
  for (int h = 0; h < 4 * c; ++h) {
    if (seen[h]) continue;
    std::vector<int> face;
    for (int x = h; !seen[x]; x = next_ccw(other[x])) {
      seen[x] = true;
      face.push_back(x);
    }
    if (face.size() == 2 && face[0] / 4 != face[1] / 4) parent[find(face[0] / 4)] = find(face[1] / 4);
  }
  int regions = 0;
  for (int v = 0; v < c; ++v) regions += find(v) == v ? 1 : 0;
  return regions;
}

}  // namespace slinv::test
