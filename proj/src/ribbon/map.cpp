#include <algorithm>
#include <numeric>
#include <sstream>

#include "slinv/error.hpp"
#include "slinv/ribbon.hpp"

namespace slinv {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

CombinatorialMap CombinatorialMap::build(std::vector<std::vector<HalfEdge>> rotations,
                                         std::vector<std::array<HalfEdge, 2>> edges) {
  const int m = static_cast<int>(edges.size());
  const int n_half = 2 * m;
  if (rotations.empty()) throw Error(ErrorCode::Disconnected, "map has no vertices");

  CombinatorialMap map;
  map.sigma_.assign(n_half, -1);
  map.sigma_inv_.assign(n_half, -1);
  map.alpha_.assign(n_half, -1);
  map.vertex_of_.assign(n_half, -1);
  map.edge_of_.assign(n_half, -1);
  map.tail_.assign(m, -1);

  for (int v = 0; v < static_cast<int>(rotations.size()); ++v) {
    const auto& rot = rotations[v];
    for (HalfEdge h : rot) {
      if (h < 0 || h >= n_half) {
        throw Error(ErrorCode::DanglingHalfEdge, "half-edge " + std::to_string(h) + " out of range");
      }
      if (map.vertex_of_[h] != -1) {
        throw Error(ErrorCode::DanglingHalfEdge,
                    "half-edge " + std::to_string(h) + " appears at two rotation positions");
      }
      map.vertex_of_[h] = v;
    }
    for (std::size_t i = 0; i < rot.size(); ++i) {
      HalfEdge next = rot[(i + 1) % rot.size()];
      map.sigma_[rot[i]] = next;
      map.sigma_inv_[next] = rot[i];
    }
  }
  for (HalfEdge h = 0; h < n_half; ++h) {
    if (map.vertex_of_[h] == -1) {
      throw Error(ErrorCode::DanglingHalfEdge, "half-edge " + std::to_string(h) + " has no vertex");
    }
  }
  for (int e = 0; e < m; ++e) {
    auto [t, hd] = edges[e];
    if (t < 0 || t >= n_half || hd < 0 || hd >= n_half) {
      throw Error(ErrorCode::DanglingHalfEdge, "edge " + std::to_string(e) + " references unknown half-edge");
    }
    if (t == hd) throw Error(ErrorCode::NotInvolution, "edge " + std::to_string(e) + " is a fixed point");
    if (map.alpha_[t] != -1 || map.alpha_[hd] != -1) {
      throw Error(ErrorCode::NotInvolution, "half-edge paired twice at edge " + std::to_string(e));
    }
    map.alpha_[t] = hd;
    map.alpha_[hd] = t;
    map.edge_of_[t] = map.edge_of_[hd] = e;
    map.tail_[e] = t;
  }

  // Connectivity of <sigma, alpha> is connectivity of the vertex graph.
  const int nv = static_cast<int>(rotations.size());
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  int comps = nv;
  for (int e = 0; e < m; ++e) {
    int a = find_root(parent, map.vertex_of_[map.tail_[e]]);
    int b = find_root(parent, map.vertex_of_[map.alpha_[map.tail_[e]]]);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  if (comps != 1) {
    throw Error(ErrorCode::Disconnected, std::to_string(comps) + " components");
  }

  // Canonical rotation start: smallest half-edge.
  for (auto& rot : rotations) {
    if (!rot.empty()) std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
  }
  map.rotations_ = std::move(rotations);

  map.face_of_.assign(n_half, -1);
  for (HalfEdge h = 0; h < n_half; ++h) {
    if (map.face_of_[h] != -1) continue;
    std::vector<HalfEdge> walk;
    HalfEdge x = h;
    do {
      map.face_of_[x] = static_cast<int>(map.faces_.size());
      walk.push_back(x);
      x = map.phi(x);
    } while (x != h);
    map.faces_.push_back(std::move(walk));
  }
  if (m == 0) map.faces_.push_back({});  // isolated vertex: one disk face

  int twice = 2 - map.euler_characteristic();
  if (twice < 0 || twice % 2 != 0) {
    throw Error(ErrorCode::NonIntegerGenus, "Euler characteristic " + std::to_string(map.euler_characteristic()));
  }
  map.genus_ = twice / 2;
  return map;
}

std::vector<std::array<HalfEdge, 2>> CombinatorialMap::edge_list() const {
  std::vector<std::array<HalfEdge, 2>> out;
  out.reserve(tail_.size());
  for (int e = 0; e < num_edges(); ++e) out.push_back({tail(e), head(e)});
  return out;
}

EdgeMask CombinatorialMap::all_edges() const {
  int m = num_edges();
  return m >= 64 ? ~EdgeMask{0} : ((EdgeMask{1} << m) - 1);
}

CombinatorialMap dual(const CombinatorialMap& map) {
  std::vector<std::vector<HalfEdge>> rots;
  if (map.num_edges() == 0) return CombinatorialMap::point();
  rots.reserve(map.faces().size());
  for (const auto& f : map.faces()) rots.push_back(f);
  return CombinatorialMap::build(std::move(rots), map.edge_list());
}

CombinatorialMap delete_edge(const CombinatorialMap& map, int e) {
  if (e < 0 || e >= map.num_edges()) throw std::out_of_range("delete_edge: bad edge id");
  HalfEdge a = map.tail(e);
  HalfEdge b = map.head(e);
  auto relabel = [&](HalfEdge h) { return h - (h > a ? 1 : 0) - (h > b ? 1 : 0); };
  std::vector<std::vector<HalfEdge>> rots;
  for (const auto& rot : map.rotations()) {
    std::vector<HalfEdge> r;
    for (HalfEdge h : rot) {
      if (h != a && h != b) r.push_back(relabel(h));
    }
    rots.push_back(std::move(r));
  }
  std::vector<std::array<HalfEdge, 2>> edges;
  for (int f = 0; f < map.num_edges(); ++f) {
    if (f != e) edges.push_back({relabel(map.tail(f)), relabel(map.head(f))});
  }
  return CombinatorialMap::build(std::move(rots), std::move(edges));
}

CombinatorialMap reorient(const CombinatorialMap& map, std::span<const int> flip) {
  auto edges = map.edge_list();
  for (int e : flip) std::swap(edges.at(static_cast<std::size_t>(e))[0], edges.at(static_cast<std::size_t>(e))[1]);
  return CombinatorialMap::build(map.rotations(), std::move(edges));
}

namespace {

bool try_root(const CombinatorialMap& a, const CombinatorialMap& b, HalfEdge root_b, bool reflect) {
  const int n = a.num_half_edges();
  std::vector<HalfEdge> f(n, -1);
  std::vector<HalfEdge> finv(n, -1);
  std::vector<HalfEdge> stack{0};
  f[0] = root_b;
  finv[root_b] = 0;
  auto bind = [&](HalfEdge x, HalfEdge y) {
    if (f[x] == -1 && finv[y] == -1) {
      f[x] = y;
      finv[y] = x;
      stack.push_back(x);
      return true;
    }
    return f[x] == y;
  };
  while (!stack.empty()) {
    HalfEdge x = stack.back();
    stack.pop_back();
    HalfEdge y = f[x];
    HalfEdge ys = reflect ? b.sigma_inv(y) : b.sigma(y);
    if (!bind(a.sigma(x), ys)) return false;
    if (!bind(a.alpha(x), b.alpha(y))) return false;
  }
  return true;
}

}  // namespace

bool isomorphic(const CombinatorialMap& a, const CombinatorialMap& b, bool allow_reflection) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() ||
      a.num_faces() != b.num_faces()) {
    return false;
  }
  if (a.num_edges() == 0) return true;
  for (HalfEdge r = 0; r < b.num_half_edges(); ++r) {
    if (try_root(a, b, r, false)) return true;
    if (allow_reflection && try_root(a, b, r, true)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// rg v1

CombinatorialMap parse_rg(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  std::vector<std::pair<int, std::vector<HalfEdge>>> vertices;
  std::vector<std::pair<int, std::array<HalfEdge, 2>>> edges;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::ParseError, "rg line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "format") {
      std::string name;
      int version = 0;
      if (!(ls >> name >> version) || name != "rg" || version != 1) fail("expected 'format rg 1'");
      saw_header = true;
    } else if (kw == "vertex") {
      int id = 0;
      if (!(ls >> id)) fail("vertex id");
      std::vector<HalfEdge> rot;
      std::string tok;
      while (ls >> tok) {
        try {
          std::size_t used = 0;
          rot.push_back(std::stoi(tok, &used));
          if (used != tok.size()) fail("bad half-edge '" + tok + "'");
        } catch (const std::logic_error&) {
          fail("bad half-edge '" + tok + "'");
        }
      }
      vertices.emplace_back(id, std::move(rot));
    } else if (kw == "edge") {
      int id = 0;
      HalfEdge t = 0;
      HalfEdge h = 0;
      if (!(ls >> id >> t >> h)) fail("edge needs '<id> <tail> <head>'");
      std::string extra;
      if (ls >> extra) fail("trailing token '" + extra + "'");
      edges.push_back({id, {t, h}});
    } else {
      fail("unknown keyword '" + kw + "'");
    }
    if (!saw_header) fail("missing 'format rg 1' header");
  }
  if (!saw_header) throw Error(ErrorCode::ParseError, "missing 'format rg 1' header");

  std::vector<std::vector<HalfEdge>> rots(vertices.size());
  std::vector<bool> seen_v(vertices.size(), false);
  for (auto& [id, rot] : vertices) {
    if (id < 0 || id >= static_cast<int>(vertices.size()) || seen_v[id]) {
      throw Error(ErrorCode::ParseError, "vertex ids must be dense 0..V-1");
    }
    seen_v[id] = true;
    rots[id] = std::move(rot);
  }
  std::vector<std::array<HalfEdge, 2>> es(edges.size());
  std::vector<bool> seen_e(edges.size(), false);
  for (auto& [id, pr] : edges) {
    if (id < 0 || id >= static_cast<int>(edges.size()) || seen_e[id]) {
      throw Error(ErrorCode::ParseError, "edge ids must be dense 0..E-1");
    }
    seen_e[id] = true;
    es[id] = pr;
  }
  return CombinatorialMap::build(std::move(rots), std::move(es));
}

std::string to_rg(const CombinatorialMap& map) {
  std::ostringstream out;
  out << "format rg 1\n";
  for (int v = 0; v < map.num_vertices(); ++v) {
    out << "vertex " << v;
    for (HalfEdge h : map.rotation(v)) out << ' ' << h;
    out << '\n';
  }
  for (int e = 0; e < map.num_edges(); ++e) {
    out << "edge " << e << ' ' << map.tail(e) << ' ' << map.head(e) << '\n';
  }
  return out.str();
}

}  // namespace slinv
