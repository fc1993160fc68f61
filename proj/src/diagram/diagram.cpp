#include "slinv/diagram.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "slinv/error.hpp"

namespace slinv {

namespace {

std::string slot_name(const Slot& s) { return std::to_string(s.crossing) + "." + std::to_string(s.slot); }

/// Arc id occupying each half-edge slot.
std::vector<int> slot_owner(int crossings, const std::vector<Arc>& arcs) {
  std::vector<int> owner(4 * crossings, -1);
  for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
    for (const Slot& s : {arcs[a].tail, arcs[a].head}) owner[4 * s.crossing + s.slot] = a;
  }
  return owner;
}

bool is_tail_slot(const std::vector<Arc>& arcs, const std::vector<int>& owner, int h) {
  return arcs[owner[h]].tail == Slot{h / 4, h % 4};
}

/// Follows the strand out of `h` (a slot where the current arc arrives).
int continue_from(int h) { return 4 * (h / 4) + (h % 4 + 2) % 4; }

std::vector<std::vector<int>> trace_components(const std::vector<Arc>& arcs, const std::vector<int>& owner,
                                               bool reorient, std::vector<Arc>* out) {
  std::vector<Arc> work = arcs;
  std::vector<bool> seen(arcs.size(), false);
  std::vector<std::vector<int>> comps;
  for (int start = 0; start < static_cast<int>(arcs.size()); ++start) {
    if (seen[start]) continue;
    std::vector<int> comp;
    int a = start;
    while (!seen[a]) {
      seen[a] = true;
      comp.push_back(a);
      int next_h = continue_from(4 * work[a].head.crossing + work[a].head.slot);
      int b = owner[next_h];
      Slot s{next_h / 4, next_h % 4};
      if (!(work[b].tail == s)) {
        if (!reorient || seen[b]) {
          throw Error(ErrorCode::InconsistentOrientation,
                      "strand through " + slot_name(s) + " is entered twice");
        }
        std::swap(work[b].tail, work[b].head);
      }
      a = b;
    }
    comps.push_back(std::move(comp));
  }
  if (out != nullptr) *out = std::move(work);
  return comps;
}

}  // namespace

SurfaceLinkDiagram SurfaceLinkDiagram::from_arcs(int crossings, std::vector<Arc> arcs, bool auto_orient,
                                                 std::vector<std::string>* warnings) {
  if (crossings < 0) throw Error(ErrorCode::BadSlot, "negative crossing count");
  if (crossings > kHardCap) {
    throw Error(ErrorCode::CrossingCapExceeded, std::to_string(crossings) + " crossings");
  }
  std::vector<bool> used(4 * crossings, false);
  for (const Arc& arc : arcs) {
    for (const Slot& s : {arc.tail, arc.head}) {
      if (s.crossing < 0 || s.crossing >= crossings || s.slot < 0 || s.slot > 3) {
        throw Error(ErrorCode::BadSlot, "slot " + slot_name(s) + " out of range");
      }
      int h = 4 * s.crossing + s.slot;
      if (used[h]) throw Error(ErrorCode::BadSlot, "slot " + slot_name(s) + " used twice");
      used[h] = true;
    }
  }
  if (static_cast<int>(arcs.size()) != 2 * crossings) {
    throw Error(ErrorCode::NotFourValent,
                std::to_string(arcs.size()) + " arcs for " + std::to_string(crossings) + " crossings");
  }

  std::vector<int> owner = slot_owner(crossings, arcs);
  bool consistent = true;
  for (int v = 0; v < crossings && consistent; ++v) {
    for (int j = 0; j < 2; ++j) {
      if (is_tail_slot(arcs, owner, 4 * v + j) == is_tail_slot(arcs, owner, 4 * v + j + 2)) consistent = false;
    }
  }
  SurfaceLinkDiagram d;
  d.crossings_ = crossings;
  if (consistent) {
    d.components_ = trace_components(arcs, owner, false, nullptr);
    d.arcs_ = std::move(arcs);
  } else {
    if (!auto_orient) {
      throw Error(ErrorCode::InconsistentOrientation, "a strand has two incoming or two outgoing arcs");
    }
    d.components_ = trace_components(arcs, owner, true, &d.arcs_);
    if (warnings != nullptr) {
      warnings->push_back("arc directions were inconsistent; components re-oriented from their lowest arc");
    }
  }

  if (crossings == 0) {
    d.map_ = CombinatorialMap::point();
    d.components_ = {{}};
  } else {
    std::vector<std::vector<HalfEdge>> rots(crossings);
    for (int v = 0; v < crossings; ++v) rots[v] = {4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3};
    std::vector<std::array<HalfEdge, 2>> edges;
    edges.reserve(d.arcs_.size());
    for (const Arc& a : d.arcs_) edges.push_back({half_edge(a.tail.crossing, a.tail.slot), half_edge(a.head.crossing, a.head.slot)});
    d.map_ = CombinatorialMap::build(std::move(rots), std::move(edges));
  }
  d.homology_ = std::make_shared<const HomologyContext>(d.map_);
  return d;
}

// ---------------------------------------------------------------------------
// sld v1

namespace {

Slot parse_slot(const std::string& tok, const std::function<void(const std::string&)>& fail) {
  auto dot = tok.find('.');
  if (dot == std::string::npos) fail("slot '" + tok + "' is not <crossing>.<slot>");
  Slot s;
  try {
    std::size_t used = 0;
    s.crossing = std::stoi(tok.substr(0, dot), &used);
    if (used != dot) fail("bad crossing in '" + tok + "'");
    std::string rest = tok.substr(dot + 1);
    s.slot = std::stoi(rest, &used);
    if (used != rest.size()) fail("bad slot in '" + tok + "'");
  } catch (const std::logic_error&) {
    fail("bad slot '" + tok + "'");
  }
  return s;
}

}  // namespace

SurfaceLinkDiagram parse_sld(std::string_view text, bool auto_orient, std::vector<std::string>* warnings) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  int crossings = -1;
  std::map<int, Arc> arcs;
  std::map<int, bool> flipped;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::ParseError, "sld line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (!saw_header && kw != "format") fail("missing 'format sld 1' header");
    if (kw == "format") {
      std::string name;
      int version = 0;
      if (saw_header || !(ls >> name >> version) || name != "sld" || version != 1) fail("expected 'format sld 1'");
      saw_header = true;
    } else if (kw == "crossings") {
      if (crossings >= 0 || !(ls >> crossings) || crossings < 0) fail("expected one 'crossings <c>'");
    } else if (kw == "arc") {
      int id = 0;
      std::string from;
      std::string to;
      if (!(ls >> id >> from >> to)) fail("arc needs '<id> <cr>.<slot> <cr>.<slot>'");
      if (arcs.count(id) != 0) fail("arc " + std::to_string(id) + " defined twice");
      arcs[id] = Arc{parse_slot(from, fail), parse_slot(to, fail)};
    } else if (kw == "over") {
      int cr = 0;
      std::string which;
      if (!(ls >> cr >> which) || (which != "02" && which != "13")) fail("over needs '<cr> 02|13'");
      if (flipped.count(cr) != 0) fail("over given twice for crossing " + std::to_string(cr));
      flipped[cr] = which == "13";
    } else {
      fail("unknown keyword '" + kw + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing token '" + extra + "'");
  }
  if (!saw_header) throw Error(ErrorCode::ParseError, "missing 'format sld 1' header");
  if (crossings < 0) throw Error(ErrorCode::ParseError, "missing 'crossings' line");

  std::vector<Arc> list;
  for (int expect = 0; auto& [id, arc] : arcs) {
    if (id != expect++) throw Error(ErrorCode::ParseError, "arc ids must be dense from 0");
    list.push_back(arc);
  }
  for (auto [cr, flip] : flipped) {
    if (cr < 0 || cr >= crossings) throw Error(ErrorCode::BadSlot, "over refers to crossing " + std::to_string(cr));
    if (!flip) continue;
    // Rotate labels so the over-strand lands on {0,2}.
    for (Arc& a : list) {
      for (Slot* s : {&a.tail, &a.head}) {
        if (s->crossing == cr && s->slot >= 0 && s->slot <= 3) s->slot = (s->slot + 3) % 4;
      }
    }
  }
  return SurfaceLinkDiagram::from_arcs(crossings, std::move(list), auto_orient, warnings);
}

std::string to_sld(const SurfaceLinkDiagram& d) {
  std::ostringstream out;
  out << "format sld 1\n";
  out << "crossings " << d.num_crossings() << '\n';
  for (int a = 0; a < d.num_arcs(); ++a) {
    out << "arc " << a << ' ' << slot_name(d.arc(a).tail) << ' ' << slot_name(d.arc(a).head) << '\n';
  }
  return out.str();
}

SurfaceLinkDiagram mirror(const SurfaceLinkDiagram& d) {
  std::vector<Arc> arcs = d.arcs();
  for (Arc& a : arcs) {
    a.tail.slot = (a.tail.slot + 1) % 4;
    a.head.slot = (a.head.slot + 1) % 4;
  }
  return SurfaceLinkDiagram::from_arcs(d.num_crossings(), std::move(arcs));
}

SurfaceLinkDiagram medial_diagram(const CombinatorialMap& g) {
  if (g.num_edges() == 0) throw Error(ErrorCode::NotFourValent, "medial diagram needs an edge");
  // Crossing e sits at the midpoint of edge e. Going counterclockwise there:
  // slot 0 faces the corner after the tail, slot 1 the corner before it,
  // slot 2 the corner after the head, slot 3 the corner before it.
  std::vector<Arc> arcs;
  for (HalfEdge k = 0; k < g.num_half_edges(); ++k) {
    HalfEdge next = g.sigma(k);
    Slot from{g.edge_of(k), g.is_tail(k) ? 0 : 2};
    Slot to{g.edge_of(next), g.is_tail(next) ? 1 : 3};
    arcs.push_back({from, to});
  }
  return SurfaceLinkDiagram::from_arcs(g.num_edges(), std::move(arcs), true);
}

// ---------------------------------------------------------------------------
// Coloring and Tait graphs

Coloring Coloring::swapped() const {
  Coloring c;
  c.shaded.reserve(shaded.size());
  for (bool s : shaded) c.shaded.push_back(!s);
  return c;
}

int Coloring::num_shaded() const { return static_cast<int>(std::count(shaded.begin(), shaded.end(), true)); }

namespace {

std::optional<Coloring> try_color(const SurfaceLinkDiagram& d) {
  const CombinatorialMap& m = d.map();
  const int nf = m.num_faces();
  std::vector<int> color(nf, -1);
  std::vector<std::vector<int>> adj(nf);
  for (int e = 0; e < m.num_edges(); ++e) {
    int f = m.face_of(m.tail(e));
    int g = m.face_of(m.head(e));
    if (f == g) return std::nullopt;
    adj[f].push_back(g);
    adj[g].push_back(f);
  }
  for (int s = 0; s < nf; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      for (int g : adj[f]) {
        if (color[g] == -1) {
          color[g] = 1 - color[f];
          queue.push_back(g);
        } else if (color[g] == color[f]) {
          return std::nullopt;
        }
      }
    }
  }
  int a_color = d.num_crossings() > 0 ? color[m.face_of(1)] : 0;
  Coloring c;
  for (int f = 0; f < nf; ++f) c.shaded.push_back(color[f] == a_color);
  return c;
}

/// Build one Tait graph from the regions of a given shade.
CombinatorialMap region_graph(const SurfaceLinkDiagram& d, const Coloring& col, bool shade,
                              std::vector<int>& regions) {
  const CombinatorialMap& m = d.map();
  regions.clear();
  if (d.num_crossings() == 0) {
    regions.push_back(0);
    return CombinatorialMap::point();
  }
  std::vector<int> vertex_of_face(m.num_faces(), -1);
  for (int f = 0; f < m.num_faces(); ++f) {
    if (col.shaded[f] == shade) {
      vertex_of_face[f] = static_cast<int>(regions.size());
      regions.push_back(f);
    }
  }
  // Crossing v touches the regions of this shade at corner slots lo and lo+2.
  std::vector<int> lo(d.num_crossings());
  for (int v = 0; v < d.num_crossings(); ++v) lo[v] = col.shaded[m.face_of(4 * v)] == shade ? 0 : 1;

  std::vector<std::vector<HalfEdge>> rots;
  for (int f : regions) {
    std::vector<HalfEdge> rot;
    for (HalfEdge x : m.faces()[f]) {
      int v = x / 4;
      rot.push_back(2 * v + (x % 4 == lo[v] ? 0 : 1));
    }
    // Face walks keep the region on their right, so they run clockwise.
    // G_A takes the counterclockwise order of the surface. G_B keeps the walk
    // order, which is what dual() produces for G_A.
    if (shade) std::reverse(rot.begin(), rot.end());
    rots.push_back(std::move(rot));
  }
  std::vector<std::array<HalfEdge, 2>> edges;
  for (int v = 0; v < d.num_crossings(); ++v) edges.push_back({2 * v, 2 * v + 1});
  return CombinatorialMap::build(std::move(rots), std::move(edges));
}

}  // namespace

Coloring checkerboard(const SurfaceLinkDiagram& d) {
  auto c = try_color(d);
  if (!c) throw Error(ErrorCode::NotCheckerboardColorable, "face adjacency graph is not bipartite");
  return *c;
}

bool is_checkerboard_colorable(const SurfaceLinkDiagram& d) { return try_color(d).has_value(); }

TaitPair tait_graphs(const SurfaceLinkDiagram& d, const Coloring& coloring) {
  if (coloring.shaded.size() != static_cast<std::size_t>(d.map().num_faces())) {
    throw std::invalid_argument("coloring does not match diagram");
  }
  TaitPair t;
  t.a = region_graph(d, coloring, true, t.a_regions);
  t.b = region_graph(d, coloring, false, t.b_regions);
  return t;
}

bool is_alternating(const SurfaceLinkDiagram& d) {
  for (const auto& comp : d.components()) {
    const int n = static_cast<int>(comp.size());
    for (int i = 0; i < n; ++i) {
      bool over_here = d.arc(comp[i]).head.slot % 2 == 0;
      bool over_next = d.arc(comp[(i + 1) % n]).head.slot % 2 == 0;
      if (over_here == over_next) return false;
    }
  }
  return true;
}

ReducedFlags reduced_flags(const SurfaceLinkDiagram& d) {
  ReducedFlags flags;
  const CombinatorialMap& m = d.map();
  const HomologyContext& ctx = d.homology();
  for (int v = 0; v < d.num_crossings(); ++v) {
    for (int j = 0; j < 2; ++j) {
      HalfEdge x = 4 * v + j;
      HalfEdge y = 4 * v + j + 2;
      if (m.face_of(x) != m.face_of(y)) continue;
      flags.strongly_reduced = false;
      const auto& walk = m.faces()[m.face_of(x)];
      auto px = std::find(walk.begin(), walk.end(), x) - walk.begin();
      std::vector<HalfEdge> segment;
      for (auto i = px; walk[i % walk.size()] != y; ++i) segment.push_back(walk[i % walk.size()]);
      auto cls = ctx.chain_class(ctx.walk_chain(segment));
      if (std::all_of(cls.begin(), cls.end(), [](const mpq_class& q) { return q == 0; })) {
        flags.nugatory_free = false;
      }
    }
  }
  return flags;
}

// ---------------------------------------------------------------------------
// States

State state_at(const SurfaceLinkDiagram& d, std::uint64_t choice) {
  const CombinatorialMap& m = d.map();
  const int c = d.num_crossings();
  State s;
  s.choice = choice;
  s.a = std::popcount(choice);
  s.b = c - s.a;
  if (c == 0) {
    s.curves.emplace_back();
    s.classes.emplace_back();
    s.k = 1;
    return s;
  }
  std::vector<bool> seen(m.num_edges(), false);
  for (int e = 0; e < m.num_edges(); ++e) {
    if (seen[e]) continue;
    std::vector<HalfEdge> curve;
    HalfEdge start = m.tail(e);
    HalfEdge x = start;
    do {
      seen[m.edge_of(x)] = true;
      curve.push_back(x);
      HalfEdge arrive = m.alpha(x);
      int v = arrive / 4;
      x = 4 * v + smoothing_partner(arrive % 4, (choice >> v) & 1U);
    } while (x != start);
    s.curves.push_back(std::move(curve));
  }
  const HomologyContext& ctx = d.homology();
  for (const auto& curve : s.curves) s.classes.push_back(ctx.chain_class(ctx.walk_chain(curve)));
  s.r = exact_rank(s.classes);
  s.k = s.size() - s.r;
  return s;
}

void enumerate_states(const SurfaceLinkDiagram& d, const std::function<void(const State&)>& visit, int cap) {
  const int c = d.num_crossings();
  if (c > cap || c >= kHardCap) {
    throw Error(ErrorCode::CrossingCapExceeded, std::to_string(c) + " crossings, cap " + std::to_string(cap));
  }
  const std::uint64_t total = std::uint64_t{1} << c;
  for (std::uint64_t choice = 0; choice < total; ++choice) visit(state_at(d, choice));
}

int crossing_sign(const SurfaceLinkDiagram& d, int crossing) {
  const CombinatorialMap& m = d.map();
  int over_in = m.is_tail(4 * crossing) ? 2 : 0;
  int under_in = m.is_tail(4 * crossing + 1) ? 3 : 1;
  int under_out = (under_in + 2) % 4;
  return under_out == (over_in + 3) % 4 ? 1 : -1;
}

int writhe(const SurfaceLinkDiagram& d) {
  int w = 0;
  for (int v = 0; v < d.num_crossings(); ++v) w += crossing_sign(d, v);
  return w;
}

std::vector<int> twist_region_ids(const SurfaceLinkDiagram& d) {
  const CombinatorialMap& m = d.map();
  std::vector<int> parent(d.num_crossings());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  if (d.num_crossings() > 0) {
    for (const auto& f : m.faces()) {
      if (f.size() != 2) continue;
      int u = f[0] / 4;
      int v = f[1] / 4;
      if (u != v) parent[root(u)] = root(v);
    }
  }
  std::vector<int> ids(d.num_crossings());
  std::map<int, int> label;
  for (int v = 0; v < d.num_crossings(); ++v) {
    int r = root(v);
    auto [it, fresh] = label.emplace(r, static_cast<int>(label.size()));
    ids[v] = it->second;
  }
  return ids;
}

int twist_regions(const SurfaceLinkDiagram& d) {
  auto ids = twist_region_ids(d);
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

}  // namespace slinv
