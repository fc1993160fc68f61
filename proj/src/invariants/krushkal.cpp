#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "slinv/error.hpp"
#include "slinv/invariants.hpp"
#include "sweeps.hpp"

namespace slinv {

namespace {

const std::vector<std::string> kLower{"x", "y", "u", "v"};
const std::vector<std::string> kUpper{"X", "Y", "U", "V"};

void check_cap(const CombinatorialMap& g, int cap) {
  if (g.num_edges() > cap || g.num_edges() >= kHardCap) {
    throw Error(ErrorCode::EdgeCapExceeded,
                std::to_string(g.num_edges()) + " edges, cap " + std::to_string(std::min(cap, kHardCap - 1)));
  }
}

int root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

LaurentPoly krushkal(const CombinatorialMap& g, int cap) {
  check_cap(g, cap);
  HomologyContext ctx(g);
  LaurentPoly p(kLower);
  for (const auto& [key, count] : detail::krushkal_histogram(g, ctx)) {
    auto [c, k, s, sp] = key;
    p.add_term({c - 1, k, s, sp}, mpz_class(static_cast<long>(count)));
  }
  return p;
}

LaurentPoly krushkal_reference(const CombinatorialMap& g, int cap) {
  check_cap(g, cap);
  HomologyContext ctx(g);
  LaurentPoly p(kLower);
  const EdgeMask total = EdgeMask{1} << g.num_edges();
  for (EdgeMask m = 0; m < total; ++m) {
    SubgraphProfile prof = subgraph_profile({&ctx.map(), m}, ctx);
    p.add_term({prof.components - 1, prof.k, prof.s / 2, prof.s_perp / 2}, 1);
  }
  return p;
}

LaurentPoly big_P(const LaurentPoly& p) {
  std::vector<LaurentPoly> images;
  for (int i = 0; i < 4; ++i) images.push_back(LaurentPoly::variable(kUpper, i));
  images[0] -= LaurentPoly::constant(kUpper, 1);
  images[1] -= LaurentPoly::constant(kUpper, 1);
  return p.compose(images);
}

// ---------------------------------------------------------------------------
// Whitney rank polynomial

namespace {

using EdgeList = std::vector<std::array<int, 2>>;

/// Relabels vertices by first appearance and sorts, so isomorphic
/// labelings of the same multigraph often share a cache entry.
EdgeList canonical(EdgeList edges) {
  std::map<int, int> label;
  for (auto& e : edges) {
    for (int& v : e) v = label.try_emplace(v, static_cast<int>(label.size())).first->second;
    if (e[0] > e[1]) std::swap(e[0], e[1]);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

bool connected_without(const EdgeList& rest, int u, int w) {
  std::map<int, std::vector<int>> adj;
  for (auto [a, b] : rest) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> stack{u};
  std::set<int> seen{u};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (x == w) return true;
    for (int y : adj[x]) {
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return false;
}

LaurentPoly rank_poly(const EdgeList& edges, std::map<EdgeList, LaurentPoly>& memo) {
  static const std::vector<std::string> xy{"x", "y"};
  if (edges.empty()) return LaurentPoly::constant(xy, 1);
  if (auto it = memo.find(edges); it != memo.end()) return it->second;
  auto [u, w] = edges.back();
  EdgeList rest(edges.begin(), edges.end() - 1);
  LaurentPoly result(xy);
  auto contract = [&] {
    EdgeList c = rest;
    for (auto& e : c) {
      for (int& v : e) v = v == w ? u : v;
    }
    return rank_poly(canonical(std::move(c)), memo);
  };
  if (u == w) {
    result = (LaurentPoly::constant(xy, 1) + LaurentPoly::variable(xy, 1)) * rank_poly(canonical(rest), memo);
  } else if (!connected_without(rest, u, w)) {
    result = (LaurentPoly::constant(xy, 1) + LaurentPoly::variable(xy, 0)) * contract();
  } else {
    result = rank_poly(canonical(rest), memo) + contract();
  }
  memo.emplace(edges, result);
  return result;
}

}  // namespace

LaurentPoly whitney_rank(const CombinatorialMap& g) {
  EdgeList edges;
  for (int e = 0; e < g.num_edges(); ++e) edges.push_back({g.tail_vertex(e), g.head_vertex(e)});
  std::map<EdgeList, LaurentPoly> memo;
  return rank_poly(canonical(std::move(edges)), memo);
}

LaurentPoly tutte_specialization(const LaurentPoly& p, int genus) {
  static const std::vector<std::string> xy{"x", "y"};
  std::vector<LaurentPoly> images{LaurentPoly::variable(xy, 0), LaurentPoly::variable(xy, 1),
                                  LaurentPoly::variable(xy, 1), LaurentPoly::variable(xy, 1, -1)};
  return LaurentPoly::variable(xy, 1, genus) * p.compose(images);
}

bool tutte_check(const CombinatorialMap& g, int cap) {
  return whitney_rank(g) == tutte_specialization(krushkal(g, cap), g.genus());
}

bool duality_check(const CombinatorialMap& g, int cap) {
  LaurentPoly p = krushkal(g, cap);
  LaurentPoly q = krushkal(dual(g), cap);
  std::vector<LaurentPoly> swap{LaurentPoly::variable(kLower, 1), LaurentPoly::variable(kLower, 0),
                                LaurentPoly::variable(kLower, 3), LaurentPoly::variable(kLower, 2)};
  return p == q.compose(swap);
}

bool loop_deletion_check(const CombinatorialMap& g, int e, int cap) {
  if (e < 0 || e >= g.num_edges()) throw std::out_of_range("loop_deletion_check: bad edge id");
  HomologyContext ctx(g);
  if (!is_trivial_loop(e, ctx)) {
    throw Error(ErrorCode::NotTrivialLoop, "edge " + std::to_string(e) + " is not a null-homologous loop");
  }
  LaurentPoly one_plus_y = LaurentPoly::constant(kLower, 1) + LaurentPoly::variable(kLower, 1);
  return krushkal(g, cap) == one_plus_y * krushkal(delete_edge(g, e), cap);
}

// ---------------------------------------------------------------------------
// Reduced graph

ReducedGraphData reduce(const CombinatorialMap& g, const HomologyContext& ctx, int rotation) {
  const int ne = g.num_edges();
  ReducedGraphData out;
  std::vector<bool> trivial(ne, false);
  for (int e = 0; e < ne; ++e) {
    trivial[e] = is_trivial_loop(e, ctx);
    out.trivial_loops_deleted += trivial[e] ? 1 : 0;
  }
  std::vector<int> parent(ne);
  std::iota(parent.begin(), parent.end(), 0);
  for (int e = 0; e < ne; ++e) {
    if (trivial[e]) continue;
    for (int f = e + 1; f < ne; ++f) {
      if (!trivial[f] && parallel(e, f, ctx)) parent[root(parent, f)] = root(parent, e);
    }
  }
  std::map<int, std::vector<int>> classes;
  for (int e = 0; e < ne; ++e) {
    if (!trivial[e]) classes[root(parent, e)].push_back(e);
  }
  for (const auto& [r, members] : classes) {
    const int m = static_cast<int>(members.size());
    out.kept_edges.push_back(members[((rotation % m) + m) % m]);
  }
  std::sort(out.kept_edges.begin(), out.kept_edges.end());

  std::vector<int> loops;
  std::vector<int> vparent(g.num_vertices());
  std::iota(vparent.begin(), vparent.end(), 0);
  int comps = g.num_vertices();
  int nonloops = 0;
  for (int e : out.kept_edges) {
    if (g.is_loop(e)) {
      loops.push_back(e);
      continue;
    }
    ++nonloops;
    int a = root(vparent, g.tail_vertex(e));
    int b = root(vparent, g.head_vertex(e));
    if (a != b) {
      vparent[a] = b;
      --comps;
    }
  }
  out.lambda = static_cast<int>(loops.size());
  out.mu = nonloops - g.num_vertices() + comps;

  auto bit = [](int e) { return EdgeMask{1} << e; };
  const int nl = static_cast<int>(loops.size());
  for (int i = 0; i < nl; ++i) {
    for (int j = i + 1; j < nl; ++j) {
      if (subgraph_profile({&ctx.map(), bit(loops[i]) | bit(loops[j])}, ctx).s > 0) ++out.gamma;
    }
  }
  for (int i = 0; i < nl && !out.has_3petal; ++i) {
    for (int j = i + 1; j < nl && !out.has_3petal; ++j) {
      for (int l = j + 1; l < nl && !out.has_3petal; ++l) {
        auto prof = subgraph_profile({&ctx.map(), bit(loops[i]) | bit(loops[j]) | bit(loops[l])}, ctx);
        out.has_3petal = prof.s > 0 && prof.k > 0;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verdicts

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "?";
}

Verdict Verdict::check(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail)};
}

Verdict Verdict::skipped(std::string name, std::string reason) {
  return {std::move(name), Status::Skipped, std::move(reason)};
}

std::vector<Verdict> verify_krushkal_coeffs(const CombinatorialMap& g, const LaurentPoly& P,
                                            const ReducedGraphData& red) {
  const int genus = g.genus();
  const int n = g.num_vertices() - 1;
  const int k = red.trivial_loops_deleted;
  std::vector<Verdict> out;
  auto slot = [&](const char* name, LaurentPoly::Exponents exps, int expected) {
    mpz_class got = P.coefficient(exps);
    out.push_back(Verdict::check(name, got == expected,
                                 "coefficient " + got.get_str() + ", expected " + std::to_string(expected)));
  };
  slot("krushkal-mu", {n - 1, k, 0, genus}, red.mu);
  if (genus == 0) {
    out.push_back(Verdict::skipped("krushkal-lambda", "genus 0 has no V^{g-1} slot"));
    out.push_back(Verdict::skipped("krushkal-gamma", "genus 0 has no V^{g-1} slot"));
    return out;
  }
  slot("krushkal-lambda", {n, k, 0, genus - 1}, red.lambda);
  if (red.has_3petal) {
    out.push_back(Verdict::skipped("krushkal-gamma", "HypothesisViolated: graph has 3-petal loops"));
  } else {
    slot("krushkal-gamma", {n, k, 1, genus - 1}, red.gamma);
  }
  return out;
}

std::vector<Verdict> verify_krushkal_coeffs(const CombinatorialMap& g, int cap) {
  HomologyContext ctx(g);
  return verify_krushkal_coeffs(g, big_P(krushkal(g, cap)), reduce(g, ctx));
}

}  // namespace slinv
