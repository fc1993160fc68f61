#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

using namespace slinv;
using namespace slinv::test;

namespace {

/// Same map with half-edge ids permuted.
CombinatorialMap relabel(const CombinatorialMap& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.num_half_edges());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto rots = g.rotations();
  for (auto& r : rots) {
    for (auto& h : r) h = perm[h];
  }
  auto es = g.edge_list();
  for (auto& e : es) e = {perm[e[0]], perm[e[1]]};
  return CombinatorialMap::build(rots, es);
}

std::vector<CombinatorialMap> sample_maps() {
  std::vector<CombinatorialMap> maps;
  for (const auto& n : corpus_map_names()) maps.push_back(corpus_map(n));
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 40; ++i) maps.push_back(random_map(rng, 2 + i % 6, 0, 2));
  return maps;
}

}  // namespace

TEST_CASE("build rejects malformed input") {
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code([] { CombinatorialMap::build({{0, 1}}, {{0, 0}}); }) == ErrorCode::NotInvolution);
  CHECK(code([] { CombinatorialMap::build({{0}, {1}, {}}, {{0, 1}}); }) == ErrorCode::Disconnected);
  CHECK(code([] { CombinatorialMap::build({{0, 1, 2}}, {{0, 1}}); }) == ErrorCode::DanglingHalfEdge);
}

TEST_CASE("genus agrees with an independent face trace") {
  for (const auto& g : sample_maps()) {
    CHECK(g.num_faces() == oracle_face_count(g));
    CHECK(g.genus() == oracle_genus(g));
    CHECK(g.euler_characteristic() == 2 - 2 * g.genus());
  }
}

TEST_CASE("corpus maps have the expected surfaces") {
  CHECK(corpus_map("torus_bouquet.rg").genus() == 1);
  CHECK(corpus_map("genus2_bouquet.rg").genus() == 2);
  CHECK(corpus_map("theta_sphere.rg").genus() == 0);
  CHECK(corpus_map("weave_tait.rg").genus() == 1);
  CHECK(CombinatorialMap::point().genus() == 0);
  CHECK(CombinatorialMap::point().num_faces() == 1);
}

TEST_CASE("duals") {
  for (const auto& g : sample_maps()) {
    CombinatorialMap d = dual(g);
    CHECK(d.num_vertices() == g.num_faces());
    CHECK(d.num_faces() == g.num_vertices());
    CHECK(d.genus() == g.genus());
    CHECK(dual(d) == g);
  }
}

TEST_CASE("rg text round trip and errors") {
  for (const auto& g : sample_maps()) CHECK(parse_rg(to_rg(g)) == g);
  CHECK_THROWS_AS(parse_rg("vertex 0 0 1\nedge 0 0 1\n"), Error);
  CHECK_THROWS_AS(parse_rg("format rg 1\nvertex 0 0 1\nedge 0 0 7\n"), Error);
  CHECK_THROWS_AS(parse_rg("format rg 2\n"), Error);
}

TEST_CASE("isomorphism survives relabeling") {
  std::mt19937_64 rng(5);
  for (const auto& g : sample_maps()) CHECK(isomorphic(g, relabel(g, rng), false));
  CHECK_FALSE(isomorphic(corpus_map("torus_bouquet.rg"), corpus_map("theta_sphere.rg"), true));
}

TEST_CASE("deleting a bridge disconnects") {
  CombinatorialMap path = CombinatorialMap::build({{0}, {1, 2}, {3}}, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(delete_edge(path, 0), Error);
  CombinatorialMap g = corpus_map("torus_bouquet_curl.rg");
  CombinatorialMap h = delete_edge(g, 2);
  CHECK(h.num_edges() == 2);
  CHECK(isomorphic(h, corpus_map("torus_bouquet.rg"), false));
}

TEST_CASE("exact rank: 64-bit path agrees with rationals") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + trial % 6;
    int cols = 1 + (trial / 6) % 6;
    std::int64_t scale = trial % 3 == 0 ? (std::int64_t{1} << 40) : 3;
    std::uniform_int_distribution<std::int64_t> v(-scale, scale);
    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols));
    std::vector<std::vector<mpq_class>> q(rows, std::vector<mpq_class>(cols));
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        m[r][c] = v(rng);
        q[r][c] = mpq_class(mpz_class(std::to_string(m[r][c])));
      }
    }
    // force a dependent row sometimes
    if (rows > 1 && trial % 2 == 0) {
      for (int c = 0; c < cols; ++c) {
        m[rows - 1][c] = m[0][c];
        q[rows - 1][c] = q[0][c];
      }
    }
    CHECK(exact_rank(m) == oracle_rank(q));
    CHECK(exact_rank(q) == oracle_rank(q));
  }
}

TEST_CASE("homology context dimensions") {
  for (const auto& g : sample_maps()) {
    HomologyContext ctx(g);
    CHECK(ctx.h1_dim() == 2 * g.genus());
    CHECK(ctx.cycle_space_dim() == g.num_edges() - g.num_vertices() + 1);
    CHECK(ctx.boundary_rank() == g.num_faces() - 1);
    for (const Chain& f : ctx.face_boundaries()) {
      CHECK(ctx.is_cycle(f));
      for (const auto& x : ctx.chain_class(f)) CHECK(x == 0);
    }
  }
}

TEST_CASE("known spanning subgraphs") {
  CombinatorialMap g = corpus_map("torus_bouquet.rg");
  HomologyContext ctx(g);
  SubgraphProfile empty = subgraph_profile({&g, 0}, ctx);
  CHECK(empty.components == 1);
  CHECK(empty.s == 0);
  CHECK(empty.s_perp == 2);
  CHECK(empty.k == 0);
  // one essential loop: annulus neighborhood, annulus complement
  SubgraphProfile loop = subgraph_profile({&g, 1}, ctx);
  CHECK(loop.components == 1);
  CHECK(loop.k == 0);
  CHECK(loop.s == 0);
  CHECK(loop.s_perp == 0);
  SubgraphProfile full = subgraph_profile({&g, 3}, ctx);
  CHECK(full.s == 2);
  CHECK(full.s_perp == 0);
  CHECK(full.k == 0);
  // trivial loop: its cycle bounds a disk
  CombinatorialMap c = corpus_map("torus_bouquet_curl.rg");
  HomologyContext cc(c);
  CHECK(is_trivial_loop(2, cc));
  CHECK_FALSE(is_trivial_loop(0, cc));
  CHECK(subgraph_profile({&c, 4}, cc).k == 1);
}

TEST_CASE("subgraph identities, exhaustive") {
  for (const auto& g : sample_maps()) {
    if (g.num_edges() > 10) continue;
    HomologyContext ctx(g);
    const int genus = g.genus();
    for (EdgeMask h = 0; h < (EdgeMask{1} << g.num_edges()); ++h) {
      SubgraphProfile p = subgraph_profile({&g, h}, ctx);
      CAPTURE(to_rg(g));
      CAPTURE(h);
      CHECK(p.s % 2 == 0);
      CHECK(p.s_perp % 2 == 0);
      CHECK(p.k == oracle_kernel(g, h));
      CHECK(p.k + genus + p.s / 2 - p.s_perp / 2 == p.b1);
      CHECK(p.s / 2 + p.s_perp / 2 + p.boundary_rank == genus);
      CHECK(p.s_perp == 2 * (p.k + genus - p.b1) + p.s);
    }
  }
}

TEST_CASE("edge orientation does not matter") {
  std::mt19937_64 rng(17);
  for (const auto& g : sample_maps()) {
    if (g.num_edges() > 8) continue;
    std::vector<int> flip;
    for (int e = 0; e < g.num_edges(); ++e) {
      if (rng() % 2) flip.push_back(e);
    }
    CombinatorialMap r = reorient(g, flip);
    HomologyContext a(g);
    HomologyContext b(r);
    for (EdgeMask h = 0; h < (EdgeMask{1} << g.num_edges()); ++h) {
      CHECK(subgraph_profile({&g, h}, a) == subgraph_profile({&r, h}, b));
    }
  }
}

TEST_CASE("parallel edges") {
  CombinatorialMap theta = corpus_map("theta_sphere.rg");
  HomologyContext t(theta);
  CHECK(parallel(0, 1, t));
  CHECK(parallel(1, 2, t));
  CombinatorialMap bouquet = corpus_map("torus_bouquet.rg");
  HomologyContext b(bouquet);
  CHECK_FALSE(parallel(0, 1, b));
  CHECK(parallel(0, 0, b));
  CHECK_THROWS_AS(cycle_of_pair(0, 1, b), Error);
  CHECK_THROWS_AS(subgraph_profile({&theta, 1}, b), Error);
}
