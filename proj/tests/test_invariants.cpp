#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "support.hpp"

using namespace slinv;
using namespace slinv::test;

namespace {

const std::vector<std::string> kBig{"X", "Y", "U", "V"};

std::array<int, 11> data_tuple(const SurfaceLinkDiagram& d) {
  TaitData td = tait_data(d);
  return {d.genus(),        td.reduced_a.mu, td.reduced_a.lambda, td.reduced_a.gamma,
          td.reduced_b.mu,  td.reduced_b.lambda, td.reduced_b.gamma, d.num_crossings(),
          writhe(d),        td.n,            td.N};
}

/// Writhe of a PD code whose labels increase along each component.
int pd_writhe(const std::vector<std::array<int, 4>>& pd) {
  int w = 0;
  for (const auto& x : pd) {
    int j = x[1];
    int l = x[3];
    w += (j - l == 1 || l - j > 1) ? 1 : -1;
  }
  return w;
}

}  // namespace

TEST_CASE("square weave golden values") {
  SurfaceLinkDiagram d = corpus_diagram("weave2x2.sld");
  TaitPair t = tait_graphs(d, checkerboard(d));
  CHECK(big_P(t.a) == LaurentPoly::parse("V*X + 6 + U*Y + 3*V + 3*U", kBig));
  CHECK(jones_krushkal_statesum(d) == JKPoly::parse("-t^(-9/2) + 3*t^(-7/2) + 3*t^(-5/2) - t^(-3/2) + 6*z*t^-3"));
  CHECK(tau(d) == 4);
  CHECK(data_tuple(d) == std::array<int, 11>{1, 3, 0, 0, 3, 0, 0, 4, -4, 1, 1});
}

TEST_CASE("vk4.106 has trivial Jones specialization") {
  SurfaceLinkDiagram d = corpus_diagram("vk4_106.sld");
  TaitPair t = tait_graphs(d, checkerboard(d));
  CHECK(big_P(t.a) == LaurentPoly::parse("U*X + U*Y + V*X + V + 2*X + U + Y + 2", kBig));
  JKPoly jk = jones_krushkal_statesum(d);
  CHECK(jk == JKPoly::parse("-t^-3 + t^-2 - 1 - z*t^(-5/2) + 2*z*t^(-3/2) - 2*z*t^(-1/2)"));
  CHECK(jones_specialization(jk) == JKPoly::constant(1));
  CHECK(tau(d) == 3);
  CHECK(data_tuple(d) == std::array<int, 11>{1, 1, 2, 1, 1, 1, 0, 4, -2, 1, 1});
}

TEST_CASE("vk4.105 has genus-generating loops in G_B") {
  SurfaceLinkDiagram d = corpus_diagram("vk4_105.sld");
  TaitPair t = tait_graphs(d, checkerboard(d));
  CHECK(big_P(t.a) == LaurentPoly::parse("V*X^2 + U + V + 2*X + 2*V*X + 2", kBig));
  CHECK(jones_krushkal_statesum(d) ==
        JKPoly::parse("t^-4 + t^-3 - 2*t^-2 + t^-1 + 2*z*t^(-7/2) - 2*z*t^(-5/2)"));
  CHECK(tau(d) == 2);
  CHECK(data_tuple(d) == std::array<int, 11>{1, 2, 0, 0, 0, 2, 1, 4, -4, 2, 0});
}

TEST_CASE("parallel Krushkal sweep equals the reference sum") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 60; ++i) {
    CombinatorialMap g = random_map(rng, 1 + i % 9, 0, 3);
    CHECK(krushkal(g) == krushkal_reference(g));
  }
  for (const auto& n : corpus_map_names()) {
    CombinatorialMap g = corpus_map(n);
    CHECK(krushkal(g) == krushkal_reference(g));
  }
}

TEST_CASE("parallel state sweep equals the reference sum") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 40; ++i) {
    SurfaceLinkDiagram d = random_torus_diagram(rng, 8);
    d = switch_crossings(d, rng() & ((std::uint64_t{1} << d.num_crossings()) - 1));
    CHECK(jones_krushkal_statesum(d) == jones_krushkal_statesum_reference(d));
  }
}

TEST_CASE("state sum and Tait-graph route agree") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 40; ++i) {
    SurfaceLinkDiagram d = random_torus_diagram(rng, 8);
    CHECK(jones_krushkal_via_P(d) == jones_krushkal_statesum(d));
  }
  for (const auto& n : corpus_diagram_names()) {
    SurfaceLinkDiagram d = corpus_diagram(n);
    if (!is_checkerboard_colorable(d)) {
      CHECK_THROWS_AS(jones_krushkal_statesum(d), Error);
      continue;
    }
    CHECK(jones_krushkal_via_P(d) == jones_krushkal_statesum(d));
  }
  SurfaceLinkDiagram w = switch_crossings(corpus_diagram("weave2x2.sld"), 1);
  CHECK_THROWS_AS(jones_krushkal_via_P(w), Error);
}

TEST_CASE("graph identities on random maps") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 40; ++i) {
    CombinatorialMap g = random_map(rng, 1 + i % 7, 0, 2);
    if (i % 3 == 0) g = with_trivial_loop(g);
    LaurentPoly P = big_P(g);
    std::vector<mpq_class> pt{2, 2, 1, 1};
    CHECK(P.evaluate(pt) == mpq_class(mpz_class(1) << g.num_edges()));
    CHECK(duality_check(g));
    CHECK(tutte_check(g));
    if (i % 3 == 0) CHECK(loop_deletion_check(g, g.num_edges() - 1));
  }
  CHECK_THROWS_AS(loop_deletion_check(corpus_map("torus_bouquet.rg"), 0), Error);
}

TEST_CASE("Whitney rank polynomial of the theta graph") {
  CHECK(whitney_rank(corpus_map("theta_sphere.rg")) == LaurentPoly::parse("x + 3 + 3*y + y^2", {"x", "y"}));
}

TEST_CASE("reduced data does not depend on the class representative") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 30; ++i) {
    CombinatorialMap g = random_map(rng, 2 + i % 7, 1, 2);
    HomologyContext ctx(g);
    ReducedGraphData base = reduce(g, ctx);
    for (int rot = 1; rot < 4; ++rot) {
      ReducedGraphData r = reduce(g, ctx, rot);
      CHECK(r.lambda == base.lambda);
      CHECK(r.mu == base.mu);
      CHECK(r.gamma == base.gamma);
      CHECK(r.has_3petal == base.has_3petal);
      CHECK(r.kept_edges.size() == base.kept_edges.size());
    }
    for (const Verdict& v : verify_krushkal_coeffs(g)) CHECK_MESSAGE(v.status != Status::Fail, v.name, v.detail);
  }
}

TEST_CASE("classical knots against an independent bracket") {
  for (const char* name : {"trefoil.sld", "figure8.sld"}) {
    CAPTURE(name);
    SurfaceLinkDiagram d = corpus_diagram(name);
    JKPoly jk = jones_krushkal_statesum(d);
    CHECK_FALSE(jk.has_z_terms());
    auto [pd, w] = pd_of(d);
    CHECK(jk == pd_jones(pd, w));
    CHECK(jones_specialization(jk) == jk);
  }
  CHECK(jones_krushkal_statesum(corpus_diagram("trefoil.sld")) == JKPoly::parse("t + t^3 - t^4"));
  CHECK(jones_krushkal_statesum(corpus_diagram("figure8.sld")) == JKPoly::parse("t^-2 - t^-1 + 1 - t + t^2"));
}

TEST_CASE("classical knots against tabulated PD codes") {
  std::vector<std::array<int, 4>> trefoil{{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}};
  std::vector<std::array<int, 4>> figure8{{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}};
  JKPoly t = pd_jones(trefoil, pd_writhe(trefoil));
  JKPoly ours = jones_krushkal_statesum(corpus_diagram("trefoil.sld"));
  CHECK((t == ours || t == ours.invert_t()));
  CHECK(pd_jones(figure8, pd_writhe(figure8)) == jones_krushkal_statesum(corpus_diagram("figure8.sld")));
}

TEST_CASE("twist number and the Dasbach-Lin relation") {
  for (const char* name : {"trefoil.sld", "figure8.sld"}) {
    SurfaceLinkDiagram d = corpus_diagram(name);
    int t = tau(d);
    CHECK(t == oracle_twist_regions(d));
    CHECK(t == tau_formula(d));
    CHECK(t == subextremal_sum(jones_krushkal_statesum(d)));
  }
  CHECK_THROWS_AS(tau(corpus_diagram("curl.sld")), Error);
}

TEST_CASE("coefficient theorems on the corpus") {
  for (const char* name : {"weave2x2.sld", "vk4_106.sld", "vk4_105.sld", "trefoil.sld", "figure8.sld"}) {
    CAPTURE(name);
    SurfaceLinkDiagram d = corpus_diagram(name);
    TaitData td = tait_data(d);
    JKPoly jk = jones_krushkal_statesum(d);
    CHECK(verify_eq_jk(d, jk, td).status == Status::Pass);
    CHECK(verify_span(d, jk).status == Status::Pass);
    Verdict sub = verify_subextremal(d, jk, tau(d));
    CHECK(sub.status != Status::Fail);
  }
  SurfaceLinkDiagram curl = corpus_diagram("curl.sld");
  CHECK_THROWS_AS(verify_span(curl, jones_krushkal_statesum(curl), true), Error);
  CHECK(verify_span(curl, jones_krushkal_statesum(curl)).status == Status::Skipped);
}

TEST_CASE("volume bounds") {
  VolumeBounds b = volume_bounds(4, 1, 0);
  CHECK(std::abs(b.lower - 7.32772) < 1e-4);
  CHECK(std::abs(b.upper - 40.5976) < 1e-4);
  CHECK(b.contains(4 * kVOct));
  CHECK(b.contains(b.lower));
  CHECK_FALSE(b.contains(b.upper));
  VolumeBounds g2 = volume_bounds(3, 2, -2);
  CHECK(std::abs(g2.lower - kVOct / 2 * 9) < 1e-12);
  CHECK(std::abs(g2.upper - 12 * kVOct * 3) < 1e-12);
  CHECK_THROWS_AS(volume_bounds(2, 0, 2), Error);
}

TEST_CASE("caps") {
  std::mt19937_64 rng(61);
  CombinatorialMap g = random_map(rng, 6, 0, 3);
  CHECK_THROWS_AS(krushkal(g, 5), Error);
  CHECK_THROWS_AS(jones_krushkal_statesum(corpus_diagram("weave2x2.sld"), 3), Error);
  CHECK_THROWS_AS(full_report(corpus_diagram("weave2x2.sld"), 3), Error);
}

TEST_CASE("reports are deterministic and complete") {
  for (const auto& n : corpus_diagram_names()) {
    SurfaceLinkDiagram d = corpus_diagram(n);
    InvariantReport r = full_report(d);
    CHECK(r.to_json().dump() == full_report(d).to_json().dump());
    for (const Verdict& v : r.verdicts) CHECK_MESSAGE(v.status != Status::Fail, n, ": ", v.name, " ", v.detail);
  }
  InvariantReport w = full_report(corpus_diagram("weave2x2.sld"));
  nlohmann::json j = w.to_json();
  CHECK(j["tau"] == 4);
  CHECK(j["J_K"]["text"] == "-t^(-9/2) + 3*t^(-7/2) + 3*t^(-5/2) - t^(-3/2) + 6*z*t^-3");
  CHECK(j["data"]["w"] == -4);
  for (const auto& n : corpus_map_names()) {
    KrushkalReport r = krushkal_report(corpus_map(n));
    for (const Verdict& v : r.verdicts) CHECK_MESSAGE(v.status != Status::Fail, n, ": ", v.name);
  }
}
