#include <bit>

#include "slinv/error.hpp"
#include "slinv/invariants.hpp"

namespace slinv {

namespace {

/// Deletion-contraction is exponential without a cheap canonical form.
constexpr int kTutteEdgeLimit = 16;
/// Reference profiles for the state bridge use rational elimination.
constexpr int kBridgeCrossingLimit = 12;

nlohmann::json verdicts_json(const std::vector<Verdict>& verdicts) {
  nlohmann::json out = nlohmann::json::array();
  for (const Verdict& v : verdicts) out.push_back({{"name", v.name}, {"status", to_string(v.status)}, {"detail", v.detail}});
  return out;
}

nlohmann::json reduced_json(const CombinatorialMap& g, const ReducedGraphData& r) {
  return {{"vertices", g.num_vertices()},   {"edges", g.num_edges()},
          {"genus", g.genus()},             {"lambda", r.lambda},
          {"mu", r.mu},                     {"gamma", r.gamma},
          {"trivial_loops", r.trivial_loops_deleted}, {"has_3petal", r.has_3petal},
          {"kept_edges", r.kept_edges}};
}

/// Graph-level checks shared by maps and Tait graphs.
void graph_verdicts(const CombinatorialMap& g, const LaurentPoly& p, const LaurentPoly& P,
                    const ReducedGraphData& red, const std::string& suffix, int cap, std::vector<Verdict>& out) {
  for (Verdict v : verify_krushkal_coeffs(g, P, red)) {
    v.name += suffix;
    out.push_back(std::move(v));
  }
  std::vector<mpq_class> point{2, 2, 1, 1};
  mpq_class count = P.evaluate(point);
  mpz_class expected = mpz_class(1) << g.num_edges();
  out.push_back(Verdict::check("subgraph-count" + suffix, count == expected,
                               "P(2,2,1,1) = " + count.get_str() + ", 2^E = " + expected.get_str()));
  if (g.num_edges() > kTutteEdgeLimit) {
    out.push_back(Verdict::skipped("tutte" + suffix, "more than " + std::to_string(kTutteEdgeLimit) + " edges"));
  } else {
    bool ok = whitney_rank(g) == tutte_specialization(p, g.genus());
    out.push_back(Verdict::check("tutte" + suffix, ok, "R_G(x,y) vs y^g p_G(x,y,y,1/y)"));
  }
  out.push_back(Verdict::check("duality" + suffix, duality_check(g, cap), "p_G(x,y,u,v) vs p_G*(y,x,v,u)"));
  HomologyContext ctx(g);
  int trivial = -1;
  for (int e = 0; e < g.num_edges() && trivial < 0; ++e) {
    if (is_trivial_loop(e, ctx)) trivial = e;
  }
  if (trivial < 0) {
    out.push_back(Verdict::skipped("loop-deletion" + suffix, "no null-homologous loop"));
  } else {
    out.push_back(Verdict::check("loop-deletion" + suffix, loop_deletion_check(g, trivial, cap),
                                 "edge " + std::to_string(trivial)));
  }
}

/// |s| and r(s) of every state against boundary data of the A-smoothed
/// spanning subgraph of G_A.
Verdict state_bridge(const SurfaceLinkDiagram& d, const TaitData& td) {
  if (d.num_crossings() > kBridgeCrossingLimit) {
    return Verdict::skipped("state-bridge", "more than " + std::to_string(kBridgeCrossingLimit) + " crossings");
  }
  HomologyContext ctx(td.tait.a);
  int mismatches = 0;
  std::string first;
  enumerate_states(d, [&](const State& s) {
    SubgraphProfile p = subgraph_profile({&ctx.map(), s.choice}, ctx);
    if (p.boundary_count != s.size() || p.boundary_rank != s.r) {
      if (mismatches++ == 0) first = "state " + std::to_string(s.choice);
    }
  });
  return Verdict::check("state-bridge", mismatches == 0,
                        mismatches == 0 ? "all " + std::to_string(std::uint64_t{1} << d.num_crossings()) + " states"
                                        : std::to_string(mismatches) + " mismatches, first " + first);
}

}  // namespace

nlohmann::json KrushkalReport::to_json() const {
  return {{"genus", genus},
          {"vertices", vertices},
          {"edges", edges},
          {"p", p.to_json()},
          {"P", P.to_json()},
          {"reduced", {{"lambda", reduced.lambda},
                       {"mu", reduced.mu},
                       {"gamma", reduced.gamma},
                       {"trivial_loops", reduced.trivial_loops_deleted},
                       {"has_3petal", reduced.has_3petal},
                       {"kept_edges", reduced.kept_edges}}},
          {"verdicts", verdicts_json(verdicts)}};
}

KrushkalReport krushkal_report(const CombinatorialMap& g, int cap) {
  KrushkalReport r;
  r.genus = g.genus();
  r.vertices = g.num_vertices();
  r.edges = g.num_edges();
  r.p = krushkal(g, cap);
  r.P = big_P(r.p);
  r.reduced = reduce(g, HomologyContext(g));
  graph_verdicts(g, r.p, r.P, r.reduced, "", cap, r.verdicts);
  return r;
}

InvariantReport full_report(const SurfaceLinkDiagram& d, int cap, bool twist_reduced) {
  if (d.num_crossings() > cap || d.num_crossings() >= kHardCap) {
    throw Error(ErrorCode::CrossingCapExceeded,
                std::to_string(d.num_crossings()) + " crossings, cap " + std::to_string(cap));
  }
  InvariantReport r;
  r.crossings = d.num_crossings();
  r.components = d.num_components();
  r.genus = d.genus();
  r.writhe = writhe(d);
  r.colorable = is_checkerboard_colorable(d);
  r.alternating = is_alternating(d);
  r.flags = reduced_flags(d);
  r.twist_regions = twist_regions(d);
  auto& v = r.verdicts;

  if (!r.colorable) {
    r.notes.push_back("NotCheckerboardColorable: no Tait graphs and no J_K");
    return r;
  }
  r.jk = jones_krushkal_statesum(d, cap);
  r.jones = jones_specialization(*r.jk);
  r.tait = tait_data(d);
  const TaitData& td = *r.tait;
  r.p_a = krushkal(td.tait.a, cap);
  r.P_a = big_P(*r.p_a);
  LaurentPoly p_b = krushkal(td.tait.b, cap);
  r.P_b = big_P(p_b);

  graph_verdicts(td.tait.a, *r.p_a, *r.P_a, td.reduced_a, " (G_A)", cap, v);
  graph_verdicts(td.tait.b, p_b, *r.P_b, td.reduced_b, " (G_B)", cap, v);
  v.push_back(Verdict::check("tait-duality", isomorphic(dual(td.tait.a), td.tait.b, false),
                             "G_B isomorphic to the dual of G_A"));
  const int c = d.num_crossings();
  const int g = d.genus();
  v.push_back(Verdict::check("tait-euler", td.tait.a.num_vertices() + td.tait.b.num_vertices() == c + 2 - 2 * g,
                             "|V_A| + |V_B| = " + std::to_string(td.tait.a.num_vertices() + td.tait.b.num_vertices()) +
                                 ", c + 2 - 2g = " + std::to_string(c + 2 - 2 * g)));

  if (!r.alternating) {
    r.notes.push_back("NotAlternating: Tait-graph route, twist number and coefficient theorems do not apply");
    for (const char* name : {"route-equality", "state-bridge", "twist-formula", "eq-jk", "span", "subextremal"}) {
      v.push_back(Verdict::skipped(name, "HypothesisViolated: diagram is not alternating"));
    }
    return r;
  }
  JKPoly via = jones_krushkal_via_P(d, *r.P_a);
  v.push_back(Verdict::check("route-equality", via == *r.jk, "state sum vs Tait-graph substitution"));
  v.push_back(state_bridge(d, td));

  if (!r.flags.nugatory_free) {
    r.notes.push_back("NotReduced: diagram has a nugatory crossing");
    for (const char* name : {"twist-formula", "eq-jk", "span", "subextremal"}) {
      v.push_back(Verdict::skipped(name, "HypothesisViolated: diagram has a nugatory crossing"));
    }
    return r;
  }
  r.tau = tau(d);
  r.tau_formula = td.reduced_a.lambda + td.reduced_a.mu + td.reduced_b.lambda + td.reduced_b.mu - 2 * g;
  v.push_back(Verdict::check("twist-formula", *r.tau == *r.tau_formula,
                             "union-find " + std::to_string(*r.tau) + ", lambda+mu+lambda_bar+mu_bar-2g " +
                                 std::to_string(*r.tau_formula)));
  v.push_back(verify_eq_jk(d, *r.jk, td));
  v.push_back(verify_span(d, *r.jk));
  v.push_back(verify_subextremal(d, *r.jk, *r.tau));
  if (!r.flags.strongly_reduced) {
    v.push_back(Verdict::skipped("twist-regions", "HypothesisViolated: diagram is not strongly reduced"));
  } else if (!twist_reduced) {
    v.push_back(Verdict::skipped("twist-regions", "twist-reducedness not asserted for this input"));
  } else {
    bool ok = *r.tau <= r.twist_regions && r.twist_regions <= 2 * *r.tau;
    v.push_back(Verdict::check("twist-regions", ok,
                               "tau " + std::to_string(*r.tau) + " <= t_F " + std::to_string(r.twist_regions) +
                                   " <= 2 tau"));
  }
  if (g >= 1) {
    r.bounds = volume_bounds(*r.tau, g, 2 - 2 * g);
    if (!r.flags.strongly_reduced) {
      r.notes.push_back("volume bounds assume a strongly reduced diagram; this one is not");
    }
    if (td.reduced_a.gamma > 0 || td.reduced_b.gamma > 0) {
      r.notes.push_back("genus-generating loops present: tau is not read off the J_K coefficients alone");
    }
  }
  return r;
}

nlohmann::json InvariantReport::to_json() const {
  nlohmann::json j;
  j["crossings"] = crossings;
  j["components"] = components;
  j["genus"] = genus;
  j["writhe"] = writhe;
  j["colorable"] = colorable;
  j["alternating"] = alternating;
  j["reduced"] = {{"cellular", flags.cellular},
                  {"nugatory_free", flags.nugatory_free},
                  {"strongly_reduced", flags.strongly_reduced}};
  j["twist_regions"] = twist_regions;
  if (tait) {
    j["tait"] = {{"G_A", reduced_json(tait->tait.a, tait->reduced_a)},
                 {"G_B", reduced_json(tait->tait.b, tait->reduced_b)}};
    j["data"] = {{"g", genus},
                 {"mu", tait->reduced_a.mu},
                 {"lambda", tait->reduced_a.lambda},
                 {"gamma", tait->reduced_a.gamma},
                 {"mu_bar", tait->reduced_b.mu},
                 {"lambda_bar", tait->reduced_b.lambda},
                 {"gamma_bar", tait->reduced_b.gamma},
                 {"c", crossings},
                 {"w", writhe},
                 {"n", tait->n},
                 {"N", tait->N}};
  }
  if (p_a) j["p_A"] = p_a->to_json();
  if (P_a) j["P_A"] = P_a->to_json();
  if (P_b) j["P_B"] = P_b->to_json();
  if (jk) j["J_K"] = jk->to_json();
  if (jones) j["jones"] = jones->to_json();
  j["tau"] = tau ? nlohmann::json(*tau) : nlohmann::json(nullptr);
  j["tau_formula"] = tau_formula ? nlohmann::json(*tau_formula) : nlohmann::json(nullptr);
  if (bounds) {
    j["volume_bounds"] = {{"lower", bounds->lower},
                          {"upper", bounds->upper},
                          {"lower_closed", bounds->lower_closed},
                          {"upper_closed", bounds->upper_closed}};
  }
  j["verdicts"] = verdicts_json(verdicts);
  j["notes"] = notes;
  return j;
}

}  // namespace slinv
