// Exhaustive search for small diagrams with prescribed invariants.
//
//   slinv_search tait --edges 4 --genus 1 --P "V*X + 6 + ..." [--writhe w] [--components k]
//       Enumerates rotation systems with the given edge count and genus,
//       keeps those whose P_G matches, and prints the medial diagram for
//       every component orientation with the requested writhe.
//   slinv_search states --crossings 2 --genus 1 --sA 2 --sB 1 --rA 1 --rB 1
//       Enumerates slot matchings and prints diagrams whose all-A and all-B
//       states have the given curve counts and ranks.

#include <algorithm>
#include <iostream>
#include <numeric>
#include <optional>

#include "CLI11.hpp"
#include "slinv/error.hpp"
#include "slinv/invariants.hpp"

using namespace slinv;

namespace {

std::optional<CombinatorialMap> try_build(const std::vector<int>& sigma, int edges) {
  std::vector<std::vector<HalfEdge>> rots;
  std::vector<bool> seen(sigma.size(), false);
  for (int h = 0; h < static_cast<int>(sigma.size()); ++h) {
    if (seen[h]) continue;
    std::vector<HalfEdge> rot;
    for (int x = h; !seen[x]; x = sigma[x]) {
      seen[x] = true;
      rot.push_back(x);
    }
    rots.push_back(std::move(rot));
  }
  std::vector<std::array<HalfEdge, 2>> es;
  for (int e = 0; e < edges; ++e) es.push_back({2 * e, 2 * e + 1});
  try {
    return CombinatorialMap::build(std::move(rots), std::move(es));
  } catch (const Error&) {
    return std::nullopt;
  }
}

SurfaceLinkDiagram flip_components(const SurfaceLinkDiagram& d, unsigned mask) {
  std::vector<Arc> arcs = d.arcs();
  for (int i = 0; i < d.num_components(); ++i) {
    if (((mask >> i) & 1U) == 0) continue;
    for (int a : d.components()[i]) std::swap(arcs[a].tail, arcs[a].head);
  }
  return SurfaceLinkDiagram::from_arcs(d.num_crossings(), std::move(arcs));
}

void describe(const SurfaceLinkDiagram& d) {
  TaitData td = tait_data(d);
  std::cout << to_sld(d);
  std::cout << "# data (g,mu,lambda,gamma,mu_bar,lambda_bar,gamma_bar,c,w,n,N) = (" << d.genus() << ','
            << td.reduced_a.mu << ',' << td.reduced_a.lambda << ',' << td.reduced_a.gamma << ','
            << td.reduced_b.mu << ',' << td.reduced_b.lambda << ',' << td.reduced_b.gamma << ','
            << d.num_crossings() << ',' << writhe(d) << ',' << td.n << ',' << td.N << ")\n";
  std::cout << "# components " << d.num_components() << "\n";
  std::cout << "# J_K = " << jones_krushkal_statesum(d).to_string() << "\n";
  if (reduced_flags(d).nugatory_free) std::cout << "# tau = " << tau(d) << "\n";
  std::cout << "# P_A = " << big_P(krushkal(td.tait.a)).to_string() << "\n\n";
}

int search_tait(int edges, int genus, const std::string& target_text, std::optional<int> target_w,
                std::optional<int> target_components, int limit) {
  const LaurentPoly target = LaurentPoly::parse(target_text, {"X", "Y", "U", "V"});
  std::vector<int> sigma(2 * edges);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<CombinatorialMap> found;
  long tried = 0;
  do {
    ++tried;
    auto g = try_build(sigma, edges);
    if (!g || g->genus() != genus) continue;
    if (big_P(krushkal(*g)) != target) continue;
    bool dup = std::any_of(found.begin(), found.end(), [&](const auto& f) { return isomorphic(f, *g, false); });
    if (dup) continue;
    found.push_back(*g);
    SurfaceLinkDiagram d = medial_diagram(*g);
    if (target_components && d.num_components() != *target_components) continue;
    std::cout << "# Tait graph\n" << to_rg(*g);
    for (unsigned mask = 0; mask < (1U << d.num_components()); ++mask) {
      SurfaceLinkDiagram o = flip_components(d, mask);
      if (target_w && writhe(o) != *target_w) continue;
      describe(o);
      break;
    }
    if (static_cast<int>(found.size()) >= limit) break;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  std::cerr << tried << " rotation systems, " << found.size() << " matching maps\n";
  return 0;
}

/// All perfect matchings of 4c slots, each producing a diagram.
void matchings(std::vector<int>& open, std::vector<Arc>& arcs, int c,
               const std::function<void(const std::vector<Arc>&)>& visit) {
  if (open.empty()) {
    visit(arcs);
    return;
  }
  int a = open.front();
  for (std::size_t i = 1; i < open.size(); ++i) {
    int b = open[i];
    std::vector<int> rest;
    for (std::size_t j = 1; j < open.size(); ++j) {
      if (j != i) rest.push_back(open[j]);
    }
    arcs.push_back({{a / 4, a % 4}, {b / 4, b % 4}});
    matchings(rest, arcs, c, visit);
    arcs.pop_back();
  }
}

int search_states(int crossings, int genus, int sA, int sB, int rA, int rB) {
  std::vector<int> open(4 * crossings);
  std::iota(open.begin(), open.end(), 0);
  std::vector<Arc> arcs;
  int hits = 0;
  matchings(open, arcs, crossings, [&](const std::vector<Arc>& m) {
    std::optional<SurfaceLinkDiagram> d;
    try {
      d = SurfaceLinkDiagram::from_arcs(crossings, m, true);
    } catch (const Error&) {
      return;
    }
    if (d->genus() != genus) return;
    State a = state_at(*d, (std::uint64_t{1} << crossings) - 1);
    State b = state_at(*d, 0);
    if (a.size() != sA || b.size() != sB || a.r != rA || b.r != rB) return;
    ++hits;
    std::cout << to_sld(*d) << "# colorable " << is_checkerboard_colorable(*d) << ", k(s_A) " << a.k
              << ", k(s_B) " << b.k << ", components " << d->num_components() << "\n\n";
  });
  std::cerr << hits << " matching diagrams\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"search small surface diagrams by invariants"};
  app.require_subcommand(1);

  int edges = 4;
  int genus = 1;
  std::string P;
  std::optional<int> w;
  std::optional<int> components;
  int limit = 20;
  auto* tait = app.add_subcommand("tait", "search Tait graphs by P_G");
  tait->add_option("--edges", edges);
  tait->add_option("--genus", genus);
  tait->add_option("--P", P)->required();
  tait->add_option("--writhe", w);
  tait->add_option("--components", components);
  tait->add_option("--limit", limit);

  int crossings = 2;
  int sA = 0;
  int sB = 0;
  int rA = 0;
  int rB = 0;
  auto* states = app.add_subcommand("states", "search slot matchings by extreme states");
  states->add_option("--crossings", crossings);
  states->add_option("--genus", genus);
  states->add_option("--sA", sA)->required();
  states->add_option("--sB", sB)->required();
  states->add_option("--rA", rA)->required();
  states->add_option("--rB", rB)->required();

  CLI11_PARSE(app, argc, argv);
  if (*tait) return search_tait(edges, genus, P, w, components, limit);
  return search_states(crossings, genus, sA, sB, rA, rB);
}
