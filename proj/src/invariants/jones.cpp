#include <algorithm>
#include <map>
#include <numeric>

#include "slinv/error.hpp"
#include "slinv/invariants.hpp"
#include "sweeps.hpp"

namespace slinv {

namespace {

void check_crossings(const SurfaceLinkDiagram& d, int cap) {
  if (d.num_crossings() > cap || d.num_crossings() >= kHardCap) {
    throw Error(ErrorCode::CrossingCapExceeded,
                std::to_string(d.num_crossings()) + " crossings, cap " + std::to_string(cap));
  }
}

void require_colorable(const SurfaceLinkDiagram& d) {
  if (!is_checkerboard_colorable(d)) {
    throw Error(ErrorCode::NotCheckerboardColorable, "face adjacency graph is not bipartite");
  }
}

JKPoly writhe_factor(int w) { return JKPoly::monomial(w % 2 == 0 ? 1 : -1, 3 * w); }

/// Sum of count * t^{(b-a)/4} d^{k-1} z^r over (b, k, r) buckets.
JKPoly bracket_from(const std::map<std::array<int, 3>, mpz_class>& buckets, int c) {
  std::vector<JKPoly> dpow{JKPoly::constant(1)};
  JKPoly sum;
  for (const auto& [key, count] : buckets) {
    auto [b, k, r] = key;
    if (k < 1) throw std::logic_error("state with k = 0 on a colorable diagram");
    while (static_cast<int>(dpow.size()) < k) dpow.push_back(dpow.back() * JKPoly::loop_value());
    sum += JKPoly::monomial(count, b - (c - b), r) * dpow[k - 1];
  }
  return sum;
}

}  // namespace

JKPoly jones_krushkal_statesum(const SurfaceLinkDiagram& d, int cap) {
  check_crossings(d, cap);
  require_colorable(d);
  std::map<std::array<int, 3>, mpz_class> buckets;
  for (const auto& [key, count] : detail::state_histogram(d)) buckets[key] = static_cast<long>(count);
  return writhe_factor(writhe(d)) * bracket_from(buckets, d.num_crossings());
}

JKPoly jones_krushkal_statesum_reference(const SurfaceLinkDiagram& d, int cap) {
  check_crossings(d, cap);
  require_colorable(d);
  std::map<std::array<int, 3>, mpz_class> buckets;
  enumerate_states(
      d, [&](const State& s) { buckets[{s.b, s.k, s.r}] += 1; }, cap);
  return writhe_factor(writhe(d)) * bracket_from(buckets, d.num_crossings());
}

JKPoly jones_krushkal_via_P(const SurfaceLinkDiagram& d, const LaurentPoly& P_A) {
  require_colorable(d);
  if (!is_alternating(d)) throw Error(ErrorCode::NotAlternating, "the Tait-graph route needs an alternating diagram");
  const int w = writhe(d);
  const int g = d.genus();
  const int c = d.num_crossings();
  const Coloring col = checkerboard(d);
  const int n = col.num_shaded() - 1;
  // X -> -t, Y -> -1/t, U -> 1/(z sqrt t), V -> sqrt t / z
  const std::vector<JKMonomial> images{{-1, 4, 0}, {-1, -4, 0}, {1, -2, -1}, {1, 2, -1}};
  JKPoly prefactor = JKPoly::monomial(w % 2 == 0 ? 1 : -1, 3 * w - 2 * g - 2 * n + c, g);
  return prefactor * substitute_monomials(P_A, images);
}

JKPoly jones_krushkal_via_P(const SurfaceLinkDiagram& d, int cap) {
  check_crossings(d, cap);
  require_colorable(d);
  TaitPair t = tait_graphs(d, checkerboard(d));
  return jones_krushkal_via_P(d, big_P(krushkal(t.a, cap)));
}

JKPoly jones_specialization(const JKPoly& jk) { return jk.substitute_z(JKPoly::loop_value()); }

// ---------------------------------------------------------------------------
// Twist number

TaitData tait_data(const SurfaceLinkDiagram& d) {
  TaitData td;
  td.coloring = checkerboard(d);
  td.tait = tait_graphs(d, td.coloring);
  td.reduced_a = reduce(td.tait.a, HomologyContext(td.tait.a));
  td.reduced_b = reduce(td.tait.b, HomologyContext(td.tait.b));
  td.n = td.tait.a.num_vertices() - 1;
  td.N = td.tait.b.num_vertices() - 1;
  return td;
}

namespace {

void require_reduced_alternating(const SurfaceLinkDiagram& d) {
  if (!is_alternating(d)) throw Error(ErrorCode::NotAlternating, "diagram is not alternating");
  if (!reduced_flags(d).nugatory_free) throw Error(ErrorCode::NotReduced, "diagram has a nugatory crossing");
}

}  // namespace

int tau(const SurfaceLinkDiagram& d) {
  require_reduced_alternating(d);
  const int c = d.num_crossings();
  TaitPair t = tait_graphs(d, checkerboard(d));
  HomologyContext ca(t.a);
  HomologyContext cb(t.b);
  std::vector<int> parent(c);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int classes = c;
  for (int e = 0; e < c; ++e) {
    for (int f = e + 1; f < c; ++f) {
      if (root(e) == root(f)) continue;
      if (parallel(e, f, ca) || parallel(e, f, cb)) {
        parent[root(f)] = root(e);
        --classes;
      }
    }
  }
  return classes;
}

int tau_formula(const SurfaceLinkDiagram& d) {
  require_reduced_alternating(d);
  TaitData td = tait_data(d);
  return td.reduced_a.lambda + td.reduced_a.mu + td.reduced_b.lambda + td.reduced_b.mu - 2 * d.genus();
}

// ---------------------------------------------------------------------------
// Coefficient checks

std::map<std::pair<int, int>, mpz_class> eq_jk_expression(const SurfaceLinkDiagram& d, const TaitData& td) {
  const int w = writhe(d);
  const int c = d.num_crossings();
  const int g = d.genus();
  const int n = td.n;
  const ReducedGraphData& a = td.reduced_a;
  const ReducedGraphData& b = td.reduced_b;
  const int outer_sign = (w + n) % 2 == 0 ? 1 : -1;
  const int inner_sign = c % 2 == 0 ? 1 : -1;
  const int shift = 3 * w + 2 * n + c;
  std::map<std::pair<int, int>, mpz_class> expr;
  auto put = [&](int quarters, int z, long coeff) { expr[{quarters + shift, z}] += outer_sign * coeff; };
  put(4 * (g - c) + 2, 1, inner_sign * b.lambda);
  put(4 * (g - c) + 4, 0, -inner_sign * (b.mu - b.gamma));
  put(-4, 0, -(a.mu - a.gamma));
  put(-2, 1, a.lambda);
  return expr;
}

namespace {

Verdict hypothesis(const char* name, const std::string& why, bool strict) {
  if (strict) throw Error(ErrorCode::HypothesisViolated, why);
  return Verdict::skipped(name, "HypothesisViolated: " + why);
}

std::string render_key(int quarters, int z) {
  return (z == 0 ? std::string() : z == 1 ? "z*" : "z^" + std::to_string(z) + "*") + render_t_power(quarters);
}

}  // namespace

Verdict verify_eq_jk(const SurfaceLinkDiagram& d, const JKPoly& jk, const TaitData& td, bool strict) {
  const char* name = "eq-jk";
  if (!is_alternating(d)) return hypothesis(name, "diagram is not alternating", strict);
  if (!reduced_flags(d).nugatory_free) return hypothesis(name, "diagram has a nugatory crossing", strict);
  if (td.reduced_a.has_3petal || td.reduced_b.has_3petal) {
    return hypothesis(name, "a Tait graph has 3-petal loops", strict);
  }
  bool ok = true;
  std::string detail;
  for (const auto& [key, expected] : eq_jk_expression(d, td)) {
    mpz_class got = jk.coefficient(key.first, key.second);
    if (!detail.empty()) detail += "; ";
    detail += render_key(key.first, key.second) + ": " + got.get_str();
    if (got != expected) {
      ok = false;
      detail += " (expected " + expected.get_str() + ")";
    }
  }
  return Verdict::check(name, ok, detail);
}

Verdict verify_span(const SurfaceLinkDiagram& d, const JKPoly& jk, bool strict) {
  const char* name = "span";
  if (!is_alternating(d)) return hypothesis(name, "diagram is not alternating", strict);
  if (!reduced_flags(d).nugatory_free) return hypothesis(name, "diagram has a nugatory crossing", strict);
  JKPoly at_one = jk.at_z(1);
  if (at_one.is_zero()) return Verdict::check(name, false, "J_K(t,1) is zero");
  mpq_class span = at_one.t_span();
  const mpz_class& low = at_one.terms().begin()->second;
  const mpz_class& high = at_one.terms().rbegin()->second;
  bool ok = span == d.num_crossings() - d.genus() && abs(low) == 1 && abs(high) == 1;
  return Verdict::check(name, ok,
                        "span " + span.get_str() + ", c - g = " + std::to_string(d.num_crossings() - d.genus()) +
                            ", extremal coefficients " + low.get_str() + ", " + high.get_str());
}

int subextremal_sum(const JKPoly& jk) {
  std::map<int, mpz_class> slice;
  for (const auto& [key, c] : jk.terms()) {
    if (key.second == 0) slice[key.first] = c;
  }
  if (slice.empty()) return 0;
  const int lo = slice.begin()->first;
  const int hi = slice.rbegin()->first;
  auto at = [&](int q) {
    auto it = slice.find(q);
    return it == slice.end() ? mpz_class(0) : mpz_class(abs(it->second));
  };
  mpz_class total = at(lo + 4) + at(hi - 4);
  return static_cast<int>(total.get_si());
}

Verdict verify_subextremal(const SurfaceLinkDiagram& d, const JKPoly& jk, int tau_value, bool strict) {
  const char* name = "subextremal";
  if (!is_alternating(d)) return hypothesis(name, "diagram is not alternating", strict);
  if (!reduced_flags(d).strongly_reduced) return hypothesis(name, "diagram is not strongly reduced", strict);
  int sum = subextremal_sum(jk);
  int predicted = sum - 2 * d.genus();
  return Verdict::check(name, predicted == tau_value,
                        "|a_{n+1}| + |a_{m-1}| - 2g = " + std::to_string(predicted) + ", tau = " +
                            std::to_string(tau_value));
}

// ---------------------------------------------------------------------------
// Volume bounds

bool VolumeBounds::contains(double vol) const {
  bool above = lower_closed ? vol >= lower : vol > lower;
  bool below = upper_closed ? vol <= upper : vol < upper;
  return above && below;
}

VolumeBounds volume_bounds(int tau, int genus, int euler_characteristic) {
  if (genus <= 0) throw Error(ErrorCode::GenusZero, "volume bounds need a surface of genus at least 1");
  if (tau < 0) throw std::invalid_argument("volume_bounds: negative twist number");
  VolumeBounds b;
  if (genus == 1) {
    b.lower = kVOct / 2 * tau;
    b.upper = 10 * kVTet * tau;
  } else {
    b.lower = kVOct / 2 * (tau - 3 * euler_characteristic);
    b.upper = 12 * kVOct * tau;
  }
  return b;
}

}  // namespace slinv
