#pragma once

// Graph polynomials of embedded graphs, the Jones-Krushkal polynomial of
// surface link diagrams, twist numbers and volume bounds.
//
// Exponential sums come in two flavours: a parallel kernel (OpenMP, 64-bit
// histograms, integer homology coordinates) used by default, and a serial
// reference built directly on SubgraphProfile / State. Tests hold them equal.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "slinv/diagram.hpp"
#include "slinv/homology.hpp"
#include "slinv/limits.hpp"
#include "slinv/poly.hpp"
#include "slinv/ribbon.hpp"

namespace slinv {

// ---------------------------------------------------------------------------
// Krushkal polynomial

/// p_G(x,y,u,v) = sum over spanning subgraphs H of
/// x^{c(H)-c(G)} y^{k(H)} u^{s(H)/2} v^{s_perp(H)/2}.
/// Throws EdgeCapExceeded when E > cap.
LaurentPoly krushkal(const CombinatorialMap& g, int cap = kDefaultCap);
LaurentPoly krushkal_reference(const CombinatorialMap& g, int cap = kDefaultCap);

/// P_G(X,Y,U,V) = p_G(X-1, Y-1, U, V).
LaurentPoly big_P(const LaurentPoly& p);
inline LaurentPoly big_P(const CombinatorialMap& g, int cap = kDefaultCap) { return big_P(krushkal(g, cap)); }

/// Whitney rank polynomial sum_H x^{r(G)-r(H)} y^{|H|-r(H)} of the abstract
/// multigraph, by deletion-contraction.
LaurentPoly whitney_rank(const CombinatorialMap& g);
/// y^g p_G(x, y, y, 1/y) as a polynomial in x, y.
LaurentPoly tutte_specialization(const LaurentPoly& p, int genus);
bool tutte_check(const CombinatorialMap& g, int cap = kDefaultCap);

/// p_G(x,y,u,v) == p_{G*}(y,x,v,u).
bool duality_check(const CombinatorialMap& g, int cap = kDefaultCap);

/// p_G == (1+y) p_{G-e}. Throws NotTrivialLoop unless e is a null-homologous loop.
bool loop_deletion_check(const CombinatorialMap& g, int e, int cap = kDefaultCap);

// ---------------------------------------------------------------------------
// Reduced graph

struct ReducedGraphData {
  std::vector<int> kept_edges;  ///< one representative per parallel class, ascending
  int trivial_loops_deleted = 0;
  int lambda = 0;
  int mu = 0;
  int gamma = 0;
  bool has_3petal = false;
};

/// Parallel classes by union-find. Within a class of size m the
/// representative is the (rotation mod m)-th member by id; rotation 0 picks
/// the lowest id.
ReducedGraphData reduce(const CombinatorialMap& g, const HomologyContext& ctx, int rotation = 0);

enum class Status { Pass, Fail, Skipped };
const char* to_string(Status s);

struct Verdict {
  std::string name;
  Status status = Status::Skipped;
  std::string detail;

  static Verdict check(std::string name, bool ok, std::string detail);
  static Verdict skipped(std::string name, std::string reason);
};

/// Coefficient slots V^g X^{n-1} Y^k (mu), V^{g-1} X^n Y^k (lambda) and
/// U V^{g-1} X^n Y^k (gamma) of P_G against the structural counts. The
/// lambda and gamma rows are skipped at g = 0; the gamma row is skipped when
/// 3-petal loops exist.
std::vector<Verdict> verify_krushkal_coeffs(const CombinatorialMap& g, const LaurentPoly& P,
                                            const ReducedGraphData& red);
std::vector<Verdict> verify_krushkal_coeffs(const CombinatorialMap& g, int cap = kDefaultCap);

// ---------------------------------------------------------------------------
// Jones-Krushkal polynomial

/// Writhe-normalized homological bracket
/// (-1)^w t^{3w/4} sum_s t^{(b-a)/4} (-t^{-1/2}-t^{1/2})^{k-1} z^r.
/// Throws NotCheckerboardColorable, CrossingCapExceeded.
JKPoly jones_krushkal_statesum(const SurfaceLinkDiagram& d, int cap = kDefaultCap);
JKPoly jones_krushkal_statesum_reference(const SurfaceLinkDiagram& d, int cap = kDefaultCap);

/// J_K from the Krushkal polynomial of the A-Tait graph:
/// (-1)^w t^{(3w-2g-2n+c)/4} z^g P_{G_A}(-t, -1/t, 1/(z sqrt t), sqrt t / z).
/// Throws NotCheckerboardColorable, NotAlternating, CrossingCapExceeded.
JKPoly jones_krushkal_via_P(const SurfaceLinkDiagram& d, int cap = kDefaultCap);
JKPoly jones_krushkal_via_P(const SurfaceLinkDiagram& d, const LaurentPoly& P_A);

/// z := -t^{-1/2} - t^{1/2}; the result has no z.
JKPoly jones_specialization(const JKPoly& jk);

// ---------------------------------------------------------------------------
// Twist number and theorem checks on diagrams

/// Crossings merged when their Tait edges are parallel in G_A or in G_B.
/// Throws NotAlternating, NotReduced.
int tau(const SurfaceLinkDiagram& d);
/// lambda + mu + lambda_bar + mu_bar - 2g. Same preconditions as tau().
int tau_formula(const SurfaceLinkDiagram& d);

/// Everything the diagram checks need, computed once.
struct TaitData {
  Coloring coloring;
  TaitPair tait;
  ReducedGraphData reduced_a;
  ReducedGraphData reduced_b;
  int n = 0;  ///< |V(G_A)| - 1
  int N = 0;  ///< |V(G_B)| - 1
};
TaitData tait_data(const SurfaceLinkDiagram& d);

/// The four-slot expression assembled from the Tait data, colliding
/// monomials summed.
std::map<std::pair<int, int>, mpz_class> eq_jk_expression(const SurfaceLinkDiagram& d, const TaitData& td);

/// Coefficients of J_K at every monomial of the four-slot expression.
/// Needs a reduced alternating diagram whose Tait graphs have no 3-petal
/// loops; otherwise skipped, or HypothesisViolated when `strict`.
Verdict verify_eq_jk(const SurfaceLinkDiagram& d, const JKPoly& jk, const TaitData& td, bool strict = false);
/// span(J_K(t,1)) == c - g with extremal coefficients +-1.
Verdict verify_span(const SurfaceLinkDiagram& d, const JKPoly& jk, bool strict = false);
/// tau == |a_{n+1}| + |a_{m-1}| - 2g on J_K(t,0), strongly reduced diagrams only.
Verdict verify_subextremal(const SurfaceLinkDiagram& d, const JKPoly& jk, int tau_value, bool strict = false);
/// |a_{n+1}| + |a_{m-1}| of J_K(t,0).
int subextremal_sum(const JKPoly& jk);

// ---------------------------------------------------------------------------
// Volume bounds

inline constexpr double kVTet = 1.01494;
inline constexpr double kVOct = 3.66386;

struct VolumeBounds {
  double lower = 0;
  double upper = 0;
  bool lower_closed = true;   ///< lower <= vol
  bool upper_closed = false;  ///< vol < upper

  bool contains(double vol) const;
};

/// Throws GenusZero for g = 0.
VolumeBounds volume_bounds(int tau, int genus, int euler_characteristic);

// ---------------------------------------------------------------------------
// Reports

struct KrushkalReport {
  LaurentPoly p;
  LaurentPoly P;
  ReducedGraphData reduced;
  int genus = 0;
  int vertices = 0;
  int edges = 0;
  std::vector<Verdict> verdicts;

  nlohmann::json to_json() const;
};

/// Polynomials, reduced data and the graph-level verifiers for a map.
KrushkalReport krushkal_report(const CombinatorialMap& g, int cap = kDefaultCap);

struct InvariantReport {
  int crossings = 0;
  int components = 0;
  int genus = 0;
  int writhe = 0;
  bool colorable = false;
  bool alternating = false;
  ReducedFlags flags;
  int twist_regions = 0;

  std::optional<LaurentPoly> p_a;
  std::optional<LaurentPoly> P_a;
  std::optional<LaurentPoly> P_b;
  std::optional<JKPoly> jk;
  std::optional<JKPoly> jones;
  std::optional<TaitData> tait;
  std::optional<int> tau;
  std::optional<int> tau_formula;
  std::optional<VolumeBounds> bounds;
  std::vector<Verdict> verdicts;
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
};

/// Runs every computation and verifier that applies. Hypothesis failures
/// become skipped verdicts or notes; only cap errors propagate.
/// `twist_reduced` asserts that hypothesis for the twist-region inequality,
/// which is not checked algorithmically.
InvariantReport full_report(const SurfaceLinkDiagram& d, int cap = kDefaultCap, bool twist_reduced = false);

}  // namespace slinv
