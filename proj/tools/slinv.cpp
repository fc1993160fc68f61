// slinv: command-line front end.
//
//   slinv invariants FILE [--json]      full report for .sld, Krushkal report for .rg
//   slinv verify FILE [--verifier NAME]  verifier table only
//   slinv states FILE [--dump]          state-sum buckets, or every state with --dump
//   slinv bounds FILE                   twist number and volume interval
//   slinv krushkal FILE                 Krushkal polynomial of a ribbon graph
//
// Exit status: 1 for unreadable or malformed input, 2 for a violated
// hypothesis or cap, 0 otherwise. Failed verifiers are reported, not fatal.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "slinv/error.hpp"
#include "slinv/invariants.hpp"

using namespace slinv;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitHypothesis = 2;

const std::vector<std::string> kVerifierNames{
    "krushkal-mu", "krushkal-lambda", "krushkal-gamma", "subgraph-count", "tutte",      "duality",
    "loop-deletion", "tait-duality", "tait-euler",     "route-equality", "state-bridge", "twist-formula",
    "eq-jk",       "span",           "subextremal",    "twist-regions"};

struct Options {
  std::string path;
  bool json = false;
  int cap = kDefaultCap;
  bool auto_orient = false;
  bool twist_reduced = false;
  bool dump = false;
  std::vector<std::string> verifiers;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Looks at the first non-comment line for the format header.
bool is_rg(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line.substr(first));
    std::string word, fmt;
    ls >> word >> fmt;
    return word == "format" && fmt == "rg";
  }
  return false;
}

SurfaceLinkDiagram load_diagram(const Options& o) {
  std::vector<std::string> warnings;
  SurfaceLinkDiagram d = parse_sld(read_file(o.path), o.auto_orient, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  return d;
}

/// Scalars go through the JSON serializer so both modes print identical digits.
std::string scalar(double x) { return nlohmann::json(x).dump(); }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string base_name(const std::string& verdict) {
  auto paren = verdict.find(" (");
  return paren == std::string::npos ? verdict : verdict.substr(0, paren);
}

std::vector<Verdict> select(const std::vector<Verdict>& all, const std::vector<std::string>& names) {
  if (names.empty()) return all;
  std::vector<Verdict> out;
  for (const Verdict& v : all) {
    if (std::find(names.begin(), names.end(), base_name(v.name)) != names.end()) out.push_back(v);
  }
  return out;
}

void print_verdicts(const std::vector<Verdict>& verdicts) {
  std::size_t width = 0;
  for (const Verdict& v : verdicts) width = std::max(width, v.name.size());
  for (const Verdict& v : verdicts) {
    std::cout << "  " << std::left << std::setw(static_cast<int>(width)) << v.name << "  " << std::setw(7)
              << to_string(v.status) << "  " << v.detail << "\n";
  }
}

void print_krushkal(const KrushkalReport& r) {
  std::cout << "vertices: " << r.vertices << "\nedges: " << r.edges << "\ngenus: " << r.genus << "\n";
  std::cout << "p: " << r.p.to_string() << "\n";
  std::cout << "P: " << r.P.to_string() << "\n";
  const ReducedGraphData& red = r.reduced;
  std::cout << "reduced: lambda " << red.lambda << ", mu " << red.mu << ", gamma " << red.gamma
            << ", trivial loops " << red.trivial_loops_deleted << ", 3-petal " << yes_no(red.has_3petal) << "\n";
  std::cout << "verdicts:\n";
  print_verdicts(r.verdicts);
}

void print_report(const InvariantReport& r) {
  std::cout << "crossings: " << r.crossings << "\n";
  std::cout << "components: " << r.components << "\n";
  std::cout << "genus: " << r.genus << "\n";
  std::cout << "writhe: " << r.writhe << "\n";
  std::cout << "colorable: " << yes_no(r.colorable) << "\n";
  std::cout << "alternating: " << yes_no(r.alternating) << "\n";
  std::cout << "nugatory-free: " << yes_no(r.flags.nugatory_free) << "\n";
  std::cout << "strongly reduced: " << yes_no(r.flags.strongly_reduced) << "\n";
  std::cout << "twist regions: " << r.twist_regions << "\n";
  if (r.tait) {
    const TaitData& td = *r.tait;
    std::cout << "data (g,mu,lambda,gamma,mu_bar,lambda_bar,gamma_bar,c,w,n,N): (" << r.genus << ','
              << td.reduced_a.mu << ',' << td.reduced_a.lambda << ',' << td.reduced_a.gamma << ','
              << td.reduced_b.mu << ',' << td.reduced_b.lambda << ',' << td.reduced_b.gamma << ',' << r.crossings
              << ',' << r.writhe << ',' << td.n << ',' << td.N << ")\n";
  }
  if (r.p_a) std::cout << "p_A: " << r.p_a->to_string() << "\n";
  if (r.P_a) std::cout << "P_A: " << r.P_a->to_string() << "\n";
  if (r.P_b) std::cout << "P_B: " << r.P_b->to_string() << "\n";
  if (r.jk) std::cout << "J_K: " << r.jk->to_string() << "\n";
  if (r.jones) {
    if (r.genus == 0) {
      std::cout << "classical Jones polynomial V(t): " << r.jones->to_string() << "\n";
    } else {
      std::cout << "Jones specialization: " << r.jones->to_string() << "\n";
    }
  }
  if (r.tau) std::cout << "tau: " << *r.tau << "\n";
  if (r.tau_formula) std::cout << "tau formula: " << *r.tau_formula << "\n";
  if (r.bounds) {
    std::cout << "volume bounds: " << scalar(r.bounds->lower) << " <= vol < " << scalar(r.bounds->upper) << "\n";
  }
  std::cout << "verdicts:\n";
  print_verdicts(r.verdicts);
  for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
}

int cmd_invariants(const Options& o, bool verdicts_only) {
  const std::string text = read_file(o.path);
  if (is_rg(text)) {
    KrushkalReport r = krushkal_report(parse_rg(text), o.cap);
    r.verdicts = select(r.verdicts, o.verifiers);
    if (o.json) {
      std::cout << (verdicts_only ? r.to_json()["verdicts"] : r.to_json()).dump(2) << "\n";
    } else if (verdicts_only) {
      print_verdicts(r.verdicts);
    } else {
      print_krushkal(r);
    }
    return 0;
  }
  InvariantReport r = full_report(load_diagram(o), o.cap, o.twist_reduced);
  r.verdicts = select(r.verdicts, o.verifiers);
  if (o.json) {
    nlohmann::json j = r.to_json();
    std::cout << (verdicts_only ? nlohmann::json{{"verdicts", j["verdicts"]}, {"notes", j["notes"]}} : j).dump(2)
              << "\n";
  } else if (verdicts_only) {
    print_verdicts(r.verdicts);
    for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
  } else {
    print_report(r);
  }
  return 0;
}

int cmd_krushkal(const Options& o) {
  KrushkalReport r = krushkal_report(parse_rg(read_file(o.path)), o.cap);
  r.verdicts = select(r.verdicts, o.verifiers);
  if (o.json) {
    std::cout << r.to_json().dump(2) << "\n";
  } else {
    print_krushkal(r);
  }
  return 0;
}

/// (-1)^w t^{3w/4} t^{(b-a)/4} d^{k-1} z^r for one state.
JKPoly state_weight(int w, int a, int b, int k, int r) {
  JKPoly out = JKPoly::monomial(w % 2 == 0 ? 1 : -1, 3 * w + b - a, r);
  for (int i = 1; i < k; ++i) out = out * JKPoly::loop_value();
  return out;
}

int cmd_states(const Options& o) {
  SurfaceLinkDiagram d = load_diagram(o);
  const int c = d.num_crossings();
  if (c > o.cap || c >= kHardCap) {
    throw Error(ErrorCode::CrossingCapExceeded, std::to_string(c) + " crossings, cap " + std::to_string(o.cap));
  }
  const bool colorable = is_checkerboard_colorable(d);
  const int w = writhe(d);
  nlohmann::json rows = nlohmann::json::array();
  std::map<std::array<int, 3>, long> buckets;
  JKPoly total;
  auto bits = [c](std::uint64_t choice) {
    std::string s;
    for (int v = 0; v < c; ++v) s += ((choice >> v) & 1U) != 0 ? 'A' : 'B';
    return s;
  };
  enumerate_states(
      d,
      [&](const State& s) {
        buckets[{s.b, s.k, s.r}] += 1;
        if (!o.dump) return;
        nlohmann::json row{{"state", bits(s.choice)}, {"a", s.a}, {"b", s.b}, {"size", s.size()},
                           {"k", s.k},               {"r", s.r}};
        if (colorable) {
          JKPoly wt = state_weight(w, s.a, s.b, s.k, s.r);
          total += wt;
          row["weight"] = wt.to_json();
        }
        rows.push_back(std::move(row));
      },
      o.cap);
  if (!o.dump && colorable) {
    for (const auto& [key, count] : buckets) {
      total += JKPoly::constant(count) * state_weight(w, c - key[0], key[0], key[1], key[2]);
    }
  }
  nlohmann::json j;
  j["crossings"] = c;
  j["writhe"] = w;
  j["colorable"] = colorable;
  if (o.dump) {
    j["states"] = rows;
  } else {
    nlohmann::json grouped = nlohmann::json::array();
    for (const auto& [key, count] : buckets) {
      grouped.push_back({{"b", key[0]}, {"a", c - key[0]}, {"k", key[1]}, {"r", key[2]}, {"count", count}});
    }
    j["buckets"] = grouped;
  }
  if (colorable) {
    JKPoly direct = jones_krushkal_statesum(d, o.cap);
    j["J_K_resummed"] = total.to_json();
    j["J_K"] = direct.to_json();
    j["agree"] = total == direct;
  }
  if (o.json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "crossings: " << c << "\nwrithe: " << w << "\ncolorable: " << yes_no(colorable) << "\n";
  if (o.dump) {
    std::cout << "state" << std::string(c > 5 ? c - 5 : 0, ' ') << "  a  b  |s|  k  r  weight\n";
    for (const auto& row : rows) {
      std::cout << std::left << std::setw(std::max(c, 5)) << row["state"].get<std::string>() << std::right
                << std::setw(3) << row["a"].get<int>() << std::setw(3) << row["b"].get<int>() << std::setw(5)
                << row["size"].get<int>() << std::setw(3) << row["k"].get<int>() << std::setw(3)
                << row["r"].get<int>() << "  "
                << (row.contains("weight") ? row["weight"]["text"].get<std::string>() : std::string("-"))
                << "\n";
    }
  } else {
    std::cout << "  b  a  k  r  count\n";
    for (const auto& [key, count] : buckets) {
      std::cout << std::setw(3) << key[0] << std::setw(3) << c - key[0] << std::setw(3) << key[1] << std::setw(3)
                << key[2] << std::setw(7) << count << "\n";
    }
  }
  if (colorable) {
    std::cout << "J_K (resummed): " << total.to_string() << "\n";
    std::cout << "J_K (state sum): " << j["J_K"]["text"].get<std::string>() << "\n";
    std::cout << "agree: " << yes_no(j["agree"].get<bool>()) << "\n";
  } else {
    std::cout << "note: NotCheckerboardColorable: state weights and J_K are not defined\n";
  }
  return 0;
}

int cmd_bounds(const Options& o) {
  SurfaceLinkDiagram d = load_diagram(o);
  const int g = d.genus();
  if (g < 1) throw Error(ErrorCode::GenusZero, "volume bounds need a surface of genus at least 1");
  if (!is_checkerboard_colorable(d)) throw Error(ErrorCode::NotCheckerboardColorable, "no Tait graphs");
  const int t = tau(d);
  const int chi = 2 - 2 * g;
  VolumeBounds b = volume_bounds(t, g, chi);
  std::vector<std::string> warnings;
  if (!reduced_flags(d).strongly_reduced) warnings.push_back("diagram is not strongly reduced; bounds assume it is");
  TaitData td = tait_data(d);
  if (td.reduced_a.gamma > 0 || td.reduced_b.gamma > 0) {
    warnings.push_back("genus-generating loops present: tau cannot be read off the J_K coefficients alone");
  }
  if (o.json) {
    nlohmann::json j{{"tau", t},
                     {"genus", g},
                     {"euler_characteristic", chi},
                     {"lower", b.lower},
                     {"upper", b.upper},
                     {"lower_closed", b.lower_closed},
                     {"upper_closed", b.upper_closed},
                     {"warnings", warnings}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "tau: " << t << "\ngenus: " << g << "\neuler characteristic: " << chi << "\n";
  std::cout << "lower: " << scalar(b.lower) << "\nupper: " << scalar(b.upper) << "\n";
  for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
  return 0;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::BadSlot:
    case ErrorCode::InconsistentOrientation:
    case ErrorCode::NotFourValent:
    case ErrorCode::NotInvolution:
    case ErrorCode::Disconnected:
    case ErrorCode::DanglingHalfEdge:
    case ErrorCode::NonIntegerGenus:
      return kExitInput;
    default:
      return kExitHypothesis;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Krushkal and Jones-Krushkal invariants of link diagrams on surfaces"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("file", o.path, ".sld diagram or .rg ribbon graph")->required();
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--max-crossings", o.cap, "cap on crossings and edges")->check(CLI::PositiveNumber);
    sub->add_flag("--auto-orient", o.auto_orient, "re-orient components from their first arc");
    sub->add_option("--verifier", o.verifiers, "restrict the verdict table")->check(CLI::IsMember(kVerifierNames));
    sub->add_flag("--twist-reduced", o.twist_reduced, "assert twist-reducedness for the twist-region check");
  };
  auto* invariants = app.add_subcommand("invariants", "full invariant report");
  auto* verify = app.add_subcommand("verify", "verifier table");
  auto* states = app.add_subcommand("states", "state-sum table");
  auto* bounds = app.add_subcommand("bounds", "twist number and volume bounds");
  auto* krushkal_cmd = app.add_subcommand("krushkal", "Krushkal polynomial of a ribbon graph");
  for (auto* sub : {invariants, verify, states, bounds, krushkal_cmd}) common(sub);
  states->add_flag("--dump", o.dump, "one row per state");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  if (o.cap >= kHardCap) {
    std::cerr << "warning: cap " << o.cap << " exceeds the " << kHardCap - 1 << "-bit mask width; using "
              << kHardCap - 1 << "\n";
    o.cap = kHardCap - 1;
  }
  if (o.cap > kDefaultCap) {
    std::cerr << "warning: cap " << o.cap << " allows 2^" << o.cap
              << " terms; time and memory grow exponentially past the default " << kDefaultCap << "\n";
  }

  try {
    if (*invariants) return cmd_invariants(o, false);
    if (*verify) return cmd_invariants(o, true);
    if (*states) return cmd_states(o);
    if (*bounds) return cmd_bounds(o);
    return cmd_krushkal(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitHypothesis;
  }
}
