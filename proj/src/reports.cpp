#include "symanzik/reports.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "symanzik/family.hpp"
#include "symanzik/matroid.hpp"
#include "symanzik/polytope.hpp"

namespace symanzik {

using json = nlohmann::ordered_json;

std::string format_exponent_vec(const ExponentVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string format_edge_set(const FeynmanGraph& g, EdgeSet s) {
  std::string out = "{";
  bool first = true;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!edge_in(s, e)) continue;
    if (!first) out += ",";
    out += g.edge_id(e);
    first = false;
  }
  return out + "}";
}

std::string forests_to_text(const FeynmanGraph& g, int order) {
  std::ostringstream os;
  const std::vector<Forest> forests = enumerate_forests(g, order);
  os << order << "-forests: " << forests.size() << "\n";
  for (const Forest& f : forests) {
    os << "  " << format_edge_set(g, f.edges);
    if (order == 2) {
      const ForestClass cls = classify_2forest(g, f.edges);
      os << (cls.momentous ? " momentous" : " momentum-free");
      if (cls.massive_truncation) os << " massive-truncation";
    }
    os << "\n";
  }
  return os.str();
}

namespace {

std::string graph_summary(const FeynmanGraph& g) {
  std::ostringstream os;
  os << g.num_vertices() << " vertices, " << g.num_edges() << " edges";
  os << "; massive: ";
  const EdgeSet m = g.massive_edges();
  os << (m == 0 ? "none" : format_edge_set(g, m));
  os << "; external:";
  for (int v : g.external_vertices()) os << " " << g.vertex_id(v);
  return os.str();
}

void describe_matroid(std::ostream& os, const std::string& name,
                      const Matroid& m) {
  os << "matroid " << name << ": rank " << m.rank << ", " << m.bases.size()
     << " bases\n";
}

bool report_exchange(std::ostream& os, const FeynmanGraph& g,
                     const std::string& name, const Matroid& m) {
  const ExchangeCheck c = check_exchange_axiom(m);
  os << "exchange " << name << ": weak " << (c.weak_ok ? "ok" : "FAIL")
     << ", strong " << (c.strong_ok ? "ok" : "FAIL") << "\n";
  if (!c.weak_ok)
    os << "  counterexample: B=" << format_edge_set(g, c.weak_counterexample->base_a)
       << " B'=" << format_edge_set(g, c.weak_counterexample->base_b)
       << " e=" << g.edge_id(c.weak_counterexample->removed) << "\n";
  return c.weak_ok && c.strong_ok;
}

bool report_quotient(std::ostream& os, const FeynmanGraph& g,
                     const std::string& what, const Matroid& mprime,
                     const Matroid& m) {
  const QuotientWitness w = is_quotient(mprime, m);
  os << "quotient " << what << ": " << (w.holds ? "holds" : "FAILS") << "\n";
  for (const CircuitCover& c : w.covers) {
    os << "  circuit " << format_edge_set(g, c.circuit) << ": ";
    if (c.covered) {
      os << "covered by";
      for (EdgeSet pc : c.covering) os << " " << format_edge_set(g, pc);
    } else {
      os << "NOT covered, missing " << format_edge_set(g, c.uncovered);
    }
    os << "\n";
  }
  return w.holds;
}

}  // namespace

MatroidsRun run_matroid_checks(const FeynmanGraph& g) {
  MatroidsRun out;
  std::ostringstream os;
  os << "graph: " << graph_summary(g) << "\n";

  const S1IReport s1i = validate_s1i(g);
  if (!s1i.ok) {
    os << "s1I: FAILED\n";
    for (const S1IViolation& v : s1i.violations)
      os << "  " << v.kind << (v.element.empty() ? "" : " " + v.element) << "\n";
    out.hypothesis_failure = true;
    out.text = os.str();
    return out;
  }
  os << "s1I: ok\n";

  const Matroid graphic = graphic_matroid(g);
  const Matroid cographic = cographic_matroid(g);
  const Matroid forests2 = two_forest_matroid(g);
  describe_matroid(os, "graphic", graphic);
  describe_matroid(os, "cographic", cographic);
  describe_matroid(os, "2-forest", forests2);

  bool ok = true;
  std::vector<std::pair<std::string, Matroid>> named;
  try {
    named.emplace_back("momentous", momentous_matroid(g));
  } catch (const HypothesisError& e) {
    os << "matroid momentous: " << e.what() << "\n";
    out.hypothesis_failure = true;
    out.text = os.str();
    return out;
  }
  bool have_mt = false;
  try {
    named.emplace_back("massive-truncation", massive_truncation_matroid(g));
    have_mt = true;
  } catch (const HypothesisError& e) {
    os << "matroid massive-truncation: not defined (" << e.what() << ")\n";
  }
  named.emplace_back("feynman", feynman_matroid(g));

  for (const auto& [name, m] : named) describe_matroid(os, name, m);
  for (const auto& [name, m] : named) ok &= report_exchange(os, g, name, m);

  ok &= report_quotient(os, g, "momentous < graphic", named.front().second,
                        graphic);
  if (have_mt) {
    const Matroid& mt = named[1].second;
    ok &= report_quotient(os, g, "massive-truncation < graphic", mt, graphic);
    const Matroid q = quotient_by_subset(graphic, g.massive_edges());
    const bool same = q.bases == mt.bases;
    os << "quotient-by-subset(graphic, massive) == massive-truncation: "
       << (same ? "ok" : "FAIL") << "\n";
    ok &= same;
  }

  const bool feyn_eq = named.back().second.bases == forests2.bases;
  bool paths = true;
  for (int v = 0; v < g.num_vertices(); ++v) paths &= massive_path_exists(g, v);
  os << "all 2-forests contribute: " << (feyn_eq ? "yes" : "no")
     << "; massive-path criterion: " << (paths ? "yes" : "no") << "\n";
  if (feyn_eq != paths) {
    os << "  MISMATCH between base-set equality and massive-path criterion\n";
    ok = false;
  }

  for (const auto& [name, m] : named) {
    const PolytopeEdgeReport rep = matroid_polytope_edge_directions(m);
    os << "polytope edges " << name << ": " << rep.edges.size()
       << " edges, directions " << (rep.ok ? "ok" : "FAIL") << "\n";
    ok &= rep.ok;
  }

  os << "result: " << (ok ? "all checks passed" : "CHECKS FAILED") << "\n";
  out.math_failure = !ok;
  out.text = os.str();
  return out;
}

std::string saturation_to_text(const FeynmanGraph& g, const GmSupport& s,
                               const SaturationReport& rep) {
  std::ostringstream os;
  os << "graph: " << graph_summary(g) << "\n";
  os << "support: u-part " << s.u_part.size() << ", f-part " << s.f_part.size();
  if (s.degenerate) os << ", deleted " << s.deleted.size() << " (degenerate)";
  os << "\n";
  os << "columns:";
  const SupportMatrix a = build_support_matrix(s);
  for (const ExponentVec& c : a.columns) os << " " << format_exponent_vec(c);
  os << "\n";
  os << "lattice: " << (rep.lattice_ambient ? "ambient" : "proper sublattice")
     << " (saturation tested inside ZA)\n";
  os << "theorem verdicts: " << rep.verdicts.reason << "\n";
  os << "holes up to degree " << rep.k_max << ": " << rep.total_holes() << "\n";
  for (int k = 1; k <= rep.k_max; ++k) {
    const auto& hs = rep.holes_by_degree[k - 1];
    if (hs.empty()) continue;
    os << "  degree " << k << ":";
    for (const ExponentVec& h : hs) os << " " << format_exponent_vec(h);
    os << "\n";
  }
  os << "qa generators:";
  if (rep.qa_generators.empty()) os << " none";
  for (const ExponentVec& q : rep.qa_generators) os << " " << format_exponent_vec(q);
  os << "\n";
  if (!rep.qa_generators.empty() && rep.degenerate) {
    bool all = true;
    for (bool b : rep.qa_generator_from_deleted) all &= b;
    os << "qa generators from deleted monomials: " << (all ? "yes" : "no")
       << "\n";
  }
  os << "degree-1 slice clear: " << (rep.degree_one_clear ? "yes" : "no") << "\n";
  os << "verdict: " << rep.verdict << "\n";
  for (const std::string& n : rep.contradiction_notes)
    os << "CONTRADICTION: " << n << "\n";
  return os.str();
}

json saturation_to_json(const FeynmanGraph& g, const GmSupport& s,
                        const SaturationReport& rep) {
  json j;
  j["graph"] = {{"vertices", g.vertex_ids()},
                {"edges", g.edge_ids()},
                {"external", json::array()}};
  for (int v : g.external_vertices())
    j["graph"]["external"].push_back(g.vertex_id(v));
  j["k_max"] = rep.k_max;
  j["degenerate"] = rep.degenerate;
  j["u_part"] = s.u_part;
  j["f_part"] = s.f_part;
  j["deleted"] = s.deleted;
  j["lattice_ambient"] = rep.lattice_ambient;
  j["verdicts"] = {{"withheld", rep.verdicts.withheld},
                   {"all_two_forests", rep.verdicts.all_two_forests},
                   {"massive_path", rep.verdicts.massive_path},
                   {"criterion_mismatch", rep.verdicts.criterion_mismatch},
                   {"massless", rep.verdicts.massless},
                   {"saturated_known", rep.verdicts.saturated_known},
                   {"reason", rep.verdicts.reason}};
  json holes = json::object();
  for (int k = 1; k <= rep.k_max; ++k)
    holes[std::to_string(k)] = rep.holes_by_degree[k - 1];
  j["holes"] = std::move(holes);
  j["qa_generators"] = rep.qa_generators;
  j["qa_generator_from_deleted"] = rep.qa_generator_from_deleted;
  j["degree_one_clear"] = rep.degree_one_clear;
  j["saturated_up_to_kmax"] = rep.saturated_up_to_kmax;
  j["verdict"] = rep.verdict;
  j["contradiction"] = rep.contradiction;
  j["contradiction_notes"] = rep.contradiction_notes;
  return j;
}

json gkz_to_json(const SupportMatrix& a) {
  json j;
  json matrix = json::array();
  for (int r = 0; r < a.dim(); ++r) {
    json row = json::array();
    for (const ExponentVec& col : a.columns) row.push_back(col[r]);
    matrix.push_back(std::move(row));
  }
  j["matrix"] = std::move(matrix);
  json ops = json::array();
  for (const EulerOperator& op : euler_operators(a))
    ops.push_back({{"row", op.row}, {"coeffs", op.coeffs}});
  j["euler_operators"] = std::move(ops);
  json bins = json::array();
  for (const Binomial& b : lattice_kernel_binomials(a))
    bins.push_back({{"u", b.u}, {"v", b.v}});
  j["binomials"] = std::move(bins);
  j["beta"] = "symbolic";
  return j;
}

// ---------------------------------------------------------------------------
// Family verification

namespace {

enum Suite {
  kForestOracle = 0,
  kForestInvariants,
  kSupports,
  kExchange,
  kQuotients,
  kMassivePath,
  kDegreeOne,
  kSaturation,
  kPolytopes,
};

std::string instance_key(const FeynmanGraph& g) {
  std::ostringstream os;
  os << "n" << g.num_vertices() << " ends=";
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.ends(e);
    if (e) os << ",";
    os << a << b;
  }
  os << " massive=";
  for (int e = 0; e < g.num_edges(); ++e) os << (g.massive(e) ? "1" : "0");
  os << " ext=";
  for (int v = 0; v < g.num_vertices(); ++v) os << (g.external(v) ? "1" : "0");
  return os.str();
}

struct InstanceOutcome {
  // -1 skip, 0 fail, 1 pass, -2 unused
  std::array<int, FamilyVerification::kSuiteCount> status;
  std::vector<std::string> failures;
  InstanceOutcome() { status.fill(-2); }
};

// Shared cache of hole-search results keyed by the column list.
class SaturationCache {
 public:
  // true when no holes up to k_max and the degree-1 slice is clear
  bool no_holes(const SupportMatrix& a, int k_max) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = cache_.find(a.columns);
      if (it != cache_.end()) return it->second;
    }
    const SaturationReport rep = saturation_check(a, k_max);
    const bool ok = rep.saturated_up_to_kmax;
    std::lock_guard<std::mutex> lock(mutex_);
    cache_.emplace(a.columns, ok);
    return ok;
  }

 private:
  std::mutex mutex_;
  std::map<std::vector<ExponentVec>, bool> cache_;
};

InstanceOutcome check_instance(const FeynmanGraph& g, int k_max,
                               SaturationCache& cache) {
  InstanceOutcome out;
  const std::string key = instance_key(g);
  auto record = [&](Suite s, bool ok, const std::string& detail) {
    out.status[s] = ok ? 1 : 0;
    if (!ok)
      out.failures.push_back(std::string(FamilyVerification::kSuiteNames[s]) +
                             ": " + key + ": " + detail);
  };

  const std::vector<Forest> trees = enumerate_forests(g, 1);
  const std::vector<Forest> forests2 = enumerate_forests(g, 2);

  // spanning-tree count against the Kirchhoff determinant
  record(kForestOracle,
         Int(static_cast<long>(trees.size())) == spanning_tree_count_oracle(g),
         "tree count != matrix-tree determinant");

  // structural forest invariants and the 2-forest extension property
  {
    bool ok = true;
    std::string detail;
    for (int i = 1; i <= 3 && ok; ++i) {
      const std::vector<Forest> fs = enumerate_forests(g, i);
      for (std::size_t j = 0; j + 1 < fs.size() && ok; ++j)
        if (fs[j].edges >= fs[j + 1].edges) {
          ok = false;
          detail = "forests not strictly ordered";
        }
      for (const Forest& f : fs) {
        if (!g.acyclic(f.edges) ||
            g.components(f.edges) != g.components(g.all_edges()) + i - 1) {
          ok = false;
          detail = "forest invariant violated";
          break;
        }
      }
    }
    std::set<EdgeSet> tree_set;
    for (const Forest& t : trees) tree_set.insert(t.edges);
    for (const Forest& f : forests2) {
      if (!ok) break;
      const std::vector<int> labels = component_labels(g, f.edges);
      for (int e = 0; e < g.num_edges(); ++e) {
        auto [a, b] = g.ends(e);
        if (labels[a] == labels[b]) continue;
        if (!tree_set.count(f.edges | (EdgeSet(1) << e))) {
          ok = false;
          detail = "2-forest plus linking edge is not a spanning tree";
          break;
        }
      }
    }
    record(kForestInvariants, ok, detail);
  }

  GmSupport gm;
  try {
    gm = gm_support(g);
  } catch (const HypothesisError& e) {
    record(kSupports, false, std::string("gm_support: ") + e.what());
    return out;
  }

  // support shape invariants
  {
    bool ok = true;
    std::string detail;
    const int expect = g.num_edges() - (g.num_vertices() - 1);
    for (const ExponentVec& v : gm.u_part) {
      int sum = 0;
      for (int x : v) {
        sum += x;
        if (x != 0 && x != 1) ok = false;
      }
      if (sum != expect) ok = false;
    }
    if (!ok) detail = "u-part entries or sums wrong";
    int squares = 0;
    for (const ExponentVec& v : gm.f_part) {
      int sum = 0, twos = 0;
      for (int e = 0; e < g.num_edges(); ++e) {
        sum += v[e];
        if (v[e] == 2) {
          ++twos;
          if (!g.massive(e)) {
            ok = false;
            detail = "entry 2 at a massless edge";
          }
        } else if (v[e] != 0 && v[e] != 1) {
          ok = false;
          detail = "f-part entry out of range";
        }
      }
      if (twos > 1 || sum != expect + 1) {
        ok = false;
        detail = "f-part sum or square count wrong";
      }
      squares += twos > 0 ? 1 : 0;
    }
    if (ok && f0_support(g).empty()) {
      ok = false;
      detail = "f0 support empty despite two external vertices";
    }
    // squarefree f-part vectors are complements of Feynman bases; the
    // square-bearing ones biject with (tree, massive edge off it) pairs
    if (ok) {
      std::set<ExponentVec> squarefree;
      for (const ExponentVec& v : gm.f_part)
        if (*std::max_element(v.begin(), v.end()) <= 1) squarefree.insert(v);
      std::set<ExponentVec> expected;
      for (EdgeSet b : feynman_matroid(g).bases) {
        ExponentVec v(g.num_edges(), 0);
        for (int e = 0; e < g.num_edges(); ++e)
          if (!edge_in(b, e)) v[e] = 1;
        expected.insert(std::move(v));
      }
      long pairs = 0;
      for (const Forest& t : trees)
        for (int e = 0; e < g.num_edges(); ++e)
          if (g.massive(e) && !edge_in(t.edges, e)) ++pairs;
      if (squarefree != expected ||
          pairs != static_cast<long>(gm.f_part.size() - squarefree.size())) {
        ok = false;
        detail = "f-part does not match Feynman bases plus square terms";
      }
    }
    record(kSupports, ok, detail);
  }

  // exchange axiom on the momentous, truncation, and Feynman matroids
  {
    bool ok = true;
    std::string detail;
    std::vector<std::pair<const char*, Matroid>> ms;
    ms.emplace_back("momentous", momentous_matroid(g));
    if (g.massive_edges() != 0)
      ms.emplace_back("massive-truncation", massive_truncation_matroid(g));
    ms.emplace_back("feynman", feynman_matroid(g));
    for (const auto& [name, m] : ms) {
      const ExchangeCheck c = check_exchange_axiom(m);
      if (!c.weak_ok || !c.strong_ok) {
        ok = false;
        detail = std::string(name) + " exchange failed";
        break;
      }
    }
    record(kExchange, ok, detail);
  }

  // quotient relations
  {
    bool ok = true;
    std::string detail;
    const Matroid graphic = graphic_matroid(g);
    if (!is_quotient(momentous_matroid(g), graphic).holds) {
      ok = false;
      detail = "momentous is not a quotient of graphic";
    }
    if (ok && g.massive_edges() != 0) {
      const Matroid mt = massive_truncation_matroid(g);
      if (!is_quotient(mt, graphic).holds) {
        ok = false;
        detail = "massive-truncation is not a quotient of graphic";
      } else {
        const Matroid q = quotient_by_subset(graphic, g.massive_edges());
        if (q.bases != mt.bases) {
          ok = false;
          detail = "quotient-by-subset differs from massive-truncation";
        } else if (!is_quotient(q, graphic).holds) {
          ok = false;
          detail = "quotient-by-subset is not a quotient of graphic";
        }
      }
    }
    record(kQuotients, ok, detail);
  }

  // base-set equality matches the massive-path criterion
  {
    const bool equal =
        feynman_matroid(g).bases == two_forest_matroid(g).bases;
    bool paths = true;
    for (int v = 0; v < g.num_vertices(); ++v)
      paths &= massive_path_exists(g, v);
    record(kMassivePath, equal == paths,
           "base-set equality disagrees with massive-path criterion");
  }

  // degree-1 slices carry no extra lattice points
  {
    bool ok = degree_one_completeness(gm.f_part);
    std::string detail = "f-part polytope has non-support lattice points";
    if (ok) {
      std::vector<Point> upts(gm.u_part.begin(), gm.u_part.end());
      if (dilation_lattice_points(upts, 1) != upts) {
        ok = false;
        detail = "u-part polytope has non-support lattice points";
      }
    }
    record(kDegreeOne, ok, detail);
  }

  // saturation theorems at the bound
  {
    const TheoremVerdicts v = check_theorem_conditions(g, gm);
    if (!v.saturated_known) {
      out.status[kSaturation] = -1;  // skip
    } else {
      record(kSaturation, cache.no_holes(build_support_matrix(gm), k_max),
             "holes found although a theorem certifies saturation");
    }
  }

  return out;
}

struct PolytopeOutcome {
  int checks = 0;
  std::vector<std::string> failures;
};

PolytopeOutcome check_polytopes(const FeynmanGraph& g, bool include_cographic) {
  PolytopeOutcome out;
  const std::string key = instance_key(g);
  auto record = [&](bool ok, const std::string& detail) {
    ++out.checks;
    if (!ok)
      out.failures.push_back(std::string("polytopes: ") + key + ": " + detail);
  };

  if (include_cographic) {
    const Matroid cog = cographic_matroid(g);
    record(matroid_polytope_edge_directions(cog).ok,
           "cographic polytope edge direction not of exchange form");
    std::vector<Point> pts;
    for (EdgeSet b : cog.bases) pts.push_back(basis_indicator(g.num_edges(), b));
    record(idp_check(pts, 3), "cographic matroid polytope not IDP up to 3");
  }

  const Matroid mom = momentous_matroid(g);
  record(matroid_polytope_edge_directions(mom).ok,
         "momentous polytope edge direction not of exchange form");
  const Matroid mom_dual = dual(mom);
  record(matroid_polytope_edge_directions(mom_dual).ok,
         "momentous-dual polytope edge direction not of exchange form");
  std::vector<Point> dual_pts;
  for (EdgeSet b : mom_dual.bases)
    dual_pts.push_back(basis_indicator(g.num_edges(), b));
  record(idp_check(dual_pts, 3), "momentous-dual polytope not IDP up to 3");

  // Minkowski lattice-point equality for the massless polynomial: U vs F0
  std::vector<Point> u_pts;
  for (const ExponentVec& v : u_support(g)) u_pts.push_back(v);
  std::vector<Point> f0_pts;
  for (const ExponentVec& v : f0_support(g)) f0_pts.push_back(v);
  record(minkowski_lattice_check(u_pts, f0_pts),
         "Minkowski lattice-point equality fails for (U, F0)");

  return out;
}

}  // namespace

const std::array<const char*, FamilyVerification::kSuiteCount>
    FamilyVerification::kSuiteNames = {
        "forest-oracle",  "forest-invariants", "supports",
        "exchange",       "quotients",         "massive-path",
        "degree-one",     "saturation",        "polytopes"};

bool FamilyVerification::all_passed() const {
  for (long f : fail)
    if (f != 0) return false;
  return true;
}

std::string FamilyVerification::to_text() const {
  std::ostringstream os;
  os << "verify-family: max_edges=" << max_edges << " kmax=" << k_max
     << " shapes=" << shape_count << " instances=" << instance_count << "\n";
  for (int s = 0; s < kSuiteCount; ++s) {
    os << "suite " << kSuiteNames[s] << ": pass=" << pass[s]
       << " fail=" << fail[s];
    if (skip[s] > 0) os << " skip=" << skip[s];
    os << "\n";
  }
  for (const std::string& f : failures) os << "FAIL " << f << "\n";
  os << "result: " << (all_passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

json FamilyVerification::to_json() const {
  json j;
  j["max_edges"] = max_edges;
  j["k_max"] = k_max;
  j["shapes"] = shape_count;
  j["instances"] = instance_count;
  json suites = json::object();
  for (int s = 0; s < kSuiteCount; ++s)
    suites[kSuiteNames[s]] = {
        {"pass", pass[s]}, {"fail", fail[s]}, {"skip", skip[s]}};
  j["suites"] = std::move(suites);
  j["failures"] = failures;
  j["result"] = all_passed() ? "PASS" : "FAIL";
  return j;
}

FamilyVerification run_family_verification(int max_edges, int k_max,
                                           int workers) {
  FamilyVerification out;
  out.max_edges = max_edges;
  out.k_max = k_max;

  const std::vector<FeynmanGraph> shapes = s1i_graph_shapes(max_edges);
  const std::vector<FeynmanGraph> instances = family_instances(max_edges);
  out.shape_count = shapes.size();
  out.instance_count = instances.size();

  SaturationCache cache;
  std::vector<InstanceOutcome> results(instances.size());
  parallel_for_index(instances.size(), workers, [&](std::size_t i) {
    results[i] = check_instance(instances[i], k_max, cache);
  });

  // Polytope checks run once per (shape, external set); masses do not enter.
  struct PolyTask {
    FeynmanGraph g;
    bool include_cographic;
  };
  std::vector<PolyTask> poly_tasks;
  for (const FeynmanGraph& shape : shapes) {
    const int nv = shape.num_vertices();
    std::vector<std::pair<int, int>> ends;
    for (int e = 0; e < shape.num_edges(); ++e) ends.push_back(shape.ends(e));
    bool first = true;
    for (unsigned ext = 0; ext < (1u << nv); ++ext) {
      if (__builtin_popcount(ext) < 2) continue;
      std::vector<int> external;
      for (int v = 0; v < nv; ++v)
        if ((ext >> v) & 1) external.push_back(v);
      poly_tasks.push_back({make_graph(nv, ends, 0, external), first});
      first = false;
    }
  }
  std::vector<PolytopeOutcome> poly_results(poly_tasks.size());
  parallel_for_index(poly_tasks.size(), workers, [&](std::size_t i) {
    poly_results[i] =
        check_polytopes(poly_tasks[i].g, poly_tasks[i].include_cographic);
  });

  for (const InstanceOutcome& r : results) {
    for (int s = 0; s < FamilyVerification::kSuiteCount; ++s) {
      if (r.status[s] == 1) ++out.pass[s];
      else if (r.status[s] == 0) ++out.fail[s];
      else if (r.status[s] == -1) ++out.skip[s];
    }
    out.failures.insert(out.failures.end(), r.failures.begin(),
                        r.failures.end());
  }
  for (const PolytopeOutcome& r : poly_results) {
    out.pass[kPolytopes] += r.checks - static_cast<int>(r.failures.size());
    out.fail[kPolytopes] += static_cast<int>(r.failures.size());
    out.failures.insert(out.failures.end(), r.failures.begin(),
                        r.failures.end());
  }
  std::sort(out.failures.begin(), out.failures.end());
  return out;
}

}  // namespace symanzik
