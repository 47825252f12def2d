#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "symanzik/family.hpp"
#include "symanzik/graph_json.hpp"
#include "symanzik/reports.hpp"

using namespace symanzik;

namespace {

// Exit codes: 0 success, 1 usage/parse, 2 s1I or hypothesis violation,
// 3 mathematical check failure (would contradict established results).
constexpr int kExitUsage = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitMathCheck = 3;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw ParseError("cannot write " + out_path);
    f << text;
  }
}

std::string s1i_failure_text(const S1IReport& rep) {
  std::string out = "graph is not s1I:\n";
  for (const S1IViolation& v : rep.violations) {
    out += "  " + v.kind;
    if (!v.element.empty()) out += " " + v.element;
    out += "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symanzik supports, Feynman matroids, semigroup saturation, "
               "and GKZ data for small graphs"};
  app.require_subcommand(1);

  std::string file;
  std::string out_path;
  int order = 2;
  int kmax = 4;
  int family_kmax = 3;
  int max_edges = 5;
  bool as_json = false;

  CLI::App* forests = app.add_subcommand("forests", "enumerate i-forests");
  forests->add_option("file", file, "graph JSON file")->required();
  forests->add_option("-i,--order", order, "forest order i (default 2)");

  CLI::App* matroids = app.add_subcommand(
      "matroids", "build the Feynman matroids and verify their axioms");
  matroids->add_option("file", file, "graph JSON file")->required();

  CLI::App* saturation = app.add_subcommand(
      "saturation", "search for semigroup holes and report Q_A");
  saturation->add_option("file", file, "graph JSON file")->required();
  saturation->add_option("--kmax", kmax, "degree bound (default 4)");
  saturation->add_flag("--json", as_json, "emit JSON");
  saturation->add_option("--out", out_path, "write the report to a file");

  CLI::App* gkz = app.add_subcommand("gkz", "emit GKZ system data");
  gkz->add_option("file", file, "graph JSON file")->required();
  gkz->add_flag("--json", as_json, "print JSON instead of the pretty form");
  gkz->add_option("--out", out_path, "write the JSON to a file");

  CLI::App* verify = app.add_subcommand(
      "verify-family", "run every invariant suite over the exhaustive family");
  verify->add_option("max_edges", max_edges, "family edge bound (default 5)");
  verify->add_option("--kmax", family_kmax,
                     "degree bound for the saturation suite (default 3)");
  verify->add_flag("--json", as_json, "emit JSON");
  verify->add_option("--out", out_path, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      if (family_kmax < 1 || max_edges < 2) {
        std::cerr << "usage error: bounds must be positive\n";
        return kExitUsage;
      }
      const FamilyVerification rep =
          run_family_verification(max_edges, family_kmax, worker_count());
      emit(as_json ? rep.to_json().dump(2) + "\n" : rep.to_text(), out_path);
      return rep.all_passed() ? 0 : kExitMathCheck;
    }

    const GraphDocument doc = load_graph_document(file);
    const FeynmanGraph& g = doc.graph;

    if (*forests) {
      const S1IReport s1i = validate_s1i(g);
      if (!s1i.ok) {
        std::cout << s1i_failure_text(s1i);
        return kExitHypothesis;
      }
      if (order < 1) {
        std::cerr << "usage error: order must be >= 1\n";
        return kExitUsage;
      }
      std::cout << forests_to_text(g, order);
      return 0;
    }

    if (*matroids) {
      const MatroidsRun run = run_matroid_checks(g);
      std::cout << run.text;
      if (run.hypothesis_failure) return kExitHypothesis;
      if (run.math_failure) return kExitMathCheck;
      return 0;
    }

    if (*saturation) {
      if (kmax < 1) {
        std::cerr << "usage error: --kmax must be >= 1\n";
        return kExitUsage;
      }
      const S1IReport s1i = validate_s1i(g);
      if (!s1i.ok) {
        std::cout << s1i_failure_text(s1i);
        return kExitHypothesis;
      }
      const GmSupport gm = gm_support(g, doc.degeneracy);
      if (!gm.hypothesis_ok && !gm.degenerate)
        throw HypothesisError(
            "no 2-forest term in the generic support (Hypothesis (3))");
      const SaturationReport rep = saturation_report(g, gm, kmax);
      if (as_json)
        emit(saturation_to_json(g, gm, rep).dump(2) + "\n", out_path);
      else
        emit(saturation_to_text(g, gm, rep), out_path);
      return rep.contradiction ? kExitMathCheck : 0;
    }

    if (*gkz) {
      const S1IReport s1i = validate_s1i(g);
      if (!s1i.ok) {
        std::cout << s1i_failure_text(s1i);
        return kExitHypothesis;
      }
      const GmSupport gm = gm_support(g, doc.degeneracy);
      const SupportMatrix a = build_support_matrix(gm);
      const std::string json_text = gkz_to_json(a).dump(2) + "\n";
      if (!out_path.empty()) emit(json_text, out_path);
      std::cout << (as_json ? json_text : gkz_pretty(a));
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GraphError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const MathCheckError& e) {
    std::cerr << "mathematical check failure: " << e.what() << "\n";
    return kExitMathCheck;
  }
  return 0;
}
