#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "symanzik/gkz.hpp"
#include "symanzik/semigroup.hpp"

namespace symanzik {

std::string format_exponent_vec(const ExponentVec& v);
std::string format_edge_set(const FeynmanGraph& g, EdgeSet s);

std::string forests_to_text(const FeynmanGraph& g, int order);

struct MatroidsRun {
  bool hypothesis_failure = false;  // no momentous 2-forest etc.
  bool math_failure = false;        // a verified structural check failed
  std::string text;
};

// Builds every matroid, runs exchange, quotient and polytope-edge checks.
MatroidsRun run_matroid_checks(const FeynmanGraph& g);

std::string saturation_to_text(const FeynmanGraph& g, const GmSupport& s,
                               const SaturationReport& rep);
nlohmann::ordered_json saturation_to_json(const FeynmanGraph& g,
                                          const GmSupport& s,
                                          const SaturationReport& rep);

nlohmann::ordered_json gkz_to_json(const SupportMatrix& a);

// Family-wide verification: every suite over every instance of the
// exhaustive family.  Deterministic output, parallel execution.
struct FamilyVerification {
  int max_edges = 0;
  int k_max = 0;
  std::size_t instance_count = 0;
  std::size_t shape_count = 0;

  static constexpr int kSuiteCount = 9;
  static const std::array<const char*, kSuiteCount> kSuiteNames;
  std::array<long, kSuiteCount> pass{};
  std::array<long, kSuiteCount> fail{};
  std::array<long, kSuiteCount> skip{};

  std::vector<std::string> failures;  // sorted, one line each

  bool all_passed() const;
  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

FamilyVerification run_family_verification(int max_edges, int k_max,
                                           int workers);

}  // namespace symanzik
