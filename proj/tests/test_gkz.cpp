#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "symanzik/family.hpp"
#include "symanzik/gkz.hpp"
#include "symanzik/reports.hpp"

using namespace symanzik;

namespace {

SupportMatrix matrix_from_columns(int num_edges,
                                  std::vector<ExponentVec> cols) {
  SupportMatrix a;
  a.num_edges = num_edges;
  a.columns = std::move(cols);
  return a;
}

}  // namespace

TEST_CASE("euler operators copy the rows of A") {
  const SupportMatrix a = matrix_from_columns(1, {{1, 0}, {1, 1}});
  const std::vector<EulerOperator> ops = euler_operators(a);
  REQUIRE(ops.size() == 2);
  CHECK(ops[0].coeffs == std::vector<int>{1, 1});
  CHECK(ops[1].coeffs == std::vector<int>{0, 1});
  CHECK(ops[0].row == 0);
}

TEST_CASE("euler operators of the named supports") {
  const SupportMatrix bubble = build_support_matrix(
      gm_support(make_banana(2, 0b11), Degeneracy{{{1, 1}}}));
  const std::vector<EulerOperator> ops = euler_operators(bubble);
  CHECK(ops.size() == 3);
  CHECK(ops[0].coeffs.size() == 4);

  const SupportMatrix sunset = build_support_matrix(
      gm_support(make_banana(3, 0b111), Degeneracy{{{1, 1, 1}}}));
  const std::vector<EulerOperator> sops = euler_operators(sunset);
  CHECK(sops.size() == 4);
  CHECK(sops[0].coeffs == std::vector<int>(9, 1));  // total Euler operator
}

TEST_CASE("kernel binomials") {
  // full-rank square matrix: trivial kernel
  const SupportMatrix id2 = matrix_from_columns(1, {{1, 0}, {0, 1}});
  CHECK(lattice_kernel_binomials(id2).empty());

  // degenerate bubble: one binomial, 2 col(1,1,0) + ... = ...
  const SupportMatrix bubble = build_support_matrix(
      gm_support(make_banana(2, 0b11), Degeneracy{{{1, 1}}}));
  const std::vector<Binomial> bins = lattice_kernel_binomials(bubble);
  REQUIRE(bins.size() == 1);
  const Binomial& b = bins[0];
  for (std::size_t j = 0; j < b.u.size(); ++j)
    CHECK((b.u[j] == 0 || b.v[j] == 0));  // disjoint supports
  for (int r = 0; r < bubble.dim(); ++r) {
    long lhs = 0, rhs = 0;
    for (std::size_t j = 0; j < b.u.size(); ++j) {
      lhs += static_cast<long>(bubble.columns[j][r]) * b.u[j];
      rhs += static_cast<long>(bubble.columns[j][r]) * b.v[j];
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("binomial count equals columns minus rank") {
  for (const FeynmanGraph& shape : s1i_graph_shapes(4)) {
    std::vector<std::pair<int, int>> ends;
    for (int e = 0; e < shape.num_edges(); ++e) ends.push_back(shape.ends(e));
    const FeynmanGraph g =
        make_graph(shape.num_vertices(), ends, 0b0011, {0, 1});
    const SupportMatrix a = build_support_matrix(gm_support(g));
    const std::vector<Binomial> bins = lattice_kernel_binomials(a);
    CHECK(bins.size() ==
          a.columns.size() - static_cast<std::size_t>(matrix_rank(a.rows())));
  }
}

TEST_CASE("gkz json carries the schema") {
  const SupportMatrix a = build_support_matrix(
      gm_support(make_banana(2, 0b11), Degeneracy{{{1, 1}}}));
  const nlohmann::ordered_json j = gkz_to_json(a);
  CHECK(j.contains("matrix"));
  CHECK(j.contains("euler_operators"));
  CHECK(j.contains("binomials"));
  CHECK(j["beta"] == "symbolic");
  CHECK(j["matrix"].size() == 3);
  CHECK(j["matrix"][0].size() == 4);
  CHECK(j["euler_operators"].size() == 3);
  CHECK(j["binomials"].size() == 1);
  // round-trips through the parser byte-identically
  const std::string text = j.dump(2);
  CHECK(nlohmann::ordered_json::parse(text).dump(2) == text);
}

TEST_CASE("pretty print mentions every operator") {
  const SupportMatrix a = build_support_matrix(
      gm_support(make_banana(2, 0b11), Degeneracy{{{1, 1}}}));
  const std::string text = gkz_pretty(a);
  CHECK(text.find("E0") != std::string::npos);
  CHECK(text.find("E2") != std::string::npos);
  CHECK(text.find(" - ") != std::string::npos);
}
