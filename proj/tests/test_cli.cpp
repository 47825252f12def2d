#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symanzik/family.hpp"
#include "symanzik/graph_json.hpp"
#include "symanzik/reports.hpp"

using namespace symanzik;

namespace {

const char* kBubbleDoc = R"({
  "vertices": ["a", "b"],
  "edges": [
    {"id": "e1", "ends": ["a", "b"], "massive": true},
    {"id": "e2", "ends": ["a", "b"], "massive": true}
  ],
  "external": ["a", "b"],
  "deleted_monomials": [[1, 1]]
})";

}  // namespace

TEST_CASE("graph document parsing") {
  const GraphDocument doc = parse_graph_document(kBubbleDoc);
  CHECK(doc.graph.num_vertices() == 2);
  CHECK(doc.graph.num_edges() == 2);
  CHECK(doc.graph.massive(0));
  CHECK(doc.graph.external(0));
  CHECK(doc.graph.edge_id(1) == "e2");
  REQUIRE(doc.degeneracy.deleted.size() == 1);
  CHECK(doc.degeneracy.deleted[0] == ExponentVec{1, 1});
}

TEST_CASE("parse errors carry positions and causes") {
  CHECK_THROWS_AS(parse_graph_document("{"), ParseError);
  CHECK_THROWS_AS(parse_graph_document("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_graph_document(R"({"vertices": ["a"]})"), ParseError);
  // dangling endpoint is a structural error surfaced as a parse failure
  CHECK_THROWS_AS(parse_graph_document(R"({
    "vertices": ["a"],
    "edges": [{"id": "e1", "ends": ["a", "zz"]}],
    "external": []
  })"),
                  ParseError);
  // wrong monomial length
  CHECK_THROWS_AS(parse_graph_document(R"({
    "vertices": ["a", "b"],
    "edges": [{"id": "e1", "ends": ["a", "b"]}],
    "external": ["a"],
    "deleted_monomials": [[1, 1, 1]]
  })"),
                  ParseError);
}

TEST_CASE("document round-trip") {
  const GraphDocument doc = parse_graph_document(kBubbleDoc);
  const std::string dumped = graph_document_to_json(doc);
  const GraphDocument again = parse_graph_document(dumped);
  CHECK(graph_document_to_json(again) == dumped);
}

TEST_CASE("forests report text") {
  const FeynmanGraph bubble = make_banana(2, 0b01);
  const std::string t2 = forests_to_text(bubble, 2);
  CHECK(t2.find("2-forests: 1") != std::string::npos);
  CHECK(t2.find("momentous") != std::string::npos);
  CHECK(t2.find("massive-truncation") != std::string::npos);
  const std::string t1 = forests_to_text(bubble, 1);
  CHECK(t1.find("1-forests: 2") != std::string::npos);
}

TEST_CASE("matroid checks runner") {
  const MatroidsRun good = run_matroid_checks(make_cycle(3, 0b011, {0, 1, 2}));
  CHECK_FALSE(good.hypothesis_failure);
  CHECK_FALSE(good.math_failure);
  CHECK(good.text.find("all checks passed") != std::string::npos);
  CHECK(good.text.find("quotient momentous < graphic: holds") !=
        std::string::npos);

  // single external vertex: no momentous 2-forest
  const MatroidsRun bad = run_matroid_checks(make_cycle(3, 0, {0}));
  CHECK(bad.hypothesis_failure);
  CHECK(bad.text.find("no momentous 2-forest") != std::string::npos);

  // not s1I
  const MatroidsRun path =
      run_matroid_checks(make_graph(3, {{0, 1}, {1, 2}}, 0, {0, 2}));
  CHECK(path.hypothesis_failure);
  CHECK(path.text.find("bridge") != std::string::npos);
}

TEST_CASE("saturation JSON round-trips and carries the verdict") {
  const FeynmanGraph bubble = make_banana(2, 0b11);
  const GmSupport gm = gm_support(bubble, Degeneracy{{{1, 1}}});
  const SaturationReport rep = saturation_report(bubble, gm, 3);
  const nlohmann::ordered_json j = saturation_to_json(bubble, gm, rep);
  CHECK(j["verdict"] == "not saturated");
  CHECK(j["qa_generators"].size() == 1);
  CHECK(j["holes"]["1"].size() == 1);
  const std::string text = j.dump(2);
  CHECK(nlohmann::ordered_json::parse(text).dump(2) == text);

  const std::string pretty = saturation_to_text(bubble, gm, rep);
  CHECK(pretty.find("verdict: not saturated") != std::string::npos);
  CHECK(pretty.find("(1,1,1)") != std::string::npos);
}

TEST_CASE("family verification passes on the tiny family") {
  const FamilyVerification rep = run_family_verification(3, 2, 2);
  CHECK(rep.all_passed());
  CHECK(rep.instance_count > 0);
  CHECK(rep.to_text().find("result: PASS") != std::string::npos);
  // text output is identical across runs
  const FamilyVerification rep2 = run_family_verification(3, 2, 1);
  CHECK(rep.to_text() == rep2.to_text());
}
