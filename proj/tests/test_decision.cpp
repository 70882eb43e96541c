#include <doctest.h>

#include <string>
#include <vector>

#include "fixtures.hpp"
#include "test_support.hpp"
#include "traag/decision.hpp"

using namespace traag;
using traag::testing::decision_fixtures;
using traag::testing::fixture_jsjs;
using traag::testing::triangle_graphs;

namespace {

GraphShape shape_of(const char* text) { return graph_shape(parse_graph(text)); }

}  // namespace

TEST_SUITE_BEGIN("decision");

TEST_CASE("decide_raag clauses") {
  // hyperbolic-only: mP_1 + nP_2 and nothing else
  CHECK(decide_raag(shape_of("a -- b\nc -- d\nvertex e\n"), KnotCase::HyperbolicOnly).embeds);
  CHECK_FALSE(decide_raag(shape_of("a -- b\na -- c\n"), KnotCase::HyperbolicOnly).embeds);

  // torus knot: mP_1 or one star, exclusively
  Verdict stars = decide_raag(shape_of("a -- b\na -- c\nd -- e\nd -- f\nd -- g\n"),
                              KnotCase::TorusKnot);
  CHECK_FALSE(stars.embeds);
  CHECK(stars.rule == "Thm1.1(2)");
  CHECK(decide_raag(shape_of("vertex a\nvertex b\n"), KnotCase::TorusKnot).embeds);
  CHECK(decide_raag(shape_of("a -- b\na -- c\n"), KnotCase::TorusKnot).embeds);
  CHECK_FALSE(decide_raag(shape_of("a -- b\na -- c\nvertex d\n"), KnotCase::TorusKnot).embeds);

  // no Seifert-Seifert gluing: mP_1 + stars
  CHECK(decide_raag(shape_of("vertex p\na -- b\na -- c\n"), KnotCase::MixedNoSS).embeds);
  CHECK_FALSE(decide_raag(shape_of("w -- x\nx -- y\ny -- z\n"), KnotCase::MixedNoSS).embeds);

  // Seifert-Seifert gluing: any forest
  Verdict forest = decide_raag(shape_of("w -- x\nx -- y\ny -- z\n"), KnotCase::SSGluing);
  CHECK(forest.embeds);
  CHECK(forest.rule == "Thm1.1(4)");
  CHECK_FALSE(decide_raag(shape_of("a -- b\nb -- c\nc -- a\n"), KnotCase::SSGluing).embeds);

  // unknot: only a single vertex (or nothing)
  CHECK(decide_raag(shape_of("vertex a\n"), KnotCase::Unknot).embeds);
  CHECK(decide_raag(GraphShape{}, KnotCase::Unknot).embeds);
  CHECK_FALSE(decide_raag(shape_of("vertex a\nvertex b\n"), KnotCase::Unknot).embeds);
  CHECK_FALSE(decide_raag(shape_of("a -- b\n"), KnotCase::Unknot).embeds);

  CHECK(decide_raag(GraphShape{}, KnotCase::SSGluing).rule == "TrivialGroup");
  TRAAG_CHECK_ERROR(decide_raag(shape_of("b1 -> a\n"), KnotCase::TorusKnot), HasDirectedEdges);
}

TEST_CASE("decide_traag clauses") {
  GraphShape s1 = shape_of("b1 -> a\n");
  GraphShape s2p1 = shape_of("b1 -> a\nb2 -> a\nvertex c\n");
  GraphShape s2p4 = shape_of("b1 -> a\nb2 -> a\nw -- x\nx -- y\ny -- z\n");
  GraphShape dirother = shape_of("b1 -> a\na -- b2\n");

  CHECK_FALSE(decide_traag(s1, KnotCase::Unknot, false).embeds);
  CHECK_FALSE(decide_traag(s1, KnotCase::HyperbolicOnly, false).embeds);
  CHECK(decide_traag(s1, KnotCase::HyperbolicOnly, false).rule == "Thm1.2(1)");

  CHECK(decide_traag(s1, KnotCase::TorusKnot, true).embeds);
  CHECK_FALSE(decide_traag(s1, KnotCase::TorusKnot, false).embeds);
  CHECK_FALSE(decide_traag(s2p1, KnotCase::TorusKnot, true).embeds);  // not a single sink star

  CHECK(decide_traag(s2p1, KnotCase::MixedNoSS, true).embeds);
  CHECK_FALSE(decide_traag(s2p4, KnotCase::MixedNoSS, true).embeds);  // P_4 is not a star

  CHECK(decide_traag(s2p4, KnotCase::SSGluing, true).embeds);
  CHECK_FALSE(decide_traag(dirother, KnotCase::SSGluing, true).embeds);

  // even-type necessity: no branch may answer yes without an even piece
  const std::vector<GraphShape> shapes = {s1, s2p1, s2p4, dirother,
                                          shape_of("b1 -> a\nc -- d\nd -- e\ne -- c\n")};
  for (const GraphShape& sh : shapes)
    for (KnotCase kase : {KnotCase::Unknot, KnotCase::HyperbolicOnly, KnotCase::TorusKnot,
                          KnotCase::MixedNoSS, KnotCase::SSGluing})
      CHECK_FALSE(decide_traag(sh, kase, false).embeds);

  TRAAG_CHECK_ERROR(decide_traag(shape_of("a -- b\n"), KnotCase::TorusKnot, true),
                    NoDirectedEdges);
}

TEST_CASE("decision fixtures match the classification") {
  for (const auto& fx : decision_fixtures()) {
    CAPTURE(fx.name);
    MixedGraph g = parse_graph(fx.graph);
    KnotJsj j = parse_jsj(fx.jsj);
    Verdict v = decide(g, j);
    CHECK(v.embeds == fx.embeds);
    CHECK(v.rule == fx.rule);
    // a witness is constructible exactly for positive twisted verdicts
    bool twisted_yes = v.embeds && std::string(fx.rule).rfind("Thm1.2", 0) == 0;
    CHECK(v.witness_available == twisted_yes);
  }
}

TEST_CASE("the seven triangles never embed") {
  for (const char* graph_text : triangle_graphs()) {
    MixedGraph g = parse_graph(graph_text);
    CHECK(contains_triangle(g));
    for (const char* jsj_text : fixture_jsjs()) {
      CAPTURE(graph_text);
      CAPTURE(jsj_text);
      Verdict v = decide(g, parse_jsj(jsj_text));
      CHECK_FALSE(v.embeds);
    }
  }
}

TEST_CASE("positive verdicts are monotone under induced subgraphs") {
  for (const auto& fx : decision_fixtures()) {
    MixedGraph g = parse_graph(fx.graph);
    if (!fx.embeds || g.vertex_count() > 6) continue;
    KnotJsj j = parse_jsj(fx.jsj);
    const auto& verts = g.vertices();
    const int n = static_cast<int>(verts.size());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::string> keep;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) keep.push_back(verts[i]);
      CAPTURE(fx.name);
      CAPTURE(mask);
      CHECK(decide(induced_subgraph(g, keep), j).embeds);
    }
  }
}

TEST_CASE("decide is deterministic") {
  for (const auto& fx : decision_fixtures()) {
    MixedGraph g = parse_graph(fx.graph);
    KnotJsj j = parse_jsj(fx.jsj);
    Verdict a = decide(g, j);
    Verdict b = decide(g, j);
    CHECK(a == b);
    CHECK(render_machine(a) == render_machine(b));
  }
}

TEST_CASE("empty graph embeds trivially") {
  for (const char* jsj_text : fixture_jsjs()) {
    Verdict v = decide(MixedGraph{}, parse_jsj(jsj_text));
    CHECK(v.embeds);
    CHECK(v.rule == "TrivialGroup");
    CHECK_FALSE(v.witness_available);
  }
}

TEST_CASE("machine rendering") {
  Verdict v = decide(parse_graph(traag::testing::kGraphS1), parse_jsj("torus 2 3"));
  std::string out = render_machine(v);
  CHECK(out.rfind("embeds=true rule=Thm1.2(2)\n", 0) == 0);
}

TEST_SUITE_END();
