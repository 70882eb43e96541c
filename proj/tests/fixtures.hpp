#pragma once

// Golden decision fixtures shared by the unit suite and the acceptance suite:
// (graph, descriptor) pairs with the required verdict and rule tag, covering
// every clause of both classification theorems in both polarities, plus the
// unknot and the empty graph.

#include <vector>

namespace traag::testing {

struct DecisionFixture {
  const char* name;
  const char* graph;
  const char* jsj;
  bool embeds;
  const char* rule;
};

// graphs
inline constexpr const char* kGraphS1 = "b1 -> a\n";
inline constexpr const char* kGraphS3 = "b1 -> a\nb2 -> a\nb3 -> a\n";
inline constexpr const char* kGraphS2P1 = "b1 -> a\nb2 -> a\nvertex c\n";
inline constexpr const char* kGraphT2 = "a -- b\na -- c\n";
inline constexpr const char* kGraphT2P1 = "a -- b\na -- c\nvertex d\n";
inline constexpr const char* kGraphP1 = "vertex a\n";
inline constexpr const char* kGraph3P1 = "vertex u\nvertex v\nvertex w\n";
inline constexpr const char* kGraph2P2P1 = "a -- b\nc -- d\nvertex e\n";
inline constexpr const char* kGraphT2T3 = "a -- b\na -- c\nd -- e\nd -- f\nd -- g\n";
inline constexpr const char* kGraphP1T2T3 =
    "vertex p\na -- b\na -- c\nd -- e\nd -- f\nd -- g\n";
inline constexpr const char* kGraphP4 = "w -- x\nx -- y\ny -- z\n";
inline constexpr const char* kGraphS2P4 = "b1 -> a\nb2 -> a\nw -- x\nx -- y\ny -- z\n";
inline constexpr const char* kGraphT2S1 = "a -- b\na -- c\nb1 -> z\n";
inline constexpr const char* kGraph2P1T2S3 =
    "vertex p\nvertex q\nc -- d\nc -- e\nb1 -> a\nb2 -> a\nb3 -> a\n";
inline constexpr const char* kGraphTriangle = "a -- b\nb -- c\nc -- a\n";
inline constexpr const char* kGraphDirectedOther = "b1 -> a\na -- b2\n";
inline constexpr const char* kGraphS1Triangle = "b1 -> a\nc -- d\nd -- e\ne -- c\n";
inline constexpr const char* kGraphEmpty = "";

// descriptors
inline constexpr const char* kJsjTrefoil = "torus 2 3";
inline constexpr const char* kJsjOddTorus = "torus 3 5";
inline constexpr const char* kJsjHyp = "hyperbolic";
inline constexpr const char* kJsjTwoHyp = "hyperbolic ; hyperbolic ; glue 0 1 ; boundary 0";
inline constexpr const char* kJsjMixedEven = "cable 2 3 ; hyperbolic ; glue 0 1 ; boundary 0";
inline constexpr const char* kJsjMixedOdd = "cable 3 2 ; hyperbolic ; glue 0 1 ; boundary 0";
inline constexpr const char* kJsjSsEven = "cable 2 3 ; torus 2 3 ; glue 0 1 ; boundary 0";
inline constexpr const char* kJsjSsOdd = "cable 3 2 ; torus 3 5 ; glue 0 1 ; boundary 0";
inline constexpr const char* kJsjUnknot = "unknot";
inline constexpr const char* kJsjCompositeSs =
    "composing 3 ; torus 2 3 ; torus 3 5 ; glue 0 1 ; glue 0 2 ; boundary 0";
inline constexpr const char* kJsjCompositeHyp =
    "composing 3 ; hyperbolic ; hyperbolic ; glue 0 1 ; glue 0 2 ; boundary 0";

inline const std::vector<const char*>& fixture_jsjs() {
  static const std::vector<const char*> all = {
      kJsjTrefoil,  kJsjOddTorus, kJsjHyp,    kJsjTwoHyp,      kJsjMixedEven, kJsjMixedOdd,
      kJsjSsEven,   kJsjSsOdd,    kJsjUnknot, kJsjCompositeSs, kJsjCompositeHyp,
  };
  return all;
}

inline const std::vector<DecisionFixture>& decision_fixtures() {
  static const std::vector<DecisionFixture> all = {
      // Katayama clauses (no directed edge)
      {"2P2+P1 / hyperbolic", kGraph2P2P1, kJsjHyp, true, "Thm1.1(1)"},
      {"T2 / hyperbolic", kGraphT2, kJsjHyp, false, "Thm1.1(1)"},
      {"T2 / two hyperbolic", kGraphT2, kJsjTwoHyp, false, "Thm1.1(1)"},
      {"3P1 / trefoil", kGraph3P1, kJsjTrefoil, true, "Thm1.1(2)"},
      {"T2 / trefoil", kGraphT2, kJsjTrefoil, true, "Thm1.1(2)"},
      {"T2+T3 / trefoil", kGraphT2T3, kJsjTrefoil, false, "Thm1.1(2)"},
      {"T2+P1 / trefoil", kGraphT2P1, kJsjTrefoil, false, "Thm1.1(2)"},
      {"P1+T2+T3 / mixed even", kGraphP1T2T3, kJsjMixedEven, true, "Thm1.1(3)"},
      {"P4 / mixed even", kGraphP4, kJsjMixedEven, false, "Thm1.1(3)"},
      {"P4 / SS even", kGraphP4, kJsjSsEven, true, "Thm1.1(4)"},
      {"triangle / SS even", kGraphTriangle, kJsjSsEven, false, "Thm1.1(4)"},
      {"P1 / unknot", kGraphP1, kJsjUnknot, true, "Unknot"},
      {"2P2+P1 / unknot", kGraph2P2P1, kJsjUnknot, false, "Unknot"},
      // twisted clauses (at least one directed edge)
      {"S1 / hyperbolic", kGraphS1, kJsjHyp, false, "Thm1.2(1)"},
      {"S3 / two hyperbolic", kGraphS3, kJsjTwoHyp, false, "Thm1.2(1)"},
      {"S1 / trefoil", kGraphS1, kJsjTrefoil, true, "Thm1.2(2)"},
      {"S3 / trefoil", kGraphS3, kJsjTrefoil, true, "Thm1.2(2)"},
      {"S2+P1 / trefoil", kGraphS2P1, kJsjTrefoil, false, "Thm1.2(2)"},
      {"S1 / odd torus", kGraphS1, kJsjOddTorus, false, "Thm1.2(2)"},
      {"2P1+T2+S3 / mixed even", kGraph2P1T2S3, kJsjMixedEven, true, "Thm1.2(3)"},
      {"2P1+T2+S3 / mixed odd", kGraph2P1T2S3, kJsjMixedOdd, false, "Thm1.2(3)"},
      {"S2+P4 / mixed even", kGraphS2P4, kJsjMixedEven, false, "Thm1.2(3)"},
      {"S2+P1 / mixed even", kGraphS2P1, kJsjMixedEven, true, "Thm1.2(3)"},
      {"T2+S1 / mixed even", kGraphT2S1, kJsjMixedEven, true, "Thm1.2(3)"},
      {"S2+P4 / SS even", kGraphS2P4, kJsjSsEven, true, "Thm1.2(4)"},
      {"S2+P4 / SS odd", kGraphS2P4, kJsjSsOdd, false, "Thm1.2(4)"},
      {"directed non-sink-star / SS even", kGraphDirectedOther, kJsjSsEven, false, "Thm1.2(4)"},
      {"S3 / composite SS", kGraphS3, kJsjCompositeSs, true, "Thm1.2(4)"},
      {"S1 / composite hyperbolic", kGraphS1, kJsjCompositeHyp, false, "Thm1.2(3)"},
      {"S1 / unknot", kGraphS1, kJsjUnknot, false, "Unknot"},
      {"empty / trefoil", kGraphEmpty, kJsjTrefoil, true, "TrivialGroup"},
      {"S1+triangle / trefoil", kGraphS1Triangle, kJsjTrefoil, false, "Thm1.2(2)"},
  };
  return all;
}

// the seven triangle orientation types, each embedded in a larger graph
// (pendant vertex d on a plus an isolated vertex e)
inline const std::vector<const char*>& triangle_graphs() {
  static const std::vector<const char*> all = {
      "a -- b\nb -- c\nc -- a\nd -- a\nvertex e\n",  // (a) undirected
      "a -> b\nc -- a\nc -- b\nd -- a\nvertex e\n",  // (b) one directed
      "a -> b\nc -> b\nc -- a\nd -- a\nvertex e\n",  // (c) two directed, common head
      "a -> b\nb -> c\nc -- a\nd -- a\nvertex e\n",  // (d) two directed, chain
      "b -> a\nb -> c\nc -- a\nd -- a\nvertex e\n",  // (e) two directed, common tail
      "a -> b\nb -> c\nc -> a\nd -- a\nvertex e\n",  // (f) directed cycle
      "a -> b\nb -> c\na -> c\nd -- a\nvertex e\n",  // (g) all directed, acyclic
  };
  return all;
}

}  // namespace traag::testing
