#include "traag/decision.hpp"

#include <algorithm>
#include <sstream>

namespace traag {

namespace {

Verdict make(bool embeds, std::string rule, std::vector<std::string> diags,
             bool witness = false) {
  return Verdict{embeds, std::move(rule), std::move(diags), witness};
}

void shape_exclusions(const GraphShape& sh, std::vector<std::string>& diags) {
  if (sh.cyclic_count > 0)
    diags.push_back("a component contains a cycle; the underlying graph must be a forest");
  if (sh.directed_other_count > 0)
    diags.push_back("a component carries a directed edge but is not a sink star");
}

const std::string kTrivialDiag = "empty graph: the trivial group embeds everywhere";

}  // namespace

Verdict decide_raag(const GraphShape& sh, KnotCase kase) {
  if (sh.has_directed_tree_component())
    throw Error(ErrorCode::HasDirectedEdges,
                "shape has directed-edge components; route to decide_traag");
  if (sh.empty()) return make(true, "TrivialGroup", {kTrivialDiag});

  std::vector<std::string> diags;
  shape_exclusions(sh, diags);
  const bool forest = sh.cyclic_count == 0;

  switch (kase) {
    case KnotCase::Unknot: {
      bool ok = forest && sh.isolated_count == 1 && sh.star_sizes.empty() &&
                sh.other_tree_count == 0;
      diags.push_back(ok ? "unknot group is Z; a single vertex gives Z"
                         : "unknot group is Z; only a single vertex embeds");
      return make(ok, "Unknot", std::move(diags));
    }
    case KnotCase::HyperbolicOnly: {
      bool edges_only =
          std::all_of(sh.star_sizes.begin(), sh.star_sizes.end(), [](int n) { return n == 1; });
      bool ok = forest && sh.other_tree_count == 0 && edges_only;
      diags.push_back(ok ? "shape is mP_1 + nP_2"
                         : "only isolated vertices and single edges (mP_1 + nP_2) embed "
                           "when every piece is hyperbolic");
      return make(ok, "Thm1.1(1)", std::move(diags));
    }
    case KnotCase::TorusKnot: {
      bool only_isolated = forest && sh.isolated_count >= 1 && sh.star_sizes.empty() &&
                           sh.other_tree_count == 0;
      bool single_star = forest && sh.star_sizes.size() == 1 && sh.isolated_count == 0 &&
                         sh.other_tree_count == 0;
      bool ok = only_isolated || single_star;
      diags.push_back(ok ? (only_isolated ? "shape is mP_1" : "shape is a single star")
                         : "a torus knot group admits mP_1 or one star T_n, nothing else");
      return make(ok, "Thm1.1(2)", std::move(diags));
    }
    case KnotCase::MixedNoSS: {
      bool ok = forest && sh.other_tree_count == 0;
      diags.push_back(ok ? "shape is mP_1 + sum of stars"
                         : "without a Seifert-Seifert gluing only mP_1 + stars embed");
      return make(ok, "Thm1.1(3)", std::move(diags));
    }
    case KnotCase::SSGluing: {
      diags.push_back(forest ? "graph is a forest"
                             : "graph is not a forest");
      return make(forest, "Thm1.1(4)", std::move(diags));
    }
  }
  throw Error(ErrorCode::Inconsistent, "unreachable knot case");
}

Verdict decide_traag(const GraphShape& sh, KnotCase kase, bool even_piece) {
  if (!sh.has_directed_tree_component() && sh.cyclic_count == 0)
    throw Error(ErrorCode::NoDirectedEdges,
                "shape has no directed-edge components; route to decide_raag");

  std::vector<std::string> diags;
  shape_exclusions(sh, diags);
  // every directed component a sink star, everything else a tree
  const bool tame = sh.cyclic_count == 0 && sh.directed_other_count == 0;

  switch (kase) {
    case KnotCase::Unknot:
      diags.push_back("unknot group is Z and admits no Klein relation");
      return make(false, "Unknot", std::move(diags));
    case KnotCase::HyperbolicOnly:
      diags.push_back(
          "a Klein relation needs a Seifert fibered piece; every piece is hyperbolic");
      return make(false, "Thm1.2(1)", std::move(diags));
    case KnotCase::TorusKnot: {
      bool single_sink = tame && sh.sink_star_sizes.size() == 1 && sh.isolated_count == 0 &&
                         sh.star_sizes.empty() && sh.other_tree_count == 0;
      bool ok = even_piece && single_sink;
      if (!even_piece) diags.push_back("the torus knot is not of even type");
      if (!single_sink)
        diags.push_back("the graph must be exactly one sink star, with no other component");
      if (ok) diags.push_back("even torus knot and a single sink star");
      return make(ok, "Thm1.2(2)", std::move(diags), ok);
    }
    case KnotCase::MixedNoSS: {
      bool shape_ok = tame && sh.other_tree_count == 0;
      bool ok = even_piece && shape_ok;
      if (!even_piece) diags.push_back("no Seifert fibered piece of even type");
      if (!shape_ok)
        diags.push_back(
            "without a Seifert-Seifert gluing the shape must be mP_1 + stars + sink stars");
      if (ok) diags.push_back("even piece present and shape is mP_1 + stars + sink stars");
      return make(ok, "Thm1.2(3)", std::move(diags), ok);
    }
    case KnotCase::SSGluing: {
      bool ok = even_piece && tame;
      if (!even_piece) diags.push_back("no Seifert fibered piece of even type");
      if (!tame)
        diags.push_back("the shape must be sink stars plus a forest");
      if (ok) diags.push_back("even piece present and shape is sink stars plus a forest");
      return make(ok, "Thm1.2(4)", std::move(diags), ok);
    }
  }
  throw Error(ErrorCode::Inconsistent, "unreachable knot case");
}

Verdict decide(const MixedGraph& g, const KnotJsj& j) {
  KnotCase kase = knot_case(j);
  if (g.vertex_count() == 0) return make(true, "TrivialGroup", {kTrivialDiag});

  GraphShape sh = graph_shape(g);
  Verdict v = g.directed_edges().empty()
                  ? decide_raag(sh, kase)
                  : decide_traag(sh, kase, has_even_seifert_piece(j));
  if (!v.embeds && sh.cyclic_count > 0 && contains_triangle(g))
    v.diagnostics.push_back("underlying graph contains a triangle");
  return v;
}

std::string render_machine(const Verdict& v) {
  std::ostringstream out;
  out << "embeds=" << (v.embeds ? "true" : "false") << " rule=" << v.rule << '\n';
  for (const auto& d : v.diagnostics) out << d << '\n';
  return out.str();
}

}  // namespace traag
