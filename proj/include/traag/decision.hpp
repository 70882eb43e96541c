#pragma once

#include <string>
#include <vector>

#include "traag/knot_jsj.hpp"
#include "traag/mixed_graph.hpp"

namespace traag {

/// Outcome of an embeddability query. `rule` is one of the stable tags
/// "Thm1.1(1)".."Thm1.1(4)", "Thm1.2(1)".."Thm1.2(4)", "Unknot",
/// "TrivialGroup". `witness_available` is set exactly when the embedding
/// module can construct and machine-verify a sink-star embedding for the
/// verdict (even torus-knot or cable piece).
struct Verdict {
  bool embeds = false;
  std::string rule;
  std::vector<std::string> diagnostics;
  bool witness_available = false;

  bool operator==(const Verdict&) const = default;
};

/// The right-angled case: no directed-edge tree component allowed
/// (throws HasDirectedEdges otherwise).
Verdict decide_raag(const GraphShape& shape, KnotCase kase);

/// The twisted case: requires a directed edge somewhere in the shape
/// (throws NoDirectedEdges otherwise). `even_piece` is
/// has_even_seifert_piece of the descriptor.
Verdict decide_traag(const GraphShape& shape, KnotCase kase, bool even_piece);

/// Full dispatch on a parsed graph and descriptor.
Verdict decide(const MixedGraph& g, const KnotJsj& j);

/// Machine rendering: `embeds=<bool> rule=<tag>` then one diagnostic per line.
std::string render_machine(const Verdict& v);

}  // namespace traag
