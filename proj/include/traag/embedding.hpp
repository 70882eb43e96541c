#pragma once

#include <map>
#include <string>
#include <vector>

#include "traag/amalgam.hpp"
#include "traag/mixed_graph.hpp"
#include "traag/sink_star.hpp"

namespace traag {

/// Images of TRAAG generators in a fixed amalgam group.
struct Assignment {
  GroupSpec spec;
  std::map<std::string, GroupWord> images;
};

/// The sink star S_n with head "a" and leaves "b1".."bn".
MixedGraph sink_star_graph(int n);

/// The explicit sink-star embedding into an even-type group with r = 2p:
/// head a -> x^p, leaf b_i -> z_i = [x^p, (yxy)^i]. Throws NotEvenType when
/// r is odd, and BadParameters for n < 1.
Assignment build_assignment(int n, const GroupSpec& spec);

/// Image of a^k f under the assignment, spelled a^k then the leaf letters.
/// Throws MissingGenerator.
GroupWord evaluate(const Assignment& asg, const SinkStarElement& e);

/// True iff every relator of the graph's presentation maps to the identity.
bool verify_relators(const Assignment& asg, const MixedGraph& g);

struct InjectivityReport {
  long long checked = 0;
  std::vector<SinkStarElement> violations;  // enumeration order
};

/// Enumerates every nontrivial (k, f) with |k| + length(f) <= bound and
/// reports those whose image is the identity; an empty violation list
/// certifies injectivity on the ball. Requires the relator check to pass
/// first (throws RelatorsNotVerified), so every violation is a genuine
/// kernel element.
InjectivityReport verify_injectivity_bounded(const Assignment& asg, int n, int bound);

/// `checked=<N> violations=<M>` then one `(k, word)` line per violation.
std::string render(const InjectivityReport& report);

}  // namespace traag
