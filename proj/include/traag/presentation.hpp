#pragma once

#include <string>
#include <vector>

#include "traag/integers.hpp"
#include "traag/mixed_graph.hpp"

namespace traag {

/// One letter of a group word: generator index and exponent sign.
struct Letter {
  int gen = 0;
  int sign = 1;  // +1 or -1

  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

/// Presentation of the group of a mixed graph: a commutator x y x^-1 y^-1 per
/// undirected edge and a Klein relator x y x y^-1 (i.e. xyx = y) per directed
/// edge with tail x and head y. Generators follow graph vertex order.
Presentation traag_presentation(const MixedGraph& g);

/// Cancels adjacent inverse pairs until none remain.
Word free_reduce(Word w);

Word invert_word(const Word& w);

/// `gens: a b c` line, then one relator per line as `a b a^-1 b^-1`.
std::string serialize(const Presentation& p);

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<Int> torsion;  // divisor chain, every entry >= 2

  bool operator==(const AbelianInvariants&) const = default;
};

/// Invariants of the abelianized group, via the Smith normal form of the
/// relator exponent-sum matrix.
AbelianInvariants abelianization(const Presentation& p);

/// "Z + (Z/2)^3", "Z^2", "trivial", ...
std::string render(const AbelianInvariants& inv);

}  // namespace traag
