#pragma once

#include <string>

#include "traag/integers.hpp"
#include "traag/presentation.hpp"

namespace traag {

/// Element of the sink-star group
///
///   A(S_n) = <a, b_1..b_n | b_i a b_i = a>,
///
/// in semidirect normal form a^k f: the relations force a b_i a^-1 = b_i^-1,
/// so A(S_n) = F_n x| Z with conjugation by a inverting every leaf generator
/// (an involution). (k, f) with f freely reduced is unique per element.
struct SinkStarElement {
  int rank = 0;  // number of leaf generators
  Int a_exp;
  Word free_word;  // letters over generators 0..rank-1, freely reduced

  bool is_identity() const { return a_exp == 0 && free_word.empty(); }
  bool operator==(const SinkStarElement&) const = default;
};

/// Flips the sign of every letter: the action of conjugation by a.
Word invert_generators(Word w);

/// Builds a^k * w with w reduced. Throws BadGeneratorIndex.
SinkStarElement sinkstar_normalize(int rank, Int a_exp, Word raw);

/// (k, f) * (l, g) = (k + l, phi^l(f) g); only the parity of l matters.
/// Throws RankMismatch.
SinkStarElement sinkstar_multiply(const SinkStarElement& u, const SinkStarElement& v);

SinkStarElement sinkstar_inverse(const SinkStarElement& u);

/// "(k, b1 b2^-1)"; the empty free word renders as 1.
std::string to_string(const SinkStarElement& e);

}  // namespace traag
