#include "traag/sink_star.hpp"

#include <sstream>

#include "traag/error.hpp"

namespace traag {

Word invert_generators(Word w) {
  for (Letter& l : w) l.sign = -l.sign;
  return w;
}

SinkStarElement sinkstar_normalize(int rank, Int a_exp, Word raw) {
  for (const Letter& l : raw)
    if (l.gen < 0 || l.gen >= rank)
      throw Error(ErrorCode::BadGeneratorIndex,
                  "letter index " + std::to_string(l.gen) + " outside 0.." +
                      std::to_string(rank - 1));
  return {rank, std::move(a_exp), free_reduce(std::move(raw))};
}

SinkStarElement sinkstar_multiply(const SinkStarElement& u, const SinkStarElement& v) {
  if (u.rank != v.rank)
    throw Error(ErrorCode::RankMismatch, "elements of A(S_n) for different n");
  Word left = (v.a_exp % 2 != 0) ? invert_generators(u.free_word) : u.free_word;
  left.insert(left.end(), v.free_word.begin(), v.free_word.end());
  return {u.rank, u.a_exp + v.a_exp, free_reduce(std::move(left))};
}

SinkStarElement sinkstar_inverse(const SinkStarElement& u) {
  Word inv = invert_word(u.free_word);
  if (u.a_exp % 2 != 0) inv = invert_generators(std::move(inv));
  return {u.rank, -u.a_exp, std::move(inv)};
}

std::string to_string(const SinkStarElement& e) {
  std::ostringstream out;
  out << '(' << e.a_exp << ", ";
  if (e.free_word.empty()) {
    out << '1';
  } else {
    bool first = true;
    for (const Letter& l : e.free_word) {
      if (!first) out << ' ';
      first = false;
      out << 'b' << (l.gen + 1);
      if (l.sign < 0) out << "^-1";
    }
  }
  out << ')';
  return out.str();
}

}  // namespace traag
