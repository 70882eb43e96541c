#include "traag/presentation.hpp"

#include <sstream>

#include "traag/smith.hpp"

namespace traag {

Presentation traag_presentation(const MixedGraph& g) {
  Presentation p;
  p.generators = g.vertices();
  for (auto [a, b] : g.undirected_edges())
    p.relators.push_back({{a, 1}, {b, 1}, {a, -1}, {b, -1}});
  for (auto [tail, head] : g.directed_edges())
    p.relators.push_back({{tail, 1}, {head, 1}, {tail, 1}, {head, -1}});
  return p;
}

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word invert_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->sign});
  return out;
}

std::string serialize(const Presentation& p) {
  std::ostringstream out;
  out << "gens:";
  for (const auto& g : p.generators) out << ' ' << g;
  out << '\n';
  for (const Word& rel : p.relators) {
    bool first = true;
    for (const Letter& l : rel) {
      if (!first) out << ' ';
      first = false;
      out << p.generators[l.gen];
      if (l.sign < 0) out << "^-1";
    }
    out << '\n';
  }
  return out.str();
}

AbelianInvariants abelianization(const Presentation& p) {
  const std::size_t n = p.generators.size();
  AbelianInvariants inv;
  if (n == 0) return inv;

  IntMatrix m;
  m.reserve(p.relators.size());
  for (const Word& rel : p.relators) {
    std::vector<Int> row(n, 0);
    for (const Letter& l : rel) row[l.gen] += l.sign;
    m.push_back(std::move(row));
  }
  std::vector<Int> d = smith_normal_form(m);
  inv.free_rank = static_cast<int>(n - d.size());
  for (Int& e : d)
    if (e >= 2) inv.torsion.push_back(std::move(e));
  return inv;
}

std::string render(const AbelianInvariants& inv) {
  std::vector<std::string> terms;
  if (inv.free_rank == 1) terms.push_back("Z");
  else if (inv.free_rank > 1)
    terms.push_back("Z^" + std::to_string(inv.free_rank));
  for (std::size_t i = 0; i < inv.torsion.size();) {
    std::size_t j = i;
    while (j < inv.torsion.size() && inv.torsion[j] == inv.torsion[i]) ++j;
    std::string factor = "Z/" + inv.torsion[i].str();
    if (j - i > 1) factor = "(" + factor + ")^" + std::to_string(j - i);
    terms.push_back(factor);
    i = j;
  }
  if (terms.empty()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    out += terms[i];
  }
  return out;
}

}  // namespace traag
