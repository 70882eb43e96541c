#include "traag/embedding.hpp"

#include <sstream>

#include "traag/presentation.hpp"

namespace traag {

MixedGraph sink_star_graph(int n) {
  if (n < 1) throw Error(ErrorCode::BadParameters, "sink star needs n >= 1");
  MixedGraph g;
  g.add_vertex("a");
  for (int i = 1; i <= n; ++i) g.add_directed("b" + std::to_string(i), "a");
  return g;
}

Assignment build_assignment(int n, const GroupSpec& spec) {
  if (n < 1) throw Error(ErrorCode::BadParameters, "sink star needs n >= 1");
  if (!spec.even_type())
    throw Error(ErrorCode::NotEvenType,
                "assignment a -> x^p needs even r = 2p; " + spec.selector() + " has odd r");
  const long long p = spec.r() / 2;

  GroupWord head(spec);
  head.append(0, p);
  GroupWord yxy(spec);
  yxy.append(1, 1);
  yxy.append(0, 1);
  yxy.append(1, 1);

  Assignment asg{spec, {}};
  asg.images.emplace("a", head);
  for (int i = 1; i <= n; ++i)
    asg.images.emplace("b" + std::to_string(i), commutator(head, power(yxy, i)));
  return asg;
}

GroupWord evaluate(const Assignment& asg, const SinkStarElement& e) {
  auto image = [&](const std::string& name) -> const GroupWord& {
    auto it = asg.images.find(name);
    if (it == asg.images.end())
      throw Error(ErrorCode::MissingGenerator, "assignment has no image for '" + name + "'");
    return it->second;
  };
  GroupWord out = power(image("a"), e.a_exp);
  for (const Letter& l : e.free_word) {
    const GroupWord& img = image("b" + std::to_string(l.gen + 1));
    out.append(l.sign > 0 ? img : inverse(img));
  }
  return out;
}

bool verify_relators(const Assignment& asg, const MixedGraph& g) {
  Presentation p = traag_presentation(g);
  std::vector<const GroupWord*> images(p.generators.size());
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    auto it = asg.images.find(p.generators[i]);
    if (it == asg.images.end())
      throw Error(ErrorCode::MissingGenerator,
                  "assignment has no image for '" + p.generators[i] + "'");
    images[i] = &it->second;
  }
  for (const Word& rel : p.relators) {
    GroupWord img(asg.spec);
    for (const Letter& l : rel)
      img.append(l.sign > 0 ? *images[l.gen] : inverse(*images[l.gen]));
    if (!is_identity(img)) return false;
  }
  return true;
}

namespace {

// reduced words of exact length over rank generators, lexicographic:
// (b1, +) < (b1, -) < (b2, +) < ...
template <typename Fn>
void each_reduced_word(int rank, int length, Word& cur, const Fn& fn) {
  if (length == 0) {
    fn(cur);
    return;
  }
  for (int code = 0; code < 2 * rank; ++code) {
    if (!cur.empty()) {
      int prev = cur.back().gen * 2 + (cur.back().sign < 0 ? 1 : 0);
      if ((prev ^ 1) == code) continue;  // would cancel
    }
    cur.push_back({code / 2, code % 2 ? -1 : 1});
    each_reduced_word(rank, length - 1, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

InjectivityReport verify_injectivity_bounded(const Assignment& asg, int n, int bound) {
  if (!verify_relators(asg, sink_star_graph(n)))
    throw Error(ErrorCode::RelatorsNotVerified,
                "relator images are not all trivial; the map is not a homomorphism");

  InjectivityReport report;
  for (int k = -bound; k <= bound; ++k) {
    int max_len = bound - (k < 0 ? -k : k);
    for (int len = 0; len <= max_len; ++len) {
      if (k == 0 && len == 0) continue;  // skip the identity
      Word cur;
      each_reduced_word(n, len, cur, [&](const Word& f) {
        SinkStarElement e{n, k, f};
        ++report.checked;
        if (is_identity(evaluate(asg, e))) report.violations.push_back(e);
      });
    }
  }
  return report;
}

std::string render(const InjectivityReport& report) {
  std::ostringstream out;
  out << "checked=" << report.checked << " violations=" << report.violations.size() << '\n';
  for (const SinkStarElement& e : report.violations) out << to_string(e) << '\n';
  return out.str();
}

}  // namespace traag
