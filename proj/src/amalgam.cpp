#include "traag/amalgam.hpp"

#include <numeric>
#include <sstream>

namespace traag {

namespace {

long long abs_ll(long long v) { return v < 0 ? -v : v; }

}  // namespace

GroupSpec GroupSpec::torus_knot(long long r, long long s) {
  if (r < 2 || s < 2)
    throw Error(ErrorCode::BadParameters, "torus knot group needs r, s >= 2");
  if (std::gcd(r, s) != 1)
    throw Error(ErrorCode::BadParameters, "torus knot group needs gcd(r, s) = 1");
  return GroupSpec(Family::TorusKnot, r, s, 0, 0);
}

GroupSpec GroupSpec::cable(long long winding, long long slope) {
  if (winding < 2) throw Error(ErrorCode::BadParameters, "cable group needs winding >= 2");
  if (slope == 0) throw Error(ErrorCode::BadParameters, "cable group needs a nonzero slope");
  if (std::gcd(winding, abs_ll(slope)) != 1)
    throw Error(ErrorCode::BadParameters, "cable group needs gcd(winding, slope) = 1");
  // canonical transversal: s*d - r*c = 1 with 0 <= c < |s|
  ExtGcd e = ext_gcd(slope, winding);
  long long c0 = -e.v, d0 = e.u;
  long long m = abs_ll(slope);
  long long c = ((c0 % m) + m) % m;
  long long j = (c - c0) / slope;
  long long d = d0 + j * winding;
  return cable_with_transversal(winding, slope, c, d);
}

GroupSpec GroupSpec::cable_with_transversal(long long winding, long long slope, long long c,
                                            long long d) {
  if (winding < 2) throw Error(ErrorCode::BadParameters, "cable group needs winding >= 2");
  if (slope == 0) throw Error(ErrorCode::BadParameters, "cable group needs a nonzero slope");
  if (std::gcd(winding, abs_ll(slope)) != 1)
    throw Error(ErrorCode::BadParameters, "cable group needs gcd(winding, slope) = 1");
  if (slope * d - winding * c != 1)
    throw Error(ErrorCode::BadParameters, "transversal (c, d) must satisfy s*d - r*c = 1");
  return GroupSpec(Family::Cable, winding, slope, c, d);
}

GroupSpec GroupSpec::parse(std::string_view selector) {
  auto colon = selector.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorCode::SyntaxError, "group selector '" + std::string(selector) +
                                            "' (want torus:r,s or cable:r,s)");
  std::string_view head = selector.substr(0, colon);
  std::string rest(selector.substr(colon + 1));
  auto comma = rest.find(',');
  if (comma == std::string::npos)
    throw Error(ErrorCode::SyntaxError, "group selector '" + std::string(selector) + "'");
  long long a = 0, b = 0;
  try {
    std::size_t ua = 0, ub = 0;
    a = std::stoll(rest.substr(0, comma), &ua);
    b = std::stoll(rest.substr(comma + 1), &ub);
    if (ua != comma || ub != rest.size() - comma - 1) throw std::invalid_argument(rest);
  } catch (const std::exception&) {
    throw Error(ErrorCode::SyntaxError, "group selector '" + std::string(selector) + "'");
  }
  if (head == "torus") return torus_knot(a, b);
  if (head == "cable") return cable(a, b);
  throw Error(ErrorCode::SyntaxError,
              "unknown group family '" + std::string(head) + "' (want torus or cable)");
}

std::string_view GroupSpec::generator_name(int gen) const {
  switch (gen) {
    case 0: return "x";
    case 1: return "y";
    case 2: return "t";
  }
  return "?";
}

int GroupSpec::generator_index(std::string_view name) const {
  if (name == "x") return 0;
  if (name == "y") return 1;
  if (name == "t" && family_ == Family::Cable) return 2;
  return -1;
}

std::string GroupSpec::selector() const {
  std::string out = family_ == Family::TorusKnot ? "torus:" : "cable:";
  out += std::to_string(r_) + "," + std::to_string(s_);
  return out;
}

GroupWord::GroupWord(GroupSpec spec, const std::vector<GroupLetter>& letters)
    : spec_(std::move(spec)) {
  for (const GroupLetter& l : letters) append(l.gen, l.exp);
}

void GroupWord::append(int gen, Int exp) {
  if (exp == 0) return;
  if (gen < 0 || gen >= spec_.generator_count())
    throw Error(ErrorCode::UnknownGenerator, "generator index " + std::to_string(gen));
  if (!letters_.empty() && letters_.back().gen == gen) {
    letters_.back().exp += exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back({gen, std::move(exp)});
}

void GroupWord::append(const GroupWord& other) {
  if (!(spec_ == other.spec_))
    throw Error(ErrorCode::SpecMismatch, "words live in different groups");
  for (const GroupLetter& l : other.letters_) append(l.gen, l.exp);
}

GroupWord parse_word(std::string_view text, const GroupSpec& spec) {
  GroupWord w(spec);
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::string name = tok;
    Int exp = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string digits = tok.substr(caret + 1);
      if (digits.empty() ||
          digits.find_first_not_of("-0123456789") != std::string::npos ||
          digits.find('-', 1) != std::string::npos || digits == "-")
        throw Error(ErrorCode::SyntaxError, "token '" + tok + "'");
      exp = Int(digits);
    }
    int gen = spec.generator_index(name);
    if (gen < 0) throw Error(ErrorCode::UnknownGenerator, "token '" + tok + "'");
    if (exp == 0) throw Error(ErrorCode::ZeroExponent, "token '" + tok + "'");
    w.append(gen, exp);
  }
  return w;
}

namespace {

// Streaming normal-form builder: central h-exponent plus a syllable stack.
struct Builder {
  explicit Builder(const GroupSpec& spec) : gs(spec) {}

  const GroupSpec& gs;
  Int central = 0;
  std::vector<Syllable> syl;

  void push_x(const Int& a) {
    Int total = a;
    if (!syl.empty() && syl.back().x_factor) {
      total += syl.back().e;
      syl.pop_back();
    }
    central += floordiv(total, gs.r());
    Int res = floormod(total, gs.r());
    if (res != 0) syl.push_back({true, std::move(res)});
  }

  // torus y side: split off h = y^s
  void push_y_torus(const Int& a) {
    Int total = a;
    if (!syl.empty() && !syl.back().x_factor) {
      total += syl.back().e;
      syl.pop_back();
    }
    central += floordiv(total, gs.s());
    Int res = floormod(total, gs.s());
    if (res != 0) syl.push_back({false, std::move(res)});
  }

  // cable B side: element y^alpha t^beta; with basis {(s, r), (c, d)} of Z^2
  // the h-part is d*alpha - c*beta and the coordinate increment s*beta - r*alpha
  void push_b_cable(const Int& alpha, const Int& beta) {
    Int m = gs.s() * beta - gs.r() * alpha;
    central += gs.transversal_d() * alpha - gs.transversal_c() * beta;
    if (!syl.empty() && !syl.back().x_factor) {
      m += syl.back().e;
      syl.pop_back();
    }
    if (m != 0) syl.push_back({false, std::move(m)});
  }
};

}  // namespace

AmalgamNormalForm normal_form(const GroupWord& w) {
  const GroupSpec& gs = w.spec();
  Builder b(gs);
  for (const GroupLetter& l : w.letters()) {
    if (l.gen == 0) b.push_x(l.exp);
    else if (gs.family() == GroupSpec::Family::TorusKnot) b.push_y_torus(l.exp);
    else if (l.gen == 1) b.push_b_cable(l.exp, 0);
    else b.push_b_cable(0, l.exp);
  }
  return AmalgamNormalForm{gs, std::move(b.central), std::move(b.syl)};
}

bool is_identity(const GroupWord& w) { return normal_form(w).is_identity(); }

bool equal(const GroupWord& u, const GroupWord& v) {
  if (!(u.spec() == v.spec()))
    throw Error(ErrorCode::SpecMismatch, "words live in different groups");
  return normal_form(u) == normal_form(v);
}

GroupWord multiply(const GroupWord& u, const GroupWord& v) {
  GroupWord out = u;
  out.append(v);
  return out;
}

GroupWord inverse(const GroupWord& u) {
  GroupWord out(u.spec());
  const auto& ls = u.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.append(it->gen, -it->exp);
  return out;
}

GroupWord conjugate(const GroupWord& u, const GroupWord& g) {
  GroupWord out = inverse(g);
  out.append(u);
  out.append(g);
  return out;
}

GroupWord commutator(const GroupWord& u, const GroupWord& v) {
  GroupWord out = inverse(u);
  out.append(inverse(v));
  out.append(u);
  out.append(v);
  return out;
}

GroupWord power(const GroupWord& u, const Int& k) {
  GroupWord out(u.spec());
  GroupWord base = k < 0 ? inverse(u) : u;
  for (Int i = 0, n = boost::multiprecision::abs(k); i < n; ++i) out.append(base);
  return out;
}

std::size_t syllable_length(const AmalgamNormalForm& nf) { return nf.syllables.size(); }

GroupWord spell(const AmalgamNormalForm& nf) {
  GroupWord w(nf.spec);
  w.append(0, nf.central_exp * nf.spec.r());
  for (const Syllable& s : nf.syllables) {
    if (s.x_factor) {
      w.append(0, s.e);
    } else if (nf.spec.family() == GroupSpec::Family::TorusKnot) {
      w.append(1, s.e);
    } else {
      w.append(1, s.e * nf.spec.transversal_c());
      w.append(2, s.e * nf.spec.transversal_d());
    }
  }
  return w;
}

std::string to_string(const GroupWord& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const GroupLetter& l : w.letters()) {
    if (!first) out << ' ';
    first = false;
    out << w.spec().generator_name(l.gen);
    if (l.exp != 1) out << '^' << l.exp;
  }
  return out.str();
}

std::string to_string(const AmalgamNormalForm& nf) {
  if (nf.is_identity()) return "1";
  std::ostringstream out;
  out << "h^" << nf.central_exp;
  if (!nf.syllables.empty()) {
    GroupWord tail(nf.spec);
    for (const Syllable& s : nf.syllables) {
      if (s.x_factor) {
        tail.append(0, s.e);
      } else if (nf.spec.family() == GroupSpec::Family::TorusKnot) {
        tail.append(1, s.e);
      } else {
        tail.append(1, s.e * nf.spec.transversal_c());
        tail.append(2, s.e * nf.spec.transversal_d());
      }
    }
    out << " . " << to_string(tail);
  }
  return out.str();
}

}  // namespace traag
