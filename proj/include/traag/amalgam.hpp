#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "traag/error.hpp"
#include "traag/integers.hpp"

namespace traag {

/// A group with a central cyclic amalgam, one of
///
///   torus knot group  <x, y | x^r = y^s>          (r, s >= 2 coprime)
///   cable space group <x, y, t | x^r = t^r y^s, [y,t] = 1>
///                                                  (r >= 2, s != 0 coprime)
///
/// Both split as <x> *_H B over the central subgroup H = <h>, h = x^r, with
/// B = <y> in the torus case and B = <y, t> = Z^2 in the cable case. Every
/// element then has a unique normal form h^k c_1 c_2 ... c_m with the c_i
/// nontrivial coset representatives from alternating factors.
///
/// Coset representatives: on the x side, x^e with 0 < e < r. On the torus y
/// side, y^e with 0 < e < s. On the cable side B/H is infinite cyclic and a
/// representative is y^(c*m) t^(d*m) for m != 0, where the transversal vector
/// (c, d) satisfies s*d - r*c = 1; the canonical choice takes 0 <= c < |s|.
class GroupSpec {
 public:
  enum class Family { TorusKnot, Cable };

  static GroupSpec torus_knot(long long r, long long s);
  static GroupSpec cable(long long winding, long long slope);
  /// Same group as cable(), with an explicit transversal vector (for the
  /// invariance of is_identity under re-choice).
  static GroupSpec cable_with_transversal(long long winding, long long slope, long long c,
                                          long long d);
  /// Selector syntax: "torus:r,s" or "cable:r,s".
  static GroupSpec parse(std::string_view selector);

  Family family() const { return family_; }
  long long r() const { return r_; }
  long long s() const { return s_; }
  long long transversal_c() const { return c_; }
  long long transversal_d() const { return d_; }

  /// The exceptional-fiber generator x has even index.
  bool even_type() const { return r_ % 2 == 0; }

  int generator_count() const { return family_ == Family::TorusKnot ? 2 : 3; }
  std::string_view generator_name(int gen) const;
  /// -1 when the name is not a generator of this group.
  int generator_index(std::string_view name) const;
  std::string selector() const;

  bool operator==(const GroupSpec&) const = default;

 private:
  GroupSpec(Family family, long long r, long long s, long long c, long long d)
      : family_(family), r_(r), s_(s), c_(c), d_(d) {}

  Family family_;
  long long r_, s_;
  long long c_ = 0, d_ = 0;  // cable transversal
};

struct GroupLetter {
  int gen = 0;  // 0 = x, 1 = y, 2 = t
  Int exp;      // nonzero

  bool operator==(const GroupLetter&) const = default;
};

/// A word over a GroupSpec's alphabet. Adjacent letters always carry distinct
/// generators; appending merges and drops cancelled letters.
class GroupWord {
 public:
  explicit GroupWord(GroupSpec spec) : spec_(std::move(spec)) {}
  GroupWord(GroupSpec spec, const std::vector<GroupLetter>& letters);

  const GroupSpec& spec() const { return spec_; }
  const std::vector<GroupLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  void append(int gen, Int exp);
  void append(const GroupWord& other);  // SpecMismatch

  /// Structural comparison of spellings, not group equality.
  bool operator==(const GroupWord&) const = default;

 private:
  GroupSpec spec_;
  std::vector<GroupLetter> letters_;
};

/// One coset-representative syllable of a normal form. For the x factor the
/// payload is the exponent e in (0, r). For the torus y factor it is e in
/// (0, s); for the cable B factor it is the transversal coordinate m != 0,
/// spelling y^(c*m) t^(d*m).
struct Syllable {
  bool x_factor = false;
  Int e;

  bool operator==(const Syllable&) const = default;
};

struct AmalgamNormalForm {
  GroupSpec spec;
  Int central_exp;               // power of h = x^r
  std::vector<Syllable> syllables;  // alternating factors, all nontrivial

  bool is_identity() const { return central_exp == 0 && syllables.empty(); }
  bool operator==(const AmalgamNormalForm&) const = default;
};

/// Whitespace-separated `gen^exp` tokens, exponent optional (default 1),
/// negatives allowed. Throws UnknownGenerator / ZeroExponent / SyntaxError.
GroupWord parse_word(std::string_view text, const GroupSpec& spec);

/// The unique normal form of the element the word spells. Total; letters are
/// processed left to right, splitting each factor element into a central
/// h-power (moved to the front) times a coset representative, merging with a
/// same-factor syllable on top when present.
AmalgamNormalForm normal_form(const GroupWord& w);

bool is_identity(const GroupWord& w);
/// Same group element. Throws SpecMismatch across different specs.
bool equal(const GroupWord& u, const GroupWord& v);

GroupWord multiply(const GroupWord& u, const GroupWord& v);
GroupWord inverse(const GroupWord& u);
/// g^-1 u g
GroupWord conjugate(const GroupWord& u, const GroupWord& g);
/// u^-1 v^-1 u v
GroupWord commutator(const GroupWord& u, const GroupWord& v);
GroupWord power(const GroupWord& u, const Int& k);

std::size_t syllable_length(const AmalgamNormalForm& nf);

/// A word spelling the same element (h^k spelled as x^(r*k)).
GroupWord spell(const AmalgamNormalForm& nf);

/// "x^2 y^-3"; the empty word renders as "1".
std::string to_string(const GroupWord& w);
/// "h^-4 . x y^2 x y^2 x y x y"; the identity renders as "1".
std::string to_string(const AmalgamNormalForm& nf);

}  // namespace traag
