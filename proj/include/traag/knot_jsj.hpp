#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "traag/error.hpp"

namespace traag {

struct Hyperbolic {
  bool operator==(const Hyperbolic&) const = default;
};

struct TorusKnotExterior {
  long long r = 0, s = 0;  // coprime, both >= 2

  bool operator==(const TorusKnotExterior&) const = default;
};

struct CableSpace {
  long long winding = 0;  // times the cable runs along the companion, >= 2
  long long slope = 0;    // nonzero, coprime to winding; +-1 allowed

  bool operator==(const CableSpace&) const = default;
};

struct ComposingSpace {
  int boundary_count = 0;  // >= 3

  bool operator==(const ComposingSpace&) const = default;
};

using Piece = std::variant<Hyperbolic, TorusKnotExterior, CableSpace, ComposingSpace>;

/// Torus decomposition of a knot exterior: pieces plus the gluing tree.
/// The descriptor is trusted up to the structural invariants checked by
/// validate_jsj and knot_case; realizability as an actual knot exterior is
/// not decided here.
struct KnotJsj {
  bool unknot = false;
  std::vector<Piece> pieces;
  std::set<std::pair<int, int>> gluings;  // unordered piece-index pairs (i < j)
  int boundary_piece = 0;                 // piece containing the knot boundary

  bool operator==(const KnotJsj&) const = default;
};

enum class KnotCase { Unknot, HyperbolicOnly, TorusKnot, MixedNoSS, SSGluing };

std::string_view knot_case_name(KnotCase c);

/// Statements separated by `;` or newline: `torus <r> <s>`, `cable <winding>
/// <slope>`, `composing <boundary_count>`, `hyperbolic`, `glue <i> <j>`,
/// `boundary <i>`, `unknot`. A single-piece descriptor may omit `boundary`.
KnotJsj parse_jsj(std::string_view text);

std::string serialize(const KnotJsj& j);

/// Piece parameters, gluing tree, boundary index, composing-space degrees.
/// Throws BadParameters / NotATree / MissingBoundary.
void validate_jsj(const KnotJsj& j);

bool is_seifert(const Piece& p);

/// Torus knot exterior with an even parameter, or cable space with even
/// winding. Composing spaces are never of even type. Throws NotSeifert.
bool is_even_type(const Piece& p);

/// Some gluing joins two Seifert fibered pieces.
bool has_ss_gluing(const KnotJsj& j);

/// Which clause of the embedding theorems applies. Throws Inconsistent for
/// descriptors that cannot be a knot exterior (e.g. a lone cable space).
KnotCase knot_case(const KnotJsj& j);

bool has_even_seifert_piece(const KnotJsj& j);

}  // namespace traag
