#include "traag/knot_jsj.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace traag {

std::string_view knot_case_name(KnotCase c) {
  switch (c) {
    case KnotCase::Unknot: return "Unknot";
    case KnotCase::HyperbolicOnly: return "HyperbolicOnly";
    case KnotCase::TorusKnot: return "TorusKnot";
    case KnotCase::MixedNoSS: return "MixedNoSS";
    case KnotCase::SSGluing: return "SSGluing";
  }
  return "?";
}

namespace {

long long parse_int(const std::string& tok, const std::string& stmt) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::SyntaxError, "bad integer '" + tok + "' in '" + stmt + "'");
  }
}

void check_piece(const Piece& p) {
  if (auto* t = std::get_if<TorusKnotExterior>(&p)) {
    if (t->r < 2 || t->s < 2)
      throw Error(ErrorCode::BadParameters, "torus knot parameters must be >= 2");
    if (std::gcd(t->r, t->s) != 1)
      throw Error(ErrorCode::BadParameters, "torus knot parameters must be coprime");
  } else if (auto* c = std::get_if<CableSpace>(&p)) {
    if (c->winding < 2) throw Error(ErrorCode::BadParameters, "cable winding must be >= 2");
    if (c->slope == 0) throw Error(ErrorCode::BadParameters, "cable slope must be nonzero");
    if (std::gcd(c->winding, c->slope < 0 ? -c->slope : c->slope) != 1)
      throw Error(ErrorCode::BadParameters, "cable winding and slope must be coprime");
  } else if (auto* m = std::get_if<ComposingSpace>(&p)) {
    if (m->boundary_count < 3)
      throw Error(ErrorCode::BadParameters, "composing space needs >= 3 boundary tori");
  }
}

int degree(const KnotJsj& j, int piece) {
  int d = 0;
  for (auto [a, b] : j.gluings)
    if (a == piece || b == piece) ++d;
  return d;
}

}  // namespace

KnotJsj parse_jsj(std::string_view text) {
  KnotJsj j;
  bool saw_boundary = false;
  bool saw_unknot = false;

  // split on ';' and newlines; '#' comments run to end of line
  std::vector<std::string> stmts;
  std::string cur;
  bool in_comment = false;
  for (char ch : text) {
    if (ch == '\n') in_comment = false;
    else if (ch == '#') in_comment = true;
    if (in_comment) continue;
    if (ch == ';' || ch == '\n') {
      stmts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  stmts.push_back(cur);

  std::vector<std::pair<int, int>> raw_gluings;
  std::vector<int> boundary_stmts;
  for (const std::string& stmt : stmts) {
    std::istringstream in(stmt);
    std::vector<std::string> toks;
    std::string tok;
    while (in >> tok) toks.push_back(tok);
    if (toks.empty()) continue;

    const std::string& kw = toks[0];
    auto want = [&](std::size_t n) {
      if (toks.size() != n + 1)
        throw Error(ErrorCode::SyntaxError, "statement '" + stmt + "'");
    };
    if (kw == "torus") {
      want(2);
      j.pieces.push_back(TorusKnotExterior{parse_int(toks[1], stmt), parse_int(toks[2], stmt)});
    } else if (kw == "cable") {
      want(2);
      j.pieces.push_back(CableSpace{parse_int(toks[1], stmt), parse_int(toks[2], stmt)});
    } else if (kw == "composing") {
      want(1);
      j.pieces.push_back(ComposingSpace{static_cast<int>(parse_int(toks[1], stmt))});
    } else if (kw == "hyperbolic") {
      want(0);
      j.pieces.push_back(Hyperbolic{});
    } else if (kw == "glue") {
      want(2);
      raw_gluings.emplace_back(static_cast<int>(parse_int(toks[1], stmt)),
                               static_cast<int>(parse_int(toks[2], stmt)));
    } else if (kw == "boundary") {
      want(1);
      boundary_stmts.push_back(static_cast<int>(parse_int(toks[1], stmt)));
      saw_boundary = true;
    } else if (kw == "unknot") {
      want(0);
      saw_unknot = true;
    } else {
      throw Error(ErrorCode::SyntaxError, "statement '" + stmt + "'");
    }
  }

  if (saw_unknot) {
    if (!j.pieces.empty() || !raw_gluings.empty() || saw_boundary)
      throw Error(ErrorCode::SyntaxError, "'unknot' admits no other statements");
    j.unknot = true;
    return j;
  }
  if (boundary_stmts.size() > 1)
    throw Error(ErrorCode::SyntaxError, "multiple 'boundary' statements");

  const int n = static_cast<int>(j.pieces.size());
  for (auto [a, b] : raw_gluings) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw Error(ErrorCode::SyntaxError, "glue index out of range");
    j.gluings.insert({std::min(a, b), std::max(a, b)});
  }
  if (saw_boundary) j.boundary_piece = boundary_stmts[0];
  else if (n == 1) j.boundary_piece = 0;  // the only choice
  else if (n > 1)
    throw Error(ErrorCode::MissingBoundary, "multi-piece descriptor needs 'boundary <i>'");

  validate_jsj(j);
  return j;
}

std::string serialize(const KnotJsj& j) {
  if (j.unknot) return "unknot";
  std::ostringstream out;
  for (const Piece& p : j.pieces) {
    if (std::holds_alternative<Hyperbolic>(p)) out << "hyperbolic";
    else if (auto* t = std::get_if<TorusKnotExterior>(&p)) out << "torus " << t->r << ' ' << t->s;
    else if (auto* c = std::get_if<CableSpace>(&p)) out << "cable " << c->winding << ' ' << c->slope;
    else out << "composing " << std::get<ComposingSpace>(p).boundary_count;
    out << " ; ";
  }
  for (auto [a, b] : j.gluings) out << "glue " << a << ' ' << b << " ; ";
  out << "boundary " << j.boundary_piece;
  return out.str();
}

void validate_jsj(const KnotJsj& j) {
  if (j.unknot) {
    if (!j.pieces.empty())
      throw Error(ErrorCode::BadParameters, "unknot descriptor carries no pieces");
    return;
  }
  const int n = static_cast<int>(j.pieces.size());
  if (n == 0) throw Error(ErrorCode::BadParameters, "descriptor has no pieces");
  for (const Piece& p : j.pieces) check_piece(p);
  if (j.boundary_piece < 0 || j.boundary_piece >= n)
    throw Error(ErrorCode::MissingBoundary, "boundary piece index out of range");

  for (auto [a, b] : j.gluings)
    if (a == b) throw Error(ErrorCode::NotATree, "piece glued to itself");

  // the gluing graph must be a tree on the pieces
  if (static_cast<int>(j.gluings.size()) != n - 1)
    throw Error(ErrorCode::NotATree, "gluing graph needs exactly pieces-1 gluings");
  std::vector<int> root(n);
  for (int i = 0; i < n; ++i) root[i] = i;
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (auto [a, b] : j.gluings) {
    if (find(a) == find(b)) throw Error(ErrorCode::NotATree, "gluing graph has a cycle");
    root[find(a)] = find(b);
  }

  for (int i = 0; i < n; ++i) {
    if (auto* m = std::get_if<ComposingSpace>(&j.pieces[i])) {
      int need = m->boundary_count - (i == j.boundary_piece ? 1 : 0);
      if (degree(j, i) != need)
        throw Error(ErrorCode::BadParameters,
                    "composing space piece " + std::to_string(i) + " must have gluing degree " +
                        std::to_string(need));
    }
  }
}

bool is_seifert(const Piece& p) { return !std::holds_alternative<Hyperbolic>(p); }

bool is_even_type(const Piece& p) {
  if (std::holds_alternative<Hyperbolic>(p))
    throw Error(ErrorCode::NotSeifert, "even type is defined for Seifert fibered pieces only");
  if (auto* t = std::get_if<TorusKnotExterior>(&p)) return t->r % 2 == 0 || t->s % 2 == 0;
  if (auto* c = std::get_if<CableSpace>(&p)) return c->winding % 2 == 0;
  return false;  // composing space: no exceptional fiber
}

bool has_ss_gluing(const KnotJsj& j) {
  for (auto [a, b] : j.gluings)
    if (is_seifert(j.pieces[a]) && is_seifert(j.pieces[b])) return true;
  return false;
}

KnotCase knot_case(const KnotJsj& j) {
  if (j.unknot) return KnotCase::Unknot;

  // every boundary torus of a Seifert piece is either the knot boundary or glued
  for (int i = 0; i < static_cast<int>(j.pieces.size()); ++i) {
    const Piece& p = j.pieces[i];
    if (!is_seifert(p)) continue;
    int tori = 0;
    if (std::holds_alternative<TorusKnotExterior>(p)) tori = 1;
    else if (std::holds_alternative<CableSpace>(p)) tori = 2;
    else tori = std::get<ComposingSpace>(p).boundary_count;
    int used = degree(j, i) + (i == j.boundary_piece ? 1 : 0);
    if (used != tori)
      throw Error(ErrorCode::Inconsistent,
                  "piece " + std::to_string(i) + " has " + std::to_string(tori) +
                      " boundary tori but " + std::to_string(used) + " are accounted for");
  }

  if (j.pieces.size() == 1 && std::holds_alternative<TorusKnotExterior>(j.pieces[0]))
    return KnotCase::TorusKnot;
  bool any_seifert = false;
  for (const Piece& p : j.pieces) any_seifert |= is_seifert(p);
  if (!any_seifert) return KnotCase::HyperbolicOnly;
  if (has_ss_gluing(j)) return KnotCase::SSGluing;
  return KnotCase::MixedNoSS;
}

bool has_even_seifert_piece(const KnotJsj& j) {
  for (const Piece& p : j.pieces)
    if (is_seifert(p) && is_even_type(p)) return true;
  return false;
}

}  // namespace traag
