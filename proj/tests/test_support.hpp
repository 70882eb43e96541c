#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "traag/amalgam.hpp"
#include "traag/mixed_graph.hpp"

// expects `expr` to throw traag::Error with the given code
#define TRAAG_CHECK_ERROR(expr, code_)                                        \
  do {                                                                       \
    try {                                                                    \
      (void)(expr);                                                          \
      FAIL("expected " << #code_ << " from " << #expr);                      \
    } catch (const traag::Error& e) {                                        \
      CHECK(traag::error_code_name(e.code()) ==                              \
            traag::error_code_name(traag::ErrorCode::code_));                \
    }                                                                        \
  } while (0)

namespace traag::testing {

inline std::uint64_t test_seed() {
  if (const char* s = std::getenv("TRAAG_SEED")) return std::strtoull(s, nullptr, 10);
  return 20260810ull;
}

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) {
  return std::mt19937_64(test_seed() + salt);
}

/// Random simple mixed graph on up to max_vertices labels v1, v2, ...
/// With force_directed, one pair is made directed (needs >= 2 vertices).
inline MixedGraph random_mixed_graph(std::mt19937_64& rng, int max_vertices,
                                     bool force_directed = false) {
  std::uniform_int_distribution<int> nv(force_directed ? 2 : 0, max_vertices);
  const int n = nv(rng);
  // per-pair state: 0..2 none, 3 undirected, 4 directed i->j, 5 directed j->i
  std::vector<std::vector<int>> state(n, std::vector<int>(n, 0));
  std::uniform_int_distribution<int> st(0, 5);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) state[i][j] = st(rng);
  if (force_directed) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    int i = pick(rng), j = pick(rng);
    while (j == i) j = pick(rng);
    state[std::min(i, j)][std::max(i, j)] = i < j ? 4 : 5;
  }
  MixedGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const std::string a = "v" + std::to_string(i + 1);
      const std::string b = "v" + std::to_string(j + 1);
      switch (state[i][j]) {
        case 3: g.add_undirected(a, b); break;
        case 4: g.add_directed(a, b); break;
        case 5: g.add_directed(b, a); break;
        default: break;
      }
    }
  return g;
}

inline GroupWord random_word(std::mt19937_64& rng, const GroupSpec& spec, int max_letters,
                             int max_exp) {
  std::uniform_int_distribution<int> len(0, max_letters);
  std::uniform_int_distribution<int> gen(0, spec.generator_count() - 1);
  std::uniform_int_distribution<int> exp(-max_exp, max_exp);
  GroupWord w(spec);
  const int L = len(rng);
  for (int i = 0; i < L; ++i) {
    int e = exp(rng);
    if (e == 0) e = 1;
    w.append(gen(rng), e);
  }
  return w;
}

}  // namespace traag::testing
