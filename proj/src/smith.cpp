#include "traag/smith.hpp"

#include <algorithm>
#include <cstddef>

namespace traag {

namespace {

using boost::multiprecision::abs;

// true if some entry of m[t..][t..] is nonzero; reports the one of least |value|
bool find_pivot(const IntMatrix& m, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best = 0;
  for (std::size_t i = t; i < m.size(); ++i)
    for (std::size_t j = t; j < m[i].size(); ++j)
      if (m[i][j] != 0 && (!found || abs(m[i][j]) < best)) {
        best = abs(m[i][j]);
        pi = i;
        pj = j;
        found = true;
      }
  return found;
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

std::vector<Int> smith_normal_form(IntMatrix m) {
  std::vector<Int> out;
  if (m.empty() || m[0].empty()) return out;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  const std::size_t rank_bound = std::min(rows, cols);

  for (std::size_t t = 0; t < rank_bound; ++t) {
    std::size_t pi = t, pj = t;
    if (!find_pivot(m, t, pi, pj)) break;
    std::swap(m[pi], m[t]);
    swap_cols(m, pj, t);

    bool clean = false;
    while (!clean) {
      clean = true;
      // clear column t; a nonzero remainder becomes the smaller pivot
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Int q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[i], m[t]);
          clean = false;
        }
      }
      if (!clean) continue;
      // clear row t
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Int q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          swap_cols(m, j, t);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide the rest of the submatrix for the divisor chain
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols && clean; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            clean = false;
          }
    }
    if (m[t][t] < 0) m[t][t] = -m[t][t];
    out.push_back(m[t][t]);
  }
  return out;
}

}  // namespace traag
