#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "polyhedge/rational.hpp"

namespace polyhedge {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

inline RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline RatVec scaled(const RatVec& a, const Rat& s) {
  RatVec r(a);
  for (auto& x : r) x *= s;
  return r;
}

inline RatVec negated(const RatVec& a) { return scaled(a, Rat(-1)); }

inline bool is_zero(const RatVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline RatVec unit_vec(int dim, int i) {
  RatVec e(dim, Rat(0));
  e[i] = 1;
  return e;
}

inline RatVec mat_vec(const RatMat& m, const RatVec& x) {
  RatVec y;
  y.reserve(m.size());
  for (const auto& row : m) y.push_back(dot(row, x));
  return y;
}

// Strict lexicographic order; used everywhere a deterministic ordering of
// generators or rows is needed.
inline bool lex_less(const RatVec& a, const RatVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return a.size() < b.size();
}

// Scales a nonzero rational vector by a positive factor to the primitive
// integer form (integer entries, gcd 1). Direction is preserved.
inline RatVec primitive(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, denominator(x));
  Int g = 0;
  std::vector<Int> ints;
  ints.reserve(v.size());
  for (const auto& x : v) {
    Int n = numerator(x) * (l / denominator(x));
    ints.push_back(n);
    g = gcd(g, abs(n));
  }
  RatVec out(v.size());
  if (g == 0) return RatVec(v.size(), Rat(0));
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(ints[i] / g);
  return out;
}

inline void sort_dedup_rows(RatMat& rows) {
  std::sort(rows.begin(), rows.end(), lex_less);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

// Row echelon elimination over the rationals. Returns rank; `pivots` (if
// given) collects the original row indices chosen as pivot rows.
inline int row_echelon(RatMat m, std::vector<int>* pivots = nullptr) {
  if (m.empty()) return 0;
  size_t cols = m[0].size();
  std::vector<int> origin(m.size());
  for (size_t i = 0; i < m.size(); ++i) origin[i] = (int)i;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    std::swap(origin[p], origin[r]);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i != r && m[i][c] != 0) {
        Rat f = m[i][c] / m[r][c];
        for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      }
    }
    if (pivots) pivots->push_back(origin[r]);
    ++r;
  }
  return (int)r;
}

inline int rank(const RatMat& m) { return row_echelon(m); }

// Basis of {x : Mx = 0}. For empty M (no rows) returns the standard basis.
inline RatMat kernel_basis(const RatMat& m, int dim) {
  RatMat a(m);
  if (a.empty()) {
    RatMat id;
    for (int i = 0; i < dim; ++i) id.push_back(unit_vec(dim, i));
    return id;
  }
  size_t cols = dim;
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < a.size(); ++c) {
    size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rat d = a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] /= d;
    for (size_t i = 0; i < a.size(); ++i) {
      if (i != r && a[i][c] != 0) {
        Rat f = a[i][c];
        for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      }
    }
    pivot_col.push_back((int)c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  RatMat basis;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    RatVec v(cols, Rat(0));
    v[fc] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][fc];
    basis.push_back(primitive(v));
  }
  return basis;
}

// Inverse of a square matrix; throws if singular.
inline RatMat inverse(RatMat a) {
  size_t n = a.size();
  RatMat inv;
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("inverse: not square");
    inv.push_back(unit_vec((int)n, (int)i));
  }
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("inverse: singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rat d = a[c][c];
    for (size_t j = 0; j < n; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i != c && a[i][c] != 0) {
        Rat f = a[i][c];
        for (size_t j = 0; j < n; ++j) {
          a[i][j] -= f * a[c][j];
          inv[i][j] -= f * inv[c][j];
        }
      }
    }
  }
  return inv;
}

inline RatMat transpose(const RatMat& m) {
  if (m.empty()) return {};
  RatMat t(m[0].size(), RatVec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

}  // namespace polyhedge
