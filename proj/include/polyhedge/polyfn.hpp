#pragma once

#include <optional>

#include "polyhedge/cone.hpp"
#include "polyhedge/lp.hpp"

namespace polyhedge {

struct MalformedEpigraph : std::logic_error {
  explicit MalformedEpigraph(const std::string& what) : std::logic_error(what) {}
};

// A polyhedral convex function carried by its epigraph
// E = {(x, y) : y >= f(x)} in R^{dom_dim + 1}. Evaluation outside the
// effective domain returns +infinity (empty optional) rather than erroring.
struct PolyFn {
  Polyhedron epi;
  int dom_dim = 0;
};

inline PolyFn make_polyfn(Polyhedron epigraph) {
  PolyFn f;
  f.dom_dim = epigraph.dim - 1;
  f.epi = std::move(epigraph);
  return f;
}

// f(x) = sup{ -x.z : z in p }, the support function of -p. Positively
// homogeneous, so the epigraph is a cone: one row per vertex and ray of p.
inline PolyFn supfun_of_negated_set(const Polyhedron& p) {
  if (is_empty(p)) throw EmptyInput("supfun_of_negated_set: empty set");
  VPoly v = get_v(p);
  int d = p.dim;
  RatMat rows;
  for (const auto& vtx : v.verts) {
    RatVec row = vtx;  // y + v.x >= 0
    row.push_back(Rat(1));
    rows.push_back(primitive(row));
  }
  for (const auto& ray : v.rays) {
    RatVec row = ray;  // r.x >= 0 (domain face)
    row.push_back(Rat(0));
    rows.push_back(primitive(row));
  }
  sort_dedup_rows(rows);
  RatMat A;
  RatVec r;
  for (auto& row : rows) {
    A.push_back(std::move(row));
    r.push_back(Rat(0));
  }
  PolyFn f;
  f.dom_dim = d;
  f.epi = dd_convert(from_h(std::move(A), std::move(r), d + 1));
  return f;
}

// Exact f(x) from the inequality rows of the epigraph; +infinity (nullopt)
// when x is outside dom f. Rows must have nonnegative y-coefficients, which
// is exactly the upward-recession invariant of an epigraph.
inline std::optional<Rat> polyfn_eval(const PolyFn& f, const RatVec& x) {
  if ((int)x.size() != f.dom_dim) throw DimensionMismatch("polyfn_eval");
  HPoly h = get_h(f.epi);
  if (h.A.size() == 1 && is_zero(h.A[0]) && h.r[0] > 0) return std::nullopt;  // f == +inf
  bool bounded_below = false;
  std::optional<Rat> best;
  for (size_t i = 0; i < h.A.size(); ++i) {
    Rat ycoef = h.A[i].back();
    if (ycoef < 0) throw MalformedEpigraph("epigraph lacks the upward recession direction");
    RatVec a(h.A[i].begin(), h.A[i].end() - 1);
    Rat lhs = dot(a, x);
    if (ycoef == 0) {
      if (lhs < h.r[i]) return std::nullopt;  // outside dom f
    } else {
      Rat bound = (h.r[i] - lhs) / ycoef;
      if (!best || bound > *best) best = bound;
      bounded_below = true;
    }
  }
  if (!bounded_below) throw MalformedEpigraph("function unbounded below on its domain");
  return best;
}

// Restriction to a cone: f on c, +infinity outside; epigraph intersected
// with c x R.
inline PolyFn restrict_domain(const PolyFn& f, const Cone& c) {
  if (c.dim() != f.dom_dim) throw DimensionMismatch("restrict_domain");
  RatMat extra;
  RatVec rhs;
  for (const auto& row : cone_rows(c)) {
    RatVec r = row;
    r.push_back(Rat(0));
    extra.push_back(std::move(r));
    rhs.push_back(Rat(0));
  }
  PolyFn out;
  out.dom_dim = f.dom_dim;
  out.epi = intersect_rows(f.epi, extra, rhs);
  return out;
}

inline bool polyfn_equal(const PolyFn& f, const PolyFn& g) { return set_equal(f.epi, g.epi); }

}  // namespace polyhedge
