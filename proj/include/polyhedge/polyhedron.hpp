#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "polyhedge/linalg.hpp"

namespace polyhedge {

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct EmptyInput : std::invalid_argument {
  explicit EmptyInput(const std::string& what) : std::invalid_argument(what) {}
};

// Inequality representation {x : A x >= r}. Zero rows means the whole space;
// an infeasible system is a legitimate value (the empty set).
struct HPoly {
  RatMat A;
  RatVec r;
  int dim = 0;
};

// Generator representation conv(verts) + cone(rays). The set is empty iff
// `verts` is empty; lines appear as opposite ray pairs.
struct VPoly {
  RatMat verts;
  RatMat rays;
  int dim = 0;
};

namespace detail {

// Tight-row bookkeeping for the double description run; one bit per
// processed constraint.
struct Bits {
  std::vector<std::uint64_t> w;
  void resize(size_t n) { w.assign((n + 63) / 64, 0); }
  void set(size_t i) { w[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  bool subset_of(const Bits& o) const {
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
};

// Extreme rays of the pointed cone {x : Mx >= 0}; requires rank(M) == n.
// Classic double description (Motzkin) with the combinatorial adjacency
// test of Fukuda & Prodon, seeded from a simplicial subcone.
inline RatMat dd_pointed(const RatMat& M, int n) {
  if (n == 0) return {};
  std::vector<int> pivots;
  if (row_echelon(M, &pivots) != n)
    throw std::logic_error("dd_pointed: cone is not pointed");
  pivots.resize(n);

  RatMat basis;
  for (int i : pivots) basis.push_back(M[i]);
  RatMat binv = inverse(basis);

  std::vector<int> order = pivots;  // processing order: basis rows first
  std::vector<char> used(M.size(), 0);
  for (int i : pivots) used[i] = 1;
  for (size_t i = 0; i < M.size(); ++i)
    if (!used[i]) order.push_back((int)i);

  RatMat rays;
  for (int j = 0; j < n; ++j) {
    RatVec col(n);
    for (int i = 0; i < n; ++i) col[i] = binv[i][j];
    rays.push_back(primitive(col));
  }

  size_t total = order.size();
  auto recompute_tight = [&](const RatVec& ray, size_t processed) {
    Bits b;
    b.resize(total);
    for (size_t k = 0; k < processed; ++k)
      if (dot(M[order[k]], ray) == 0) b.set(k);
    return b;
  };
  std::vector<Bits> tight(rays.size());
  for (size_t j = 0; j < rays.size(); ++j) tight[j] = recompute_tight(rays[j], n);

  for (size_t k = n; k < total; ++k) {
    const RatVec& a = M[order[k]];
    std::vector<Rat> s(rays.size());
    std::vector<size_t> pos, zer, neg;
    for (size_t j = 0; j < rays.size(); ++j) {
      s[j] = dot(a, rays[j]);
      if (s[j] > 0)
        pos.push_back(j);
      else if (s[j] == 0)
        zer.push_back(j);
      else
        neg.push_back(j);
    }
    if (neg.empty()) {
      for (size_t j : zer) tight[j].set(k);
      continue;
    }
    RatMat next;
    std::vector<Bits> next_tight;
    for (size_t j : pos) {
      next.push_back(rays[j]);
      next_tight.push_back(tight[j]);
    }
    for (size_t j : zer) {
      tight[j].set(k);
      next.push_back(rays[j]);
      next_tight.push_back(tight[j]);
    }
    for (size_t p : pos) {
      for (size_t q : neg) {
        // adjacency: no third ray tight on every constraint tight at both
        Bits common;
        common.resize(total);
        for (size_t wd = 0; wd < common.w.size(); ++wd)
          common.w[wd] = tight[p].w[wd] & tight[q].w[wd];
        bool adjacent = true;
        for (size_t j = 0; j < rays.size() && adjacent; ++j)
          if (j != p && j != q && common.subset_of(tight[j])) adjacent = false;
        if (!adjacent) continue;
        RatVec combo = primitive(sub(scaled(rays[q], s[p]), scaled(rays[p], s[q])));
        if (is_zero(combo)) continue;
        next.push_back(combo);
        next_tight.push_back(recompute_tight(combo, k + 1));
      }
    }
    rays = std::move(next);
    tight = std::move(next_tight);
  }
  return rays;
}

}  // namespace detail

// Generators of the cone {x : Mx >= 0} in R^dim. Lines (the lineality space)
// come out as opposite ray pairs. Non-pointed cones are handled by splitting
// off the lineality space and running the pointed case in its complement.
inline RatMat cone_generators(const RatMat& M, int dim) {
  if (dim == 0) return {};
  RatMat lines = kernel_basis(M, dim);
  RatMat gens;
  for (const auto& l : lines) {
    gens.push_back(primitive(l));
    gens.push_back(primitive(negated(l)));
  }
  if ((int)lines.size() == dim) return gens;  // whole space
  if (lines.empty()) return detail::dd_pointed(M, dim);
  // complement of the lineality space; the cone splits as L + (C ∩ L^perp)
  RatMat comp = kernel_basis(lines, dim);
  int sub = (int)comp.size();
  RatMat Qt = transpose(comp);  // dim x sub
  RatMat Msub;
  Msub.reserve(M.size());
  for (const auto& row : M) {
    RatVec r(sub, Rat(0));
    for (int j = 0; j < sub; ++j)
      for (int i = 0; i < dim; ++i)
        if (row[i] != 0 && Qt[i][j] != 0) r[j] += row[i] * Qt[i][j];
    Msub.push_back(std::move(r));
  }
  for (const auto& y : detail::dd_pointed(Msub, sub)) {
    RatVec x(dim, Rat(0));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < sub; ++j) x[i] += Qt[i][j] * y[j];
    gens.push_back(primitive(x));
  }
  return gens;
}

// Conversions run on the homogenization cone in R^{d+1}.

inline VPoly h_to_v(const HPoly& h) {
  int d = h.dim;
  RatMat M;
  for (size_t i = 0; i < h.A.size(); ++i) {
    RatVec row = h.A[i];
    row.push_back(-h.r[i]);
    M.push_back(std::move(row));
  }
  M.push_back(unit_vec(d + 1, d));  // t >= 0
  RatMat gens = cone_generators(M, d + 1);
  VPoly v;
  v.dim = d;
  bool any_vertex = false;
  for (const auto& g : gens)
    if (g[d] > 0) any_vertex = true;
  if (!any_vertex) return v;  // empty set
  for (const auto& g : gens) {
    if (g[d] > 0) {
      RatVec p(d);
      for (int i = 0; i < d; ++i) p[i] = g[i] / g[d];
      v.verts.push_back(std::move(p));
    } else {
      RatVec p(g.begin(), g.begin() + d);
      if (!is_zero(p)) v.rays.push_back(primitive(p));
    }
  }
  sort_dedup_rows(v.verts);
  sort_dedup_rows(v.rays);
  return v;
}

inline HPoly v_to_h(const VPoly& v) {
  int d = v.dim;
  HPoly h;
  h.dim = d;
  if (v.verts.empty()) {  // empty set: canonical infeasible system
    h.A.push_back(RatVec(d, Rat(0)));
    h.r.push_back(Rat(1));
    return h;
  }
  RatMat M;
  for (const auto& p : v.verts) {
    RatVec row = p;
    row.push_back(Rat(1));
    M.push_back(std::move(row));
  }
  for (const auto& p : v.rays) {
    RatVec row = p;
    row.push_back(Rat(0));
    M.push_back(std::move(row));
  }
  // generators (a, c) of the polar of the homogenization give facets a.x >= -c
  RatMat rows;
  for (const auto& g : cone_generators(M, d + 1)) {
    RatVec a(g.begin(), g.begin() + d);
    if (is_zero(a)) continue;  // the trivial row 1 >= 0
    RatVec row = a;
    row.push_back(g[d]);
    rows.push_back(primitive(row));
  }
  sort_dedup_rows(rows);
  for (const auto& row : rows) {
    h.A.push_back(RatVec(row.begin(), row.begin() + d));
    h.r.push_back(-row[d]);
  }
  return h;
}

// A polyhedron value carrying one or both representations of the same set.
// All operations produce canonical values: minimal facet system, extreme
// generators, deterministically ordered.
struct Polyhedron {
  std::optional<HPoly> hrep;
  std::optional<VPoly> vrep;
  int dim = 0;

  bool has_h() const { return hrep.has_value(); }
  bool has_v() const { return vrep.has_value(); }
};

inline Polyhedron from_h(RatMat A, RatVec r, int dim) {
  Polyhedron p;
  p.dim = dim;
  p.hrep = HPoly{std::move(A), std::move(r), dim};
  return p;
}

inline Polyhedron from_v(RatMat verts, RatMat rays, int dim) {
  Polyhedron p;
  p.dim = dim;
  p.vrep = VPoly{std::move(verts), std::move(rays), dim};
  return p;
}

// Ensures both representations are present and canonical. The freshly
// derived representation is recomputed back so that redundant input rows or
// generators are gone; idempotent afterwards.
inline Polyhedron dd_convert(const Polyhedron& p) {
  if (!p.has_h() && !p.has_v()) throw std::invalid_argument("dd_convert: no representation");
  Polyhedron out;
  out.dim = p.dim;
  if (p.has_v()) {
    HPoly h = v_to_h(*p.vrep);
    out.vrep = h_to_v(h);
    out.hrep = v_to_h(*out.vrep);
  } else {
    VPoly v = h_to_v(*p.hrep);
    out.hrep = v_to_h(v);
    out.vrep = h_to_v(*out.hrep);
  }
  return out;
}

inline const HPoly& need_h(Polyhedron& p) {
  if (!p.has_h()) p = dd_convert(p);
  return *p.hrep;
}

inline const VPoly& need_v(Polyhedron& p) {
  if (!p.has_v()) p = dd_convert(p);
  return *p.vrep;
}

inline HPoly get_h(const Polyhedron& p) {
  if (p.has_h()) return *p.hrep;
  return *dd_convert(p).hrep;
}

inline VPoly get_v(const Polyhedron& p) {
  if (p.has_v()) return *p.vrep;
  return *dd_convert(p).vrep;
}

inline bool is_empty(const Polyhedron& p) {
  if (p.has_v()) return p.vrep->verts.empty();
  return get_v(p).verts.empty();
}

inline bool contains(const Polyhedron& p, const RatVec& x) {
  if ((int)x.size() != p.dim) throw DimensionMismatch("contains: point dimension");
  HPoly h = get_h(p);
  for (size_t i = 0; i < h.A.size(); ++i)
    if (dot(h.A[i], x) < h.r[i]) return false;
  return true;
}

// Recession-cone membership: every H-row is a valid inequality at +infinity.
inline bool recession_contains(const Polyhedron& p, const RatVec& ray) {
  HPoly h = get_h(p);
  for (const auto& row : h.A)
    if (dot(row, ray) < 0) return false;
  return true;
}

// Mutual containment of generators; exact and robust to non-unique
// representations of degenerate sets.
inline bool subset_of(const Polyhedron& p, const Polyhedron& q) {
  if (p.dim != q.dim) throw DimensionMismatch("subset_of");
  VPoly pv = get_v(p);
  if (pv.verts.empty()) return true;
  if (is_empty(q)) return false;
  for (const auto& vtx : pv.verts)
    if (!contains(q, vtx)) return false;
  for (const auto& ray : pv.rays)
    if (!recession_contains(q, ray)) return false;
  return true;
}

inline bool set_equal(const Polyhedron& p, const Polyhedron& q) {
  return subset_of(p, q) && subset_of(q, p);
}

// Intersection: concatenate inequality systems, then canonicalize (the dd
// round trip removes every redundant row).
inline Polyhedron intersect(const Polyhedron& p, const Polyhedron& q) {
  if (p.dim != q.dim) throw DimensionMismatch("intersect");
  HPoly a = get_h(p), b = get_h(q);
  RatMat A = a.A;
  RatVec r = a.r;
  A.insert(A.end(), b.A.begin(), b.A.end());
  r.insert(r.end(), b.r.begin(), b.r.end());
  return dd_convert(from_h(std::move(A), std::move(r), p.dim));
}

inline Polyhedron intersect_rows(const Polyhedron& p, const RatMat& A2, const RatVec& r2) {
  HPoly a = get_h(p);
  RatMat A = a.A;
  RatVec r = a.r;
  A.insert(A.end(), A2.begin(), A2.end());
  r.insert(r.end(), r2.begin(), r2.end());
  return dd_convert(from_h(std::move(A), std::move(r), p.dim));
}

// Exact orthogonal projection onto the kept coordinates, via the generator
// representation (coordinate images of vertices and rays).
inline Polyhedron project(const Polyhedron& p, const std::vector<int>& keep) {
  for (int k : keep)
    if (k < 0 || k >= p.dim) throw DimensionMismatch("project: bad coordinate");
  VPoly v = get_v(p);
  VPoly out;
  out.dim = (int)keep.size();
  for (const auto& vtx : v.verts) {
    RatVec w;
    w.reserve(keep.size());
    for (int k : keep) w.push_back(vtx[k]);
    out.verts.push_back(std::move(w));
  }
  for (const auto& ray : v.rays) {
    RatVec w;
    w.reserve(keep.size());
    for (int k : keep) w.push_back(ray[k]);
    if (!is_zero(w)) out.rays.push_back(primitive(w));
  }
  sort_dedup_rows(out.verts);
  sort_dedup_rows(out.rays);
  if (out.verts.empty()) return from_v({}, {}, out.dim);
  return dd_convert(from_v(out.verts, out.rays, out.dim));
}

// Image under x -> Mx (+ offset); exact via generators.
inline Polyhedron linear_image(const Polyhedron& p, const RatMat& M, const RatVec* offset = nullptr) {
  VPoly v = get_v(p);
  int out_dim = (int)M.size();
  VPoly out;
  out.dim = out_dim;
  for (const auto& vtx : v.verts) {
    RatVec w = mat_vec(M, vtx);
    if (offset) w = add(w, *offset);
    out.verts.push_back(std::move(w));
  }
  for (const auto& ray : v.rays) {
    RatVec w = mat_vec(M, ray);
    if (!is_zero(w)) out.rays.push_back(primitive(w));
  }
  sort_dedup_rows(out.verts);
  sort_dedup_rows(out.rays);
  if (out.verts.empty()) return from_v({}, {}, out_dim);
  return dd_convert(from_v(out.verts, out.rays, out_dim));
}

inline Polyhedron translate(const Polyhedron& p, const RatVec& t) {
  if ((int)t.size() != p.dim) throw DimensionMismatch("translate");
  Polyhedron out;
  out.dim = p.dim;
  if (p.has_v()) {
    VPoly v = *p.vrep;
    for (auto& vtx : v.verts) vtx = add(vtx, t);
    sort_dedup_rows(v.verts);
    out.vrep = std::move(v);
  }
  if (p.has_h()) {
    HPoly h = *p.hrep;
    for (size_t i = 0; i < h.A.size(); ++i) h.r[i] += dot(h.A[i], t);
    out.hrep = std::move(h);
  }
  return out;
}

// Smallest closed polyhedral convex set containing every input: union of
// generators. For cones this is the Minkowski sum of the cones.
inline Polyhedron convex_hull_union(const std::vector<Polyhedron>& ps) {
  if (ps.empty()) throw EmptyInput("convex_hull_union: empty list");
  int dim = ps[0].dim;
  VPoly acc;
  acc.dim = dim;
  for (const auto& p : ps) {
    if (p.dim != dim) throw DimensionMismatch("convex_hull_union");
    VPoly v = get_v(p);
    acc.verts.insert(acc.verts.end(), v.verts.begin(), v.verts.end());
    acc.rays.insert(acc.rays.end(), v.rays.begin(), v.rays.end());
  }
  sort_dedup_rows(acc.verts);
  sort_dedup_rows(acc.rays);
  if (acc.verts.empty()) return from_v({}, {}, dim);
  return dd_convert(from_v(acc.verts, acc.rays, dim));
}

}  // namespace polyhedge
